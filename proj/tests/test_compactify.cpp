#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "stone/compactify.hpp"
#include "stone/duality.hpp"

using namespace stone;

namespace {

Bitset bits(std::size_t n, std::initializer_list<std::size_t> pts) {
    Bitset s(n);
    for (auto p : pts) s.set(p);
    return s;
}

} // namespace

TEST_CASE("sub-algebra generation and separation") {
    BoolAlgebra full = subalgebra(3, {bits(3, {0}), bits(3, {1})});
    CHECK(full.size() == 8);
    CHECK(separates_points(full));

    BoolAlgebra trivial = subalgebra(2, {});
    CHECK(trivial.size() == 2);
    CHECK_FALSE(separates_points(trivial));

    // Generated by {{0,1},{2}}: 0 and 1 stay inseparable.
    BoolAlgebra coarse = subalgebra(3, {bits(3, {0, 1}), bits(3, {2})});
    CHECK(coarse.size() == 4);
    CHECK_FALSE(separates_points(coarse));
}

TEST_CASE("compactification of a finite discrete space") {
    BoolAlgebra full = subalgebra(3, {bits(3, {0}), bits(3, {1})});
    Compactification c = compactify(full);
    CHECK(c.stone.space.points == 3);
    std::set<std::size_t> image(c.embedding.begin(), c.embedding.end());
    CHECK(image.size() == 3);

    BoolAlgebra one = subalgebra(1, {});
    CHECK(compactify(one).stone.space.points == 1);

    BoolAlgebra coarse = subalgebra(3, {bits(3, {0, 1})});
    CHECK_THROWS_AS(compactify(coarse), DoesNotSeparate);
}

TEST_CASE("cofinite element parsing and printing") {
    CofiniteElement a = CofiniteElement::parse("fin{3,5}");
    CHECK_FALSE(a.cofinite);
    CHECK(a.labels == std::set<std::uint32_t>{3, 5});
    CHECK(a.str() == "fin{3,5}");
    CofiniteElement b = CofiniteElement::parse("cofin{3,5}");
    CHECK(b.cofinite);
    CHECK(b.str() == "cofin{3,5}");
    CHECK(CofiniteElement::parse("fin{}").str() == "fin{}");
    CHECK_THROWS_AS(CofiniteElement::parse("set{1}"), InputError);
    CHECK_THROWS_AS(CofiniteElement::parse("fin{1,x}"), InputError);
}

TEST_CASE("one point membership") {
    CofiniteElement fin = CofiniteElement::parse("fin{3,5}");
    CHECK(member(CofinitePoint::parse("3"), fin));
    CHECK(member(CofinitePoint::parse("5"), fin));
    CHECK_FALSE(member(CofinitePoint::parse("4"), fin));
    CHECK_FALSE(member(CofinitePoint::parse("inf"), fin));

    CofiniteElement cof = CofiniteElement::parse("cofin{3,5}");
    CHECK(member(CofinitePoint::parse("inf"), cof));
    CHECK(member(CofinitePoint::parse("4"), cof));
    CHECK_FALSE(member(CofinitePoint::parse("3"), cof));

    CHECK(one_point_ultrafilters().non_principal_count == 1);
}

TEST_CASE("tagged operations against a set-theoretic oracle") {
    // Oracle universe {0..63}; labels kept below 32 so cofinite tails are
    // represented faithfully for every query point below 64.
    std::mt19937 rng(11);
    auto random_elt = [&]() {
        CofiniteElement e;
        e.cofinite = rng() % 2;
        for (int i = static_cast<int>(rng() % 5); i > 0; --i)
            e.labels.insert(rng() % 32);
        return e;
    };
    auto concrete = [](const CofiniteElement& e) {
        Bitset s(64);
        for (std::uint32_t p = 0; p < 64; ++p) {
            bool listed = e.labels.count(p) != 0;
            if (e.cofinite ? !listed : listed) s.set(p);
        }
        return s;
    };
    for (int i = 0; i < 500; ++i) {
        CofiniteElement a = random_elt(), b = random_elt();
        CHECK(concrete(a.join(b)) == (concrete(a) | concrete(b)));
        CHECK(concrete(a.meet(b)) == (concrete(a) & concrete(b)));
        CHECK(concrete(a.complement()) == ~concrete(a));
        CHECK(a.complement().complement() == a);
        // De Morgan on tags.
        CHECK(a.join(b).complement() == a.complement().meet(b.complement()));
    }
}

TEST_CASE("stone cech extension at finite scale") {
    BoolAlgebra p2 = BoolAlgebra::power_set(2);
    TopSpace k2 = discrete_space(2);
    StoneCechExtension id = stone_cech_extend(p2, {0, 1}, k2);
    for (std::size_t x = 0; x < 2; ++x)
        CHECK(id.extension[id.embedding[x]] == x);

    StoneCechExtension konst = stone_cech_extend(p2, {1, 1}, k2);
    for (auto v : konst.extension)
        CHECK(v == 1);

    BoolAlgebra p3 = BoolAlgebra::power_set(3);
    StoneCechExtension ind = stone_cech_extend(p3, {1, 0, 0}, k2);
    for (std::size_t x = 0; x < 3; ++x)
        CHECK(ind.extension[ind.embedding[x]] == (x == 0 ? 1 : 0));
}

TEST_CASE("stone cech preconditions") {
    BoolAlgebra p2 = BoolAlgebra::power_set(2);
    CHECK_THROWS_AS(stone_cech_extend(p2, {0, 1}, indiscrete_space(2)), PreconditionFailed);
    CHECK_THROWS_AS(stone_cech_extend(p2, {0}, discrete_space(2)), InputError);
    CHECK_THROWS_AS(stone_cech_extend(p2, {0, 5}, discrete_space(2)), InputError);
}

TEST_CASE("recovering the algebra from a compactification") {
    TopSpace d2 = discrete_space(2);
    BoolAlgebra b = compactification_from_space(d2, Bitset::full(2));
    CHECK(b.size() == 4);

    TopSpace d3 = discrete_space(3);
    BoolAlgebra b3 = compactification_from_space(d3, Bitset::full(3));
    CHECK(b3.size() == 8);
    Compactification round = compactify(b3);
    CHECK(round.stone.space.points == 3);
    CHECK(spaces_homeomorphic(round.stone.space, d3));

    CHECK_THROWS_AS(compactification_from_space(d2, bits(2, {0})), PreconditionFailed);
}

TEST_CASE("domination") {
    BoolAlgebra by = subalgebra(3, {bits(3, {0}), bits(3, {1})});
    Domination idd = domination(by, by);
    CHECK(idd.comparable);
    for (std::size_t j = 0; j < idd.map.size(); ++j)
        CHECK(idd.map[j] == j);

    BoolAlgebra bz = subalgebra(3, {bits(3, {0})});
    Domination d = domination(bz, by);
    CHECK(d.comparable);
    CHECK(d.from.space.points == 3);
    CHECK(d.to.space.points == 2);

    BoolAlgebra other = subalgebra(3, {bits(3, {1})});
    Domination ref = domination(other, bz);
    CHECK_FALSE(ref.comparable);
    CHECK(ref.witness == "{1}");
}

TEST_CASE("domination composes transitively") {
    BoolAlgebra b1 = subalgebra(4, {bits(4, {0, 1})});
    BoolAlgebra b2 = subalgebra(4, {bits(4, {0, 1}), bits(4, {2})});
    BoolAlgebra b3 = subalgebra(4, {bits(4, {0}), bits(4, {1}), bits(4, {2})});
    Domination d21 = domination(b1, b2);
    Domination d32 = domination(b2, b3);
    Domination d31 = domination(b1, b3);
    REQUIRE(d21.comparable);
    REQUIRE(d32.comparable);
    REQUIRE(d31.comparable);
    for (std::size_t j = 0; j < d31.map.size(); ++j)
        CHECK(d31.map[j] == d21.map[d32.map[j]]);
}
