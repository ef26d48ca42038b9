#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stone/hom_z2.hpp"
#include "stone/term.hpp"

using namespace stone;

TEST_CASE("function space of the two-element algebra") {
    BoolAlgebra z2 = BoolAlgebra::z2();
    FunctionSpace fs = function_space(z2);
    CHECK(fs.point_count == 4);
    REQUIRE(fs.materialized);
    SpaceAxioms ax = check_axioms(fs.space);
    CHECK(ax.stone);
    CHECK(fs.space.opens.size() == 16);  // discrete on 4 points
}

TEST_CASE("subbasis sets partition the space") {
    BoolAlgebra b = BoolAlgebra::power_set(2);
    FunctionSpace fs = function_space(b);
    for (Elem a = 0; a < b.size(); ++a) {
        Bitset z = fs.zero_set(a), o = fs.one_set(a);
        CHECK((z & o).none());
        CHECK((z | o) == Bitset::full(fs.point_count));
    }
}

TEST_CASE("function space guard") {
    CHECK_THROWS_AS(function_space(BoolAlgebra::power_set(5)), SizeGuard);
}

TEST_CASE("all homomorphisms") {
    BoolAlgebra z2 = BoolAlgebra::z2();
    CHECK(all_homs(BoolAlgebra::power_set(3), z2).size() == 3);

    auto only = all_homs(z2, z2);
    REQUIRE(only.size() == 1);
    CHECK(only[0].map == std::vector<Elem>{0, 1});

    Presentation p({"a", "b"}, {});
    CHECK(all_homs(p.algebra(), z2).size() == 4);
}

TEST_CASE("homomorphisms preserve complement") {
    BoolAlgebra b = BoolAlgebra::power_set(3);
    BoolAlgebra z2 = BoolAlgebra::z2();
    for (const auto& h : all_homs(b, z2))
        for (Elem x = 0; x < b.size(); ++x)
            CHECK(h(b.complement(x)) == z2.complement(h(x)));
}

TEST_CASE("hom count equals atom count") {
    BoolAlgebra z2 = BoolAlgebra::z2();
    Presentation rel({"a", "b"}, {{parse("a * b"), make_zero()}});
    std::vector<const BoolAlgebra*> algs = {&rel.algebra(), &z2};
    for (const BoolAlgebra* b : algs)
        CHECK(all_homs(*b, z2).size() == b->atom_count());
}

TEST_CASE("closedness of Hom inside the function space") {
    CHECK(hom_closedness_check(BoolAlgebra::z2()));
    CHECK(hom_closedness_check(BoolAlgebra::power_set(2)));
    Presentation p({"a"}, {});
    CHECK(hom_closedness_check(p.algebra()));
}

TEST_CASE("homeomorphism with the ultrafilter space") {
    DualityCertificate c = hom_ultra_homeo(BoolAlgebra::power_set(2));
    CHECK(c.kind == "hom_ultra_homeo");
    CHECK(c.witness.size() == 2);
    CHECK(hom_ultra_homeo(BoolAlgebra::z2()).witness.size() == 1);
    Presentation p({"a", "b"}, {});
    CHECK(hom_ultra_homeo(p.algebra()).witness.size() == 4);
}

TEST_CASE("hom listing") {
    BoolAlgebra b = BoolAlgebra::power_set(2);
    BoolAlgebra z2 = BoolAlgebra::z2();
    auto hs = all_homs(b, z2);
    REQUIRE(hs.size() == 2);
    CHECK(hom_line(hs[0]) == "{0}, {0,1}");
    CHECK(hom_line(hs[1]) == "{1}, {0,1}");
}
