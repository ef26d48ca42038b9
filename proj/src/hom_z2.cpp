#include "stone/hom_z2.hpp"

#include <algorithm>

namespace stone {

namespace {

// f encoded as a carrier-indexed bitmask: bit x = f(x).
bool fn_value(std::uint32_t f, Elem x) { return (f >> x) & 1; }

Bitset value_set(std::size_t points, Elem a, bool v) {
    Bitset s(points);
    for (std::uint32_t f = 0; f < points; ++f)
        if (fn_value(f, a) == v) s.set(f);
    return s;
}

bool is_hom_mask(const BoolAlgebra& b, std::uint32_t f) {
    if (fn_value(f, b.zero()) || !fn_value(f, b.one())) return false;
    for (Elem x = 0; x < b.size(); ++x)
        for (Elem y = 0; y < b.size(); ++y) {
            if (fn_value(f, b.join(x, y)) != (fn_value(f, x) || fn_value(f, y))) return false;
            if (fn_value(f, b.meet(x, y)) != (fn_value(f, x) && fn_value(f, y))) return false;
        }
    return true;
}

} // namespace

Bitset FunctionSpace::zero_set(Elem a) const { return value_set(point_count, a, false); }
Bitset FunctionSpace::one_set(Elem a) const { return value_set(point_count, a, true); }

FunctionSpace function_space(const BoolAlgebra& b) {
    if (b.size() > 16)
        throw SizeGuard("function space is limited to carriers of 16 elements");
    FunctionSpace fs;
    fs.algebra = &b;
    fs.point_count = std::size_t{1} << b.size();
    if (b.size() <= 4) {
        std::vector<Bitset> subbasis;
        for (Elem a = 0; a < b.size(); ++a) {
            subbasis.push_back(fs.zero_set(a));
            subbasis.push_back(fs.one_set(a));
        }
        fs.space = space_from_basis(fs.point_count, subbasis);
        fs.materialized = true;
        // 0_a and 1_a partition the space into complementary clopens.
        for (Elem a = 0; a < b.size(); ++a) {
            Bitset z = fs.zero_set(a), o = fs.one_set(a);
            if ((z & o).any() || (z | o) != Bitset::full(fs.point_count))
                throw AxiomViolation("0_a and 1_a do not partition 2^B");
            if (!fs.space.is_clopen(z) || !fs.space.is_clopen(o))
                throw AxiomViolation("subbasis sets are not clopen");
        }
    }
    return fs;
}

std::vector<Homomorphism> all_homs(const BoolAlgebra& b, const BoolAlgebra& z2) {
    std::vector<Homomorphism> out;
    for (const auto& u : all_ultrafilters(b))
        out.push_back(ultra_to_hom(u, z2));
    return out;
}

bool hom_closedness_check(const BoolAlgebra& b) {
    FunctionSpace fs = function_space(b);
    const std::size_t n = fs.point_count;

    // Route 1: direct law filtering.
    Bitset direct(n);
    for (std::uint32_t f = 0; f < n; ++f)
        if (is_hom_mask(b, f)) direct.set(f);

    // Route 2: the constraint-set decomposition. Each A-set is a union of
    // triple intersections of subbasis sets, one per satisfying row of the
    // Z2 truth table of the operation.
    auto vset = [&](Elem a, bool v) { return v ? fs.one_set(a) : fs.zero_set(a); };
    Bitset hom = vset(b.zero(), false) & vset(b.one(), true);
    static const bool or_rows[4][3] = {{false, false, false},
                                       {true, true, false},
                                       {true, false, true},
                                       {true, true, true}};
    static const bool and_rows[4][3] = {{false, false, false},
                                        {false, true, false},
                                        {false, false, true},
                                        {true, true, true}};
    for (Elem a = 0; a < b.size(); ++a)
        for (Elem c = 0; c < b.size(); ++c) {
            Bitset a_join(n);
            for (const auto& row : or_rows)
                a_join |= vset(b.join(a, c), row[0]) & vset(a, row[1]) & vset(c, row[2]);
            Bitset a_meet(n);
            for (const auto& row : and_rows)
                a_meet |= vset(b.meet(a, c), row[0]) & vset(a, row[1]) & vset(c, row[2]);
            hom &= a_join & a_meet;
        }

    if (hom != direct) return false;

    // Closedness: around every non-homomorphism, the cylinder fixing the
    // three coordinates of a violated law misses Hom entirely, so the
    // complement is a union of basic opens.
    for (std::uint32_t f = 0; f < n; ++f) {
        if (hom.test(f)) continue;
        Bitset cyl(n);
        bool found = false;
        if (fn_value(f, b.zero()))
            cyl = vset(b.zero(), true), found = true;
        else if (!fn_value(f, b.one()))
            cyl = vset(b.one(), false), found = true;
        for (Elem x = 0; !found && x < b.size(); ++x)
            for (Elem y = 0; y < b.size(); ++y) {
                Elem j = b.join(x, y), m = b.meet(x, y);
                if (fn_value(f, j) != (fn_value(f, x) || fn_value(f, y))) {
                    cyl = vset(j, fn_value(f, j)) & vset(x, fn_value(f, x)) &
                          vset(y, fn_value(f, y));
                    found = true;
                    break;
                }
                if (fn_value(f, m) != (fn_value(f, x) && fn_value(f, y))) {
                    cyl = vset(m, fn_value(f, m)) & vset(x, fn_value(f, x)) &
                          vset(y, fn_value(f, y));
                    found = true;
                    break;
                }
            }
        if (!found || !cyl.test(f) || cyl.intersects(hom)) return false;
    }

    // On a materialized ambient space the complement must literally be open.
    if (fs.materialized && !fs.space.is_open(~hom)) return false;
    return true;
}

DualityCertificate hom_ultra_homeo(const BoolAlgebra& b) {
    StoneSpace s = stone_space(b);
    const std::size_t m = s.ultrafilters.size();

    // Hom points in canonical order are exactly the indicator functions of
    // the ultrafilters; f -> f^{-1}{1} is the index-preserving bijection.
    // At small carriers, cross-check by brute-force law filtering in 2^B.
    if (b.size() <= 16) {
        FunctionSpace fs = function_space(b);
        std::vector<std::uint32_t> hom_masks;
        for (const auto& u : s.ultrafilters) {
            std::uint32_t f = 0;
            for (Elem x = 0; x < b.size(); ++x)
                if (u.contains(x)) f |= 1u << x;
            hom_masks.push_back(f);
        }
        for (std::uint32_t f = 0; f < fs.point_count; ++f)
            if (is_hom_mask(b, f) &&
                std::find(hom_masks.begin(), hom_masks.end(), f) == hom_masks.end())
                throw NotUltra("a homomorphism's preimage of 1 is missing from the ultrafilters");
    }

    // Subspace topology Hom inherits from 2^B: traces of the subbasis,
    // closed under intersection and union. The trace of 1_a on Hom is
    // exactly { f : f(a)=1 } = { i : a in ultrafilter i }.
    std::vector<Bitset> traces;
    for (Elem a = 0; a < b.size(); ++a) {
        Bitset t1(m);
        for (std::size_t i = 0; i < m; ++i)
            if (s.ultrafilters[i].contains(a)) t1.set(i);
        traces.push_back(~t1);
        traces.push_back(t1);
    }
    TopSpace subspace = space_from_basis(m, traces);

    DualityCertificate cert;
    cert.kind = "hom_ultra_homeo";
    if (subspace.opens != s.space.opens)
        throw NotStone("subspace topology differs from the ultrafilter-space topology");
    cert.checks.push_back("subspace topology matches the Stone space: ok");

    std::vector<std::size_t> id(m);
    for (std::size_t i = 0; i < m; ++i) id[i] = i;
    ContinuousMap cm = validate_continuous(id, subspace, s.space);
    if (!is_homeomorphism(cm))
        throw NotStone("f -> f^{-1}{1} is not a homeomorphism");
    cert.checks.push_back("bijective and bicontinuous: ok");
    for (std::size_t i = 0; i < m; ++i)
        cert.witness.emplace_back("hom#" + std::to_string(i), "ultrafilter#" + std::to_string(i));
    return cert;
}

std::string hom_line(const Homomorphism& h) {
    std::vector<Elem> ones;
    for (Elem x = 0; x < h.src->size(); ++x)
        if (h.map[x] == h.dst->one()) ones.push_back(x);
    return element_list(*h.src, ones);
}

} // namespace stone
