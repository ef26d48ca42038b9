#include "stone/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace stone {

namespace {

void sort_family(std::vector<Bitset>& fam) {
    std::sort(fam.begin(), fam.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

} // namespace

bool TopSpace::is_open(const Bitset& s) const {
    return std::find(opens.begin(), opens.end(), s) != opens.end();
}

bool TopSpace::is_closed(const Bitset& s) const { return is_open(~s); }

TopSpace make_space(std::size_t points, std::vector<Bitset> opens) {
    if (points == 0)
        throw InputError("spaces must have at least one point");
    sort_family(opens);
    for (const auto& s : opens)
        if (s.size() != points)
            throw InputError("open set size does not match the point count");
    TopSpace x{points, std::move(opens)};
    if (!x.is_open(Bitset(points)) || !x.is_open(Bitset::full(points)))
        throw InputError("the topology must contain the empty set and the full set");
    for (const auto& u : x.opens)
        for (const auto& v : x.opens) {
            if (!x.is_open(u & v))
                throw InputError("the topology is not closed under intersection");
            if (!x.is_open(u | v))
                throw InputError("the topology is not closed under union");
        }
    return x;
}

TopSpace space_from_basis(std::size_t points, const std::vector<Bitset>& basis) {
    if (points == 0)
        throw InputError("spaces must have at least one point");
    // Close under pairwise intersection to a fixpoint, then take all
    // unions of the resulting basis.
    std::vector<Bitset> base = basis;
    base.push_back(Bitset(points));
    base.push_back(Bitset::full(points));
    sort_family(base);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> add;
        for (const auto& u : base)
            for (const auto& v : base) {
                Bitset w = u & v;
                if (std::find(base.begin(), base.end(), w) == base.end() &&
                    std::find(add.begin(), add.end(), w) == add.end())
                    add.push_back(w);
            }
        if (!add.empty()) {
            grew = true;
            base.insert(base.end(), add.begin(), add.end());
            sort_family(base);
        }
        if (base.size() > (1u << 16))
            throw SizeGuard("open family exceeds 2^16 sets");
    }
    std::unordered_set<Bitset, BitsetHash> all(base.begin(), base.end());
    bool more = true;
    while (more) {
        more = false;
        std::vector<Bitset> cur(all.begin(), all.end());
        for (const auto& u : cur)
            for (const auto& b : base) {
                Bitset w = u | b;
                if (all.insert(w).second) more = true;
            }
        if (all.size() > (1u << 16))
            throw SizeGuard("open family exceeds 2^16 sets");
    }
    std::vector<Bitset> opens(all.begin(), all.end());
    sort_family(opens);
    return TopSpace{points, std::move(opens)};
}

TopSpace discrete_space(std::size_t points) {
    std::vector<Bitset> basis;
    for (std::size_t i = 0; i < points; ++i) {
        Bitset s(points);
        s.set(i);
        basis.push_back(s);
    }
    return space_from_basis(points, basis);
}

TopSpace indiscrete_space(std::size_t points) {
    return make_space(points, {Bitset(points), Bitset::full(points)});
}

Bitset closure(const TopSpace& x, const Bitset& s) {
    Bitset miss(x.points);
    for (const auto& u : x.opens)
        if (!u.intersects(s)) miss |= u;
    return ~miss;
}

std::vector<Bitset> components(const TopSpace& x) {
    // Minimal open set around each point.
    std::vector<Bitset> min_open(x.points, Bitset::full(x.points));
    for (const auto& u : x.opens)
        for (std::size_t p = 0; p < x.points; ++p)
            if (u.test(p)) min_open[p] &= u;

    // p and q are inseparable when one lies in every open around the other.
    std::vector<std::size_t> parent(x.points);
    for (std::size_t p = 0; p < x.points; ++p) parent[p] = p;
    auto find = [&](std::size_t p) {
        while (parent[p] != p) p = parent[p] = parent[parent[p]];
        return p;
    };
    for (std::size_t p = 0; p < x.points; ++p)
        for (std::size_t q = 0; q < x.points; ++q)
            if (min_open[p].test(q)) parent[find(p)] = find(q);

    std::vector<Bitset> out;
    for (std::size_t root = 0; root < x.points; ++root) {
        if (find(root) != root) continue;
        Bitset c(x.points);
        for (std::size_t p = 0; p < x.points; ++p)
            if (find(p) == root) c.set(p);
        out.push_back(c);
    }
    sort_family(out);
    return out;
}

std::size_t component_of(const TopSpace& x, std::size_t p) {
    auto comps = components(x);
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].test(p)) return i;
    throw InputError("point outside the space");
}

std::vector<Bitset> clopens(const TopSpace& x) {
    std::vector<Bitset> out;
    for (const auto& u : x.opens)
        if (x.is_closed(u)) out.push_back(u);
    sort_family(out);
    return out;
}

namespace {

// Reduces a cover to a minimal subcover by dropping redundant members;
// returns whether the input actually covers.
bool reduces_to_finite_subcover(const TopSpace& x, std::vector<Bitset> cover) {
    Bitset un(x.points);
    for (const auto& u : cover) un |= u;
    if (un != Bitset::full(x.points)) return false;
    for (std::size_t i = 0; i < cover.size();) {
        Bitset rest(x.points);
        for (std::size_t j = 0; j < cover.size(); ++j)
            if (j != i) rest |= cover[j];
        if (rest == Bitset::full(x.points)) cover.erase(cover.begin() + static_cast<long>(i));
        else ++i;
    }
    Bitset un2(x.points);
    for (const auto& u : cover) un2 |= u;
    return un2 == Bitset::full(x.points);
}

} // namespace

SpaceAxioms check_axioms(const TopSpace& x) {
    SpaceAxioms r;

    r.t1 = true;
    r.hausdorff = true;
    for (std::size_t p = 0; r.t1 && p < x.points; ++p)
        for (std::size_t q = 0; q < x.points; ++q) {
            if (p == q) continue;
            bool sep = false;
            for (const auto& u : x.opens)
                if (u.test(q) && !u.test(p)) { sep = true; break; }
            if (!sep) { r.t1 = false; break; }
        }
    for (std::size_t p = 0; r.hausdorff && p < x.points; ++p)
        for (std::size_t q = p + 1; q < x.points; ++q) {
            bool sep = false;
            for (const auto& u : x.opens) {
                if (!u.test(p)) continue;
                for (const auto& v : x.opens)
                    if (v.test(q) && !(u & v).any()) { sep = true; break; }
                if (sep) break;
            }
            if (!sep) { r.hausdorff = false; break; }
        }

    // Compactness by cover reduction. All subfamilies are enumerated when
    // the family is small; otherwise the canonical all-opens cover is
    // reduced. Every finite cover is its own finite subcover, so the flag
    // is established, never assumed.
    r.compact = true;
    if (x.opens.size() <= 12) {
        for (std::uint32_t mask = 0; mask < (1u << x.opens.size()); ++mask) {
            std::vector<Bitset> cover;
            Bitset un(x.points);
            for (std::size_t i = 0; i < x.opens.size(); ++i)
                if ((mask >> i) & 1) { cover.push_back(x.opens[i]); un |= x.opens[i]; }
            if (un != Bitset::full(x.points)) continue;
            if (!reduces_to_finite_subcover(x, cover)) { r.compact = false; break; }
        }
    } else {
        r.compact = reduces_to_finite_subcover(x, x.opens);
    }

    auto cl = clopens(x);
    r.zero_dimensional = true;
    for (const auto& u : x.opens) {
        Bitset un(x.points);
        for (const auto& c : cl)
            if (c.is_subset_of(u)) un |= c;
        if (un != u) { r.zero_dimensional = false; break; }
    }

    r.totally_disconnected = true;
    for (const auto& c : components(x))
        if (c.count() != 1) { r.totally_disconnected = false; break; }

    r.stone = r.compact && r.hausdorff && r.totally_disconnected;
    return r;
}

BoolAlgebra clop(const TopSpace& x) {
    return BoolAlgebra::from_set_family(x.points, clopens(x));
}

bool component_clopen_identity(const TopSpace& x) {
    auto ax = check_axioms(x);
    if (!(ax.compact && ax.hausdorff))
        throw PreconditionFailed("component identity requires a compact Hausdorff space");
    auto cl = clopens(x);
    auto comps = components(x);
    for (std::size_t p = 0; p < x.points; ++p) {
        Bitset inter = Bitset::full(x.points);
        for (const auto& c : cl)
            if (c.test(p)) inter &= c;
        if (inter != comps[component_of(x, p)]) return false;
    }
    return true;
}

bool is_continuous(const std::vector<std::size_t>& map, const TopSpace& x, const TopSpace& y) {
    if (map.size() != x.points)
        throw InputError("map is not total on the source points");
    for (auto v : map)
        if (v >= y.points) throw InputError("map value outside the target space");
    for (const auto& v : y.opens) {
        Bitset pre(x.points);
        for (std::size_t p = 0; p < x.points; ++p)
            if (v.test(map[p])) pre.set(p);
        if (!x.is_open(pre)) return false;
    }
    return true;
}

ContinuousMap validate_continuous(const std::vector<std::size_t>& map,
                                  const TopSpace& x, const TopSpace& y) {
    if (!is_continuous(map, x, y))
        throw PreconditionFailed("map is not continuous (a preimage of an open is not open)");
    return ContinuousMap{&x, &y, map};
}

bool is_homeomorphism(const ContinuousMap& f) {
    if (f.src->points != f.dst->points) return false;
    std::vector<bool> hit(f.dst->points, false);
    for (auto v : f.map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    // Inverse continuity.
    std::vector<std::size_t> inv(f.src->points);
    for (std::size_t p = 0; p < f.map.size(); ++p) inv[f.map[p]] = p;
    return is_continuous(inv, *f.dst, *f.src);
}

StoneSpace stone_space(const BoolAlgebra& b) {
    if (b.atom_count() > 16)
        throw SizeGuard("Stone space materialization is limited to 16 atoms");
    StoneSpace s;
    s.algebra = &b;
    s.ultrafilters = all_ultrafilters(b);
    const std::size_t m = s.ultrafilters.size();

    s.basis.reserve(b.size());
    for (Elem e = 0; e < b.size(); ++e) {
        Bitset u(m);
        for (std::size_t i = 0; i < m; ++i)
            if (s.ultrafilters[i].contains(e)) u.set(i);
        s.basis.push_back(std::move(u));
    }

    // Basis laws, checked pairwise (capped for large carriers).
    if (b.size() <= 1024) {
        for (Elem e = 0; e < b.size(); ++e) {
            if (s.basis[b.complement(e)] != ~s.basis[e])
                throw AxiomViolation("U_!x is not the complement of U_x at " + b.element_name(e));
            for (Elem f = 0; f < b.size(); ++f) {
                if (s.basis[b.meet(e, f)] != (s.basis[e] & s.basis[f]))
                    throw AxiomViolation("U_{x*y} != U_x n U_y");
                if (s.basis[b.join(e, f)] != (s.basis[e] | s.basis[f]))
                    throw AxiomViolation("U_{x+y} != U_x u U_y");
            }
        }
        if (s.basis[b.zero()].any() || s.basis[b.one()] != Bitset::full(m))
            throw AxiomViolation("U_0 or U_1 law failed");
    }

    s.space = space_from_basis(m, s.basis);
    return s;
}

bool converges(const Filter& f, std::size_t p, const TopSpace& x) {
    const BoolAlgebra& pow = *f.alg;
    if (pow.universe_size() != x.points)
        throw NotAFilter("filter lives over a different point set");
    // Definition: every neighborhood contains a member of the filter.
    bool by_def = true;
    for (const auto& u : x.opens) {
        if (!u.test(p)) continue;
        bool found = false;
        for (Elem e = 0; e < pow.size() && !found; ++e)
            if (f.contains(e) && pow.concrete_set(e).is_subset_of(u)) found = true;
        if (!found) { by_def = false; break; }
    }
    // Equivalent form: the neighborhood filter is contained in f.
    Filter nf = neighborhood_filter(p, x, pow);
    bool by_nf = nf.members.is_subset_of(f.members);
    if (by_def != by_nf)
        throw AxiomViolation("the two convergence criteria disagree");
    return by_def;
}

Filter neighborhood_filter(std::size_t p, const TopSpace& x, const BoolAlgebra& pow) {
    Bitset m(pow.size());
    for (Elem e = 0; e < pow.size(); ++e) {
        const Bitset& s = pow.concrete_set(e);
        for (const auto& u : x.opens)
            if (u.test(p) && u.is_subset_of(s)) { m.set(e); break; }
    }
    return make_filter(pow, m);
}

Filter pushforward(const std::vector<std::size_t>& map, const Filter& f,
                   const BoolAlgebra& pow_target) {
    const BoolAlgebra& src = *f.alg;
    Bitset m(pow_target.size());
    for (Elem e = 0; e < src.size(); ++e) {
        if (!f.contains(e)) continue;
        Bitset img(pow_target.universe_size());
        for (auto p : src.concrete_set(e).members()) img.set(map[p]);
        m.set(pow_target.element_for_set(img));
    }
    // Saturate upward.
    for (Elem e = 0; e < pow_target.size(); ++e)
        if (m.test(e))
            for (Elem g = 0; g < pow_target.size(); ++g)
                if (pow_target.leq(e, g)) m.set(g);
    Filter out = make_filter(pow_target, m);
    if (classify(f).ultra && !classify(out).ultra)
        throw NotAFilter("pushforward of an ultrafilter failed the ultra check");
    return out;
}

bool continuity_via_filters(const std::vector<std::size_t>& map,
                            const TopSpace& x, const TopSpace& y) {
    if (map.size() != x.points)
        throw InputError("map is not total on the source points");
    if (x.points > 4 || y.points > 20)
        throw SizeGuard("filter-based continuity enumerates all filters; limited to 4 points");
    BoolAlgebra pow_x = BoolAlgebra::power_set(static_cast<unsigned>(x.points));
    BoolAlgebra pow_y = BoolAlgebra::power_set(static_cast<unsigned>(y.points));

    bool by_filters = true;
    for (const auto& f : all_filters(pow_x)) {
        for (std::size_t p = 0; p < x.points && by_filters; ++p) {
            if (!converges(f, p, x)) continue;
            Filter pushed = pushforward(map, f, pow_y);
            if (!converges(pushed, map[p], y)) by_filters = false;
        }
        if (!by_filters) break;
    }
    bool by_preimage = is_continuous(map, x, y);
    if (by_filters != by_preimage)
        throw AxiomViolation("filter-convergence continuity disagrees with the preimage test");
    return by_filters;
}

bool pr_closure_check(const BoolAlgebra& power_set, Elem a) {
    if (power_set.backend() != BoolAlgebra::Backend::PowerSet)
        throw InputError("Pr-closure check applies to power-set algebras");
    StoneSpace s = stone_space(power_set);
    const std::size_t m = s.ultrafilters.size();

    // Pr(a): principal ultrafilters at the points of a. Point i of the
    // Stone space is principal at universe point i.
    Bitset pr(m);
    for (unsigned i = 0; i < power_set.atom_count(); ++i)
        if (power_set.has_atom(a, i)) pr.set(i);
    Bitset cl = closure(s.space, pr);

    for (std::size_t i = 0; i < m; ++i)
        if (s.ultrafilters[i].contains(a) != cl.test(i)) return false;
    return true;
}

} // namespace stone
