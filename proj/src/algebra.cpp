#include "stone/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace stone {

namespace {

std::string brace_set(const Bitset& s) {
    std::string out = "{";
    bool first = true;
    for (auto p : s.members()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(p);
    }
    out += "}";
    return out;
}

} // namespace

BoolAlgebra BoolAlgebra::power_set(unsigned n) {
    if (n == 0)
        throw TrivialAlgebra("power set of the empty universe has 0 = 1");
    if (n > 20)
        throw SizeGuard("universe of " + std::to_string(n) + " atoms exceeds the 20-atom guard");
    BoolAlgebra a;
    a.atoms_ = n;
    a.backend_ = Backend::PowerSet;
    a.universe_ = n;
    a.concrete_.assign(a.size(), Bitset(n));
    for (Elem e = 0; e < a.size(); ++e)
        for (unsigned i = 0; i < n; ++i)
            if (a.has_atom(e, i)) a.concrete_[e].set(i);
    return a;
}

BoolAlgebra BoolAlgebra::z2() {
    BoolAlgebra a;
    a.atoms_ = 1;
    a.backend_ = Backend::Z2;
    a.names_ = {"0", "1"};
    return a;
}

BoolAlgebra BoolAlgebra::from_models(unsigned model_count, std::vector<std::string> names) {
    if (model_count == 0)
        throw TrivialAlgebra("a presentation with no models yields 0 = 1");
    if (model_count > 20)
        throw SizeGuard("more than 20 models exceeds the atom guard");
    BoolAlgebra a;
    a.atoms_ = model_count;
    a.backend_ = Backend::Terms;
    a.names_ = std::move(names);
    return a;
}

BoolAlgebra BoolAlgebra::from_set_family(std::size_t universe, std::vector<Bitset> members) {
    std::sort(members.begin(), members.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    members.erase(std::unique(members.begin(), members.end()), members.end());

    auto find = [&](const Bitset& s) {
        return std::find(members.begin(), members.end(), s) != members.end();
    };
    const Bitset empty(universe), full = Bitset::full(universe);
    if (!find(empty) || !find(full))
        throw AxiomViolation("set family must contain the empty set and the universe");
    for (const auto& x : members)
        if (!find(~x))
            throw AxiomViolation("set family not closed under complement at " + brace_set(x));
    for (const auto& x : members)
        for (const auto& y : members) {
            if (!find(x | y))
                throw AxiomViolation("set family not closed under union at " +
                                     brace_set(x) + ", " + brace_set(y));
            if (!find(x & y))
                throw AxiomViolation("set family not closed under intersection at " +
                                     brace_set(x) + ", " + brace_set(y));
        }
    if (members.size() < 2)
        throw TrivialAlgebra("set family over the empty universe has 0 = 1");

    // Atoms: minimal nonempty members, in lexicographic set order.
    std::vector<Bitset> atom_sets;
    for (const auto& x : members) {
        if (x.none()) continue;
        bool minimal = true;
        for (const auto& y : members)
            if (y.any() && y != x && y.is_subset_of(x)) { minimal = false; break; }
        if (minimal) atom_sets.push_back(x);
    }
    const unsigned m = static_cast<unsigned>(atom_sets.size());
    if (m > 20)
        throw SizeGuard("set family has more than 20 atoms");
    if (members.size() != (std::size_t{1} << m))
        throw AxiomViolation("set family is not a sub-Boolean algebra: carrier size " +
                             std::to_string(members.size()) + " with " +
                             std::to_string(m) + " atoms");

    BoolAlgebra a;
    a.atoms_ = m;
    a.backend_ = Backend::SetFamily;
    a.universe_ = universe;
    a.concrete_.assign(std::size_t{1} << m, Bitset(universe));
    std::vector<bool> seen(std::size_t{1} << m, false);
    for (const auto& x : members) {
        Elem idx = 0;
        for (unsigned i = 0; i < m; ++i)
            if (atom_sets[i].is_subset_of(x)) idx |= Elem{1} << i;
        if (seen[idx])
            throw AxiomViolation("set family is not a sub-Boolean algebra: duplicate atom decomposition");
        seen[idx] = true;
        a.concrete_[idx] = x;
    }
    return a;
}

std::vector<Elem> BoolAlgebra::atoms() const {
    std::vector<Elem> out;
    out.reserve(atoms_);
    for (unsigned i = 0; i < atoms_; ++i) out.push_back(atom(i));
    return out;
}

std::string BoolAlgebra::element_name(Elem e) const {
    switch (backend_) {
    case Backend::PowerSet:
        return brace_set(concrete_set(e));
    case Backend::SetFamily:
        return brace_set(concrete_[e]);
    default:
        return names_[e];
    }
}

const Bitset& BoolAlgebra::concrete_set(Elem e) const {
    if (backend_ != Backend::SetFamily && backend_ != Backend::PowerSet)
        throw InputError("element has no concrete set representation");
    return concrete_[e];
}

Elem BoolAlgebra::element_for_set(const Bitset& s) const {
    if (s.size() != universe_)
        throw InputError("set size does not match the universe");
    if (backend_ == Backend::PowerSet) {
        Elem e = 0;
        for (unsigned i = 0; i < atoms_; ++i)
            if (s.test(i)) e |= Elem{1} << i;
        return e;
    }
    if (backend_ == Backend::SetFamily) {
        for (Elem e = 0; e < size(); ++e)
            if (concrete_[e] == s) return e;
        throw InputError("set " + brace_set(s) + " is not in the family");
    }
    throw InputError("algebra has no set-valued elements");
}

void BoolAlgebra::guard_enumeration() const {
    if (atoms_ > 20)
        throw SizeGuard("carrier enumeration refused beyond 20 atoms");
}

BoolAlgebra BoolAlgebra::from_tables(const OpTables& t) {
    const std::size_t k = t.comp.size();
    if (k == 0 || t.join.size() != k || t.meet.size() != k)
        throw InputError("operation tables must be total over a nonempty carrier");
    auto label = [&](Elem x) {
        return x < t.labels.size() ? t.labels[x] : std::to_string(x);
    };
    auto check_row = [&](const std::vector<Elem>& row) {
        if (row.size() != k) throw InputError("table row has wrong length");
        for (Elem v : row)
            if (v >= k) throw InputError("table entry out of carrier range");
    };
    for (const auto& row : t.join) check_row(row);
    for (const auto& row : t.meet) check_row(row);
    for (Elem v : t.comp)
        if (v >= k) throw InputError("complement entry out of carrier range");

    auto jn = [&](Elem x, Elem y) { return t.join[x][y]; };
    auto mt = [&](Elem x, Elem y) { return t.meet[x][y]; };
    auto witness2 = [&](Elem x, Elem y) { return " at (" + label(x) + ", " + label(y) + ")"; };
    auto witness3 = [&](Elem x, Elem y, Elem z) {
        return " at (" + label(x) + ", " + label(y) + ", " + label(z) + ")";
    };

    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) {
            if (jn(x, y) != jn(y, x))
                throw AxiomViolation("commutativity of +" + witness2(x, y));
            if (mt(x, y) != mt(y, x))
                throw AxiomViolation("commutativity of *" + witness2(x, y));
        }
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y)
            for (Elem z = 0; z < k; ++z) {
                if (jn(x, jn(y, z)) != jn(jn(x, y), z))
                    throw AxiomViolation("associativity of +" + witness3(x, y, z));
                if (mt(x, mt(y, z)) != mt(mt(x, y), z))
                    throw AxiomViolation("associativity of *" + witness3(x, y, z));
                if (jn(x, mt(y, z)) != mt(jn(x, y), jn(x, z)))
                    throw AxiomViolation("distributivity of + over *" + witness3(x, y, z));
                if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z)))
                    throw AxiomViolation("distributivity of * over +" + witness3(x, y, z));
            }
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y)
            if (jn(x, mt(x, y)) != x || mt(x, jn(x, y)) != x)
                throw AxiomViolation("absorption" + witness2(x, y));

    const Elem one = jn(0, t.comp[0]);
    const Elem zero = mt(0, t.comp[0]);
    for (Elem x = 0; x < k; ++x) {
        if (jn(x, t.comp[x]) != one)
            throw AxiomViolation("complement law x + !x = 1 at " + label(x));
        if (mt(x, t.comp[x]) != zero)
            throw AxiomViolation("complement law x * !x = 0 at " + label(x));
    }
    if (zero == one)
        throw TrivialAlgebra("0 = 1 (carrier collapses to one element)");
    for (Elem x = 0; x < k; ++x)
        if (jn(x, x) != x || mt(x, x) != x || mt(one, x) != x || jn(one, x) != one ||
            jn(zero, x) != x || mt(zero, x) != zero)
            throw AxiomViolation("derived identity at " + label(x));

    // Canonicalize: atoms in ascending carrier order, element -> atom mask.
    auto leq = [&](Elem x, Elem y) { return jn(x, y) == y; };
    std::vector<Elem> atom_list;
    for (Elem x = 0; x < k; ++x) {
        if (x == zero) continue;
        bool minimal = true;
        for (Elem y = 0; y < k; ++y)
            if (y != zero && y != x && leq(y, x)) { minimal = false; break; }
        if (minimal) atom_list.push_back(x);
    }
    const unsigned m = static_cast<unsigned>(atom_list.size());
    if (m > 20)
        throw SizeGuard("table algebra has more than 20 atoms");
    if (k != (std::size_t{1} << m))
        throw AxiomViolation("carrier size " + std::to_string(k) +
                             " is not 2^(atom count " + std::to_string(m) + ")");

    BoolAlgebra a;
    a.atoms_ = m;
    a.backend_ = Backend::Tables;
    a.names_.assign(k, "");
    std::vector<bool> seen(k, false);
    for (Elem x = 0; x < k; ++x) {
        Elem idx = 0;
        for (unsigned i = 0; i < m; ++i)
            if (leq(atom_list[i], x)) idx |= Elem{1} << i;
        if (seen[idx])
            throw AxiomViolation("two elements have the same atom decomposition");
        seen[idx] = true;
        a.names_[idx] = label(x);
    }
    return a;
}

void require_same_algebra(const Element& x, const Element& y) {
    if (x.alg != y.alg)
        throw MixedAlgebras("elements belong to different algebras");
}

bool leq(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    return x.alg->leq(x.idx, y.idx);
}

namespace {

// Verifies the least-upper / greatest-lower bound property by a carrier
// scan (skipped above 2^12 elements).
void verify_bound(const BoolAlgebra& a, Elem x, Elem y, Elem b, bool is_sup) {
    if (a.size() > 4096) return;
    bool ok = is_sup ? a.leq(x, b) && a.leq(y, b) : a.leq(b, x) && a.leq(b, y);
    for (Elem z = 0; ok && z < a.size(); ++z) {
        if (is_sup && a.leq(x, z) && a.leq(y, z) && !a.leq(b, z)) ok = false;
        if (!is_sup && a.leq(z, x) && a.leq(z, y) && !a.leq(z, b)) ok = false;
    }
    if (!ok)
        throw AxiomViolation(std::string(is_sup ? "sup" : "inf") +
                             " bound verification failed at (" +
                             a.element_name(x) + ", " + a.element_name(y) + ")");
}

} // namespace

Element sup(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Elem s = x.alg->join(x.idx, y.idx);
    verify_bound(*x.alg, x.idx, y.idx, s, true);
    return {x.alg, s};
}

Element inf(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    Elem s = x.alg->meet(x.idx, y.idx);
    verify_bound(*x.alg, x.idx, y.idx, s, false);
    return {x.alg, s};
}

Homomorphism validate_hom(const std::vector<Elem>& map,
                          const BoolAlgebra& src, const BoolAlgebra& dst) {
    if (map.size() != src.size())
        throw NotAHomomorphism("map is not total on the source carrier");
    for (Elem v : map)
        if (v >= dst.size())
            throw NotAHomomorphism("map value outside the target carrier");
    if (map[src.zero()] != dst.zero())
        throw NotAHomomorphism("0 is not preserved: 0 -> " + dst.element_name(map[src.zero()]));
    if (map[src.one()] != dst.one())
        throw NotAHomomorphism("1 is not preserved: 1 -> " + dst.element_name(map[src.one()]));
    for (Elem x = 0; x < src.size(); ++x)
        for (Elem y = 0; y < src.size(); ++y) {
            if (map[src.join(x, y)] != dst.join(map[x], map[y]))
                throw NotAHomomorphism("+ not preserved at (" + src.element_name(x) + ", " +
                                       src.element_name(y) + ")");
            if (map[src.meet(x, y)] != dst.meet(map[x], map[y]))
                throw NotAHomomorphism("* not preserved at (" + src.element_name(x) + ", " +
                                       src.element_name(y) + ")");
        }
    // Complement preservation is a consequence of the laws above; asserted.
    for (Elem x = 0; x < src.size(); ++x)
        if (map[src.complement(x)] != dst.complement(map[x]))
            throw NotAHomomorphism("derived complement preservation failed at " +
                                   src.element_name(x));
    return Homomorphism{&src, &dst, map};
}

bool is_isomorphism(const Homomorphism& h) {
    if (h.src->size() != h.dst->size()) return false;
    std::vector<bool> hit(h.dst->size(), false);
    for (Elem v : h.map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::string element_list(const BoolAlgebra& a, const std::vector<Elem>& elems) {
    std::vector<Elem> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ", ";
        out += a.element_name(sorted[i]);
    }
    return out;
}

} // namespace stone
