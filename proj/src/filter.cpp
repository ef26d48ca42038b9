#include "stone/filter.hpp"

#include <algorithm>

namespace stone {

std::vector<Elem> Filter::elements() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < alg->size(); ++x)
        if (members.test(x)) out.push_back(x);
    return out;
}

bool is_filter(const BoolAlgebra& a, const Bitset& members) {
    if (members.size() != a.size() || members.none()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (!members.test(x)) continue;
        for (Elem y = 0; y < a.size(); ++y) {
            if (members.test(y) && !members.test(a.meet(x, y))) return false;
            if (a.leq(x, y) && !members.test(y)) return false;
        }
    }
    return true;
}

Filter make_filter(const BoolAlgebra& a, const Bitset& members) {
    if (!is_filter(a, members))
        throw NotAFilter("subset is not meet-closed, upward closed and nonempty");
    return Filter{&a, members};
}

bool is_ideal(const BoolAlgebra& a, const Bitset& members) {
    if (members.size() != a.size() || members.none()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        if (!members.test(x)) continue;
        for (Elem y = 0; y < a.size(); ++y) {
            if (members.test(y) && !members.test(a.join(x, y))) return false;
            if (!members.test(a.meet(x, y))) return false;
        }
    }
    return true;
}

Ideal make_ideal(const BoolAlgebra& a, const Bitset& members) {
    if (!is_ideal(a, members))
        throw NotAFilter("subset is not an ideal");
    return Ideal{&a, members};
}

bool has_fpp(const BoolAlgebra& a, const std::vector<Elem>& set) {
    if (set.empty())
        throw EmptySet("finite product property is undefined for the empty set");
    Elem prod = a.one();
    for (Elem x : set) prod = a.meet(prod, x);
    return prod != a.zero();
}

Filter generated_filter(const BoolAlgebra& a, const std::vector<Elem>& set) {
    if (!has_fpp(a, set))
        throw NoFPP("generating set lacks the finite product property");
    Elem prod = a.one();
    for (Elem x : set) prod = a.meet(prod, x);
    return principal_filter(a, prod);
}

Filter principal_filter(const BoolAlgebra& a, Elem x) {
    Bitset m(a.size());
    for (Elem y = 0; y < a.size(); ++y)
        if (a.leq(x, y)) m.set(y);
    return Filter{&a, m};
}

FilterClassification classify(const Filter& f) {
    const BoolAlgebra& a = *f.alg;
    FilterClassification c;
    c.proper = !f.contains(a.zero());

    c.prime = true;
    for (Elem x = 0; c.prime && x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) {
                c.prime = false;
                break;
            }

    // Maximal: proper, and adjoining any outside element collapses the
    // generated filter onto 0.
    c.maximal = c.proper;
    for (Elem x = 0; c.maximal && x < a.size(); ++x) {
        if (f.contains(x)) continue;
        bool collapses = false;
        for (Elem s = 0; s < a.size(); ++s)
            if (f.contains(s) && a.meet(s, x) == a.zero()) { collapses = true; break; }
        if (!collapses) c.maximal = false;
    }

    c.ultra = true;
    for (Elem x = 0; c.ultra && x < a.size(); ++x)
        if (f.contains(x) == f.contains(a.complement(x))) c.ultra = false;

    return c;
}

Filter extend_to_ultrafilter(const Filter& f, std::optional<Elem> avoid) {
    const BoolAlgebra& a = *f.alg;
    if (f.contains(a.zero()))
        throw NotProper("only proper filters extend to ultrafilters");
    if (avoid && f.contains(*avoid))
        throw AvoidInFilter("the avoided element already lies in the filter");

    // Greedy over carrier order: adjoin x when the closure keeps the
    // product nonzero and the avoided element out.
    Filter cur = f;
    for (Elem x = 0; x < a.size(); ++x) {
        if (cur.contains(x)) continue;
        // Closure of cur + {x} is the up-set of (min(cur) * x); min(cur)
        // exists since cur is a finite filter.
        Elem base = a.one();
        for (Elem s = 0; s < a.size(); ++s)
            if (cur.contains(s)) base = a.meet(base, s);
        Elem prod = a.meet(base, x);
        if (prod == a.zero()) continue;
        if (avoid && a.leq(prod, *avoid)) continue;
        cur = principal_filter(a, prod);
    }
    return cur;
}

std::vector<Filter> all_ultrafilters(const BoolAlgebra& a) {
    a.guard_enumeration();
    std::vector<Filter> out;
    out.reserve(a.atom_count());
    for (unsigned i = 0; i < a.atom_count(); ++i) {
        Filter u = principal_filter(a, a.atom(i));
        auto c = classify(u);
        if (!(c.proper && c.ultra))
            throw NotUltra("principal filter of an atom failed the ultra check");
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<Filter> all_filters(const BoolAlgebra& a) {
    if (a.size() > 16)
        throw SizeGuard("exhaustive filter enumeration is limited to 16-element carriers");
    std::vector<Filter> out;
    const std::uint32_t limit = 1u << a.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        Bitset m(a.size());
        for (Elem x = 0; x < a.size(); ++x)
            if ((mask >> x) & 1) m.set(x);
        if (is_filter(a, m)) out.push_back(Filter{&a, m});
    }
    return out;
}

Homomorphism ultra_to_hom(const Filter& f, const BoolAlgebra& z2) {
    if (!classify(f).ultra)
        throw NotUltra("only ultrafilters induce homomorphisms to the two-element algebra");
    std::vector<Elem> map(f.alg->size());
    for (Elem x = 0; x < f.alg->size(); ++x)
        map[x] = f.contains(x) ? z2.one() : z2.zero();
    return validate_hom(map, *f.alg, z2);
}

Filter hom_to_ultra(const Homomorphism& h) {
    if (h.dst->size() != 2)
        throw NotUltra("target must be the two-element algebra");
    Bitset m(h.src->size());
    for (Elem x = 0; x < h.src->size(); ++x)
        if (h.map[x] == h.dst->one()) m.set(x);
    Filter f = make_filter(*h.src, m);
    if (!classify(f).ultra)
        throw NotUltra("preimage of 1 is not an ultrafilter");
    return f;
}

Ideal complement_ideal(const Filter& f) {
    if (!classify(f).ultra)
        throw NotUltra("complement ideals are taken of ultrafilters");
    const BoolAlgebra& a = *f.alg;
    Ideal i = make_ideal(a, ~f.members);
    // Prime by definition: x*y in I forces x or y in I.
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (i.contains(a.meet(x, y)) && !i.contains(x) && !i.contains(y))
                throw NotUltra("complement of an ultrafilter failed the prime-ideal check");
    return i;
}

std::string filter_line(const Filter& f) {
    return element_list(*f.alg, f.elements());
}

std::string ideal_line(const Ideal& i) {
    std::vector<Elem> elems;
    for (Elem x = 0; x < i.alg->size(); ++x)
        if (i.contains(x)) elems.push_back(x);
    return element_list(*i.alg, elems);
}

} // namespace stone
