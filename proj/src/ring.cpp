#include "stone/ring.hpp"

namespace stone {

BooleanRing to_ring(const BoolAlgebra& b) {
    BooleanRing r{&b};
    const std::size_t k = b.size();
    // Addition really is x*!y + y*!x.
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) {
            Elem sym = b.join(b.meet(x, b.complement(y)), b.meet(y, b.complement(x)));
            if (r.add(x, y) != sym)
                throw AxiomViolation("ring addition is not the symmetric difference");
        }
    // Ring axioms and the derived Boolean-ring facts.
    const bool full_triples = k <= 256;
    for (Elem x = 0; x < k; ++x) {
        if (r.mul(x, x) != x)
            throw NotBooleanRing("element is not idempotent: " + b.element_name(x));
        if (r.add(x, x) != r.zero())
            throw AxiomViolation("characteristic 2 fails");
        if (r.add(x, r.zero()) != x || r.mul(x, r.one()) != x)
            throw AxiomViolation("ring identities fail");
        for (Elem y = 0; y < k; ++y) {
            if (r.add(x, y) != r.add(y, x) || r.mul(x, y) != r.mul(y, x))
                throw AxiomViolation("ring commutativity fails");
            if (!full_triples) continue;
            for (Elem z = 0; z < k; ++z) {
                if (r.add(x, r.add(y, z)) != r.add(r.add(x, y), z))
                    throw AxiomViolation("ring addition is not associative");
                if (r.mul(x, r.mul(y, z)) != r.mul(r.mul(x, y), z))
                    throw AxiomViolation("ring multiplication is not associative");
                if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)))
                    throw AxiomViolation("ring distributivity fails");
            }
        }
    }
    return r;
}

const BoolAlgebra& to_algebra(const BooleanRing& r) {
    const BoolAlgebra& b = *r.algebra;
    for (Elem x = 0; x < b.size(); ++x) {
        if (r.add(r.one(), x) != b.complement(x))
            throw AxiomViolation("1 + x is not the complement");
        for (Elem y = 0; y < b.size(); ++y) {
            if (r.add(r.add(x, y), r.mul(x, y)) != b.join(x, y))
                throw AxiomViolation("x + y + xy is not the join");
            if (r.mul(x, y) != b.meet(x, y))
                throw AxiomViolation("ring multiplication is not the meet");
        }
    }
    return b;
}

RingTables ring_tables(const BooleanRing& r) {
    const std::size_t k = r.size();
    RingTables t;
    t.add.assign(k, std::vector<Elem>(k));
    t.mul.assign(k, std::vector<Elem>(k));
    for (Elem x = 0; x < k; ++x)
        for (Elem y = 0; y < k; ++y) {
            t.add[x][y] = r.add(x, y);
            t.mul[x][y] = r.mul(x, y);
        }
    return t;
}

BoolAlgebra algebra_from_ring_tables(const RingTables& t) {
    const std::size_t k = t.add.size();
    if (k == 0 || t.mul.size() != k)
        throw InputError("ring tables must be total over a nonempty carrier");
    for (const auto& row : t.add)
        if (row.size() != k) throw InputError("ring table row has wrong length");
    for (const auto& row : t.mul)
        if (row.size() != k) throw InputError("ring table row has wrong length");

    // Locate 0 and 1, then check idempotence before anything else.
    Elem zero = k, one = k;
    for (Elem c = 0; c < k; ++c) {
        bool is_zero = true, is_one = true;
        for (Elem x = 0; x < k; ++x) {
            if (t.add[c][x] != x) is_zero = false;
            if (t.mul[c][x] != x) is_one = false;
        }
        if (is_zero) zero = c;
        if (is_one) one = c;
    }
    if (zero == k || one == k)
        throw InputError("ring tables lack an additive or multiplicative identity");
    for (Elem x = 0; x < k; ++x)
        if (t.mul[x][x] != x)
            throw NotBooleanRing("element " + std::to_string(x) + " is not idempotent");

    OpTables a;
    a.join.assign(k, std::vector<Elem>(k));
    a.meet = t.mul;
    a.comp.resize(k);
    for (Elem x = 0; x < k; ++x) {
        a.comp[x] = t.add[one][x];
        for (Elem y = 0; y < k; ++y)
            a.join[x][y] = t.add[t.add[x][y]][t.mul[x][y]];
    }
    return BoolAlgebra::from_tables(a);
}

bool is_ring_ideal(const BooleanRing& r, const Bitset& members) {
    if (members.size() != r.size() || !members.test(r.zero())) return false;
    for (Elem a = 0; a < r.size(); ++a) {
        if (!members.test(a)) continue;
        for (Elem b = 0; b < r.size(); ++b) {
            if (members.test(b) && !members.test(r.add(a, b))) return false;
            if (!members.test(r.mul(a, b))) return false;
        }
    }
    return true;
}

RingIdeal make_ring_ideal(const BooleanRing& r, const Bitset& members) {
    if (!is_ring_ideal(r, members))
        throw NotAFilter("subset is not a ring ideal");
    return RingIdeal{&r, members};
}

RingIdeal ideal_generated(const BooleanRing& r, const std::vector<Elem>& set) {
    Bitset m(r.size());
    m.set(r.zero());
    for (Elem a : set) m.set(a);
    bool grew = true;
    while (grew) {
        grew = false;
        for (Elem a = 0; a < r.size(); ++a) {
            if (!m.test(a)) continue;
            for (Elem x = 0; x < r.size(); ++x) {
                Elem prod = r.mul(x, a);
                if (!m.test(prod)) { m.set(prod); grew = true; }
                if (m.test(x)) {
                    Elem sum = r.add(a, x);
                    if (!m.test(sum)) { m.set(sum); grew = true; }
                }
            }
        }
    }
    RingIdeal out = make_ring_ideal(r, m);
    // Minimality: every ideal containing the generators contains the
    // closure, by construction; spot-checked in the tests against all
    // ideals at small carriers.
    return out;
}

IdealClassification classify_ideal(const RingIdeal& i) {
    const BooleanRing& r = *i.ring;
    IdealClassification c;
    c.proper = !i.contains(r.one());

    c.prime = c.proper;
    for (Elem x = 0; c.prime && x < r.size(); ++x)
        for (Elem y = 0; y < r.size(); ++y)
            if (i.contains(r.mul(x, y)) && !i.contains(x) && !i.contains(y)) {
                c.prime = false;
                break;
            }

    // Maximal: proper and adjoining any outside element generates R.
    c.maximal = c.proper;
    for (Elem x = 0; c.maximal && x < r.size(); ++x) {
        if (i.contains(x)) continue;
        std::vector<Elem> gens = {x};
        for (Elem a = 0; a < r.size(); ++a)
            if (i.contains(a)) gens.push_back(a);
        if (!ideal_generated(r, gens).contains(r.one()))
            c.maximal = false;
    }

    if (c.proper && c.prime != c.maximal)
        throw AxiomViolation("prime and maximal disagree on a proper ideal of a Boolean ring");
    return c;
}

std::vector<RingIdeal> prime_ideals(const BooleanRing& r) {
    r.algebra->guard_enumeration();
    std::vector<RingIdeal> out;
    for (const auto& u : all_ultrafilters(*r.algebra)) {
        RingIdeal i = make_ring_ideal(r, ~u.members);
        auto c = classify_ideal(i);
        if (!c.prime)
            throw NotUltra("complement of an ultrafilter is not a prime ideal");
        out.push_back(std::move(i));
    }
    return out;
}

SpectrumSpace spectrum(const BooleanRing& r) {
    if (r.algebra->atom_count() > 16)
        throw SizeGuard("spectrum materialization is limited to 16 atoms");
    SpectrumSpace s;
    s.ring = &r;
    s.points = prime_ideals(r);
    const std::size_t m = s.points.size();

    s.basis.reserve(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
        Bitset v(m);
        for (std::size_t i = 0; i < m; ++i)
            if (!s.points[i].contains(x)) v.set(i);
        s.basis.push_back(std::move(v));
    }

    if (r.size() <= 1024) {
        if (s.basis[r.zero()].any() || s.basis[r.one()] != Bitset::full(m))
            throw AxiomViolation("V_0 or V_1 law failed");
        for (Elem x = 0; x < r.size(); ++x) {
            if (~s.basis[x] != s.basis[r.add(r.one(), x)])
                throw AxiomViolation("V_x is not clopen via V_{1+x}");
            for (Elem y = 0; y < r.size(); ++y) {
                if (s.basis[r.mul(x, y)] != (s.basis[x] & s.basis[y]))
                    throw AxiomViolation("V_{x*y} != V_x n V_y");
                Elem join = r.add(r.add(x, y), r.mul(x, y));
                if (s.basis[join] != (s.basis[x] | s.basis[y]))
                    throw AxiomViolation("V_{x+y+xy} != V_x u V_y");
            }
        }
    }

    s.space = space_from_basis(m, s.basis);
    auto ax = check_axioms(s.space);
    if (!ax.compact)
        throw AxiomViolation("spectrum failed the compactness check");
    if (!ax.stone)
        throw AxiomViolation("spectrum of a Boolean ring failed the Stone check");
    return s;
}

DualityCertificate spec_ultra_homeo(const BoolAlgebra& b) {
    BooleanRing r = to_ring(b);
    StoneSpace us = stone_space(b);
    SpectrumSpace sp = spectrum(r);
    const std::size_t m = us.ultrafilters.size();

    // F -> B \ F; the canonical orders align index-by-index, which the
    // membership comparison below verifies rather than assumes.
    std::vector<std::size_t> map(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < sp.points.size(); ++j)
            if (sp.points[j].members == ~us.ultrafilters[i].members) {
                map[i] = j;
                found = true;
                break;
            }
        if (!found)
            throw NotUltra("complement of an ultrafilter is missing from the spectrum");
    }

    DualityCertificate cert;
    cert.kind = "spec_ultra_homeo";
    for (Elem x = 0; x < b.size(); ++x) {
        Bitset img(sp.points.size());
        for (std::size_t i = 0; i < m; ++i)
            if (us.basic_open(x).test(i)) img.set(map[i]);
        if (img != sp.basic_open(x))
            throw AxiomViolation("U_x does not map onto V_x at " + b.element_name(x));
    }
    cert.checks.push_back("U_x -> V_x identity: ok");

    ContinuousMap cm = validate_continuous(map, us.space, sp.space);
    if (!is_homeomorphism(cm))
        throw NotStone("F -> B \\ F is not a homeomorphism");
    cert.checks.push_back("bijective and bicontinuous: ok");
    for (std::size_t i = 0; i < m; ++i)
        cert.witness.emplace_back("ultrafilter#" + std::to_string(i),
                                  "prime-ideal#" + std::to_string(map[i]));
    return cert;
}

bool every_clopen_is_basic(const SpectrumSpace& s) {
    for (const auto& c : clopens(s.space)) {
        bool found = false;
        for (const auto& v : s.basis)
            if (v == c) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

std::string ideal_line(const RingIdeal& i) {
    std::vector<Elem> elems;
    for (Elem x = 0; x < i.ring->size(); ++x)
        if (i.contains(x)) elems.push_back(x);
    return element_list(*i.ring->algebra, elems);
}

} // namespace stone
