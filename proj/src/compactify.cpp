#include "stone/compactify.hpp"

#include <algorithm>

namespace stone {

std::vector<Bitset> close_generators(std::size_t universe, std::vector<Bitset> gens) {
    gens.push_back(Bitset(universe));
    gens.push_back(Bitset::full(universe));
    std::sort(gens.begin(), gens.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> add;
        auto push = [&](const Bitset& s) {
            if (std::find(gens.begin(), gens.end(), s) == gens.end() &&
                std::find(add.begin(), add.end(), s) == add.end())
                add.push_back(s);
        };
        for (const auto& a : gens) {
            push(~a);
            for (const auto& b : gens) {
                push(a | b);
                push(a & b);
            }
        }
        if (!add.empty()) {
            grew = true;
            gens.insert(gens.end(), add.begin(), add.end());
            std::sort(gens.begin(), gens.end(),
                      [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
        }
    }
    return gens;
}

BoolAlgebra subalgebra(std::size_t universe, const std::vector<Bitset>& gens) {
    return BoolAlgebra::from_set_family(universe, close_generators(universe, gens));
}

bool separates_points(const BoolAlgebra& sub) {
    const std::size_t n = sub.universe_size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            bool sep = false;
            for (Elem e = 0; e < sub.size(); ++e) {
                const Bitset& s = sub.concrete_set(e);
                if (s.test(x) && !s.test(y)) { sep = true; break; }
            }
            if (!sep) return false;
        }
    return true;
}

Compactification compactify(const BoolAlgebra& sub) {
    if (!separates_points(sub))
        throw DoesNotSeparate("the sub-algebra does not separate points of the universe");
    Compactification c;
    c.stone = stone_space(sub);
    const std::size_t n = sub.universe_size();

    c.embedding.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        Bitset members(sub.size());
        for (Elem e = 0; e < sub.size(); ++e)
            if (sub.concrete_set(e).test(x)) members.set(e);
        bool found = false;
        for (std::size_t i = 0; i < c.stone.ultrafilters.size(); ++i)
            if (c.stone.ultrafilters[i].members == members) {
                c.embedding[x] = i;
                found = true;
                break;
            }
        if (!found)
            throw NotUltra("F_x is not an ultrafilter of the sub-algebra");
    }

    const std::size_t m = c.stone.ultrafilters.size();
    Bitset image(m);
    for (auto i : c.embedding) {
        if (image.test(i) && n > 1)
            throw DoesNotSeparate("embedding is not injective");
        image.set(i);
    }
    if (!c.stone.space.is_open(image))
        throw AxiomViolation("embedded image is not open");
    // Discrete image: each embedded point is isolated within the image.
    for (auto i : c.embedding) {
        bool isolated = false;
        for (const auto& o : c.stone.space.opens) {
            Bitset trace = o & image;
            if (trace.count() == 1 && trace.test(i)) { isolated = true; break; }
        }
        if (!isolated)
            throw AxiomViolation("embedded image is not discrete");
    }
    if (closure(c.stone.space, image) != Bitset::full(m))
        throw AxiomViolation("embedded image is not dense");
    return c;
}

CofiniteElement CofiniteElement::parse(const std::string& text) {
    bool cof;
    std::size_t brace;
    if (text.rfind("fin{", 0) == 0) { cof = false; brace = 3; }
    else if (text.rfind("cofin{", 0) == 0) { cof = true; brace = 5; }
    else throw InputError("cofinite element must start with fin{ or cofin{");
    if (text.back() != '}')
        throw InputError("cofinite element must end with }");
    CofiniteElement e;
    e.cofinite = cof;
    std::string body = text.substr(brace + 1, text.size() - brace - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad label '" + tok + "' in cofinite element");
        e.labels.insert(static_cast<std::uint32_t>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return e;
}

std::string CofiniteElement::str() const {
    std::string out = cofinite ? "cofin{" : "fin{";
    bool first = true;
    for (auto v : labels) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(v);
    }
    return out + "}";
}

namespace {

std::set<std::uint32_t> set_diff(const std::set<std::uint32_t>& a,
                                 const std::set<std::uint32_t>& b) {
    std::set<std::uint32_t> out;
    for (auto v : a)
        if (!b.count(v)) out.insert(v);
    return out;
}

std::set<std::uint32_t> set_union(const std::set<std::uint32_t>& a,
                                  const std::set<std::uint32_t>& b) {
    std::set<std::uint32_t> out = a;
    out.insert(b.begin(), b.end());
    return out;
}

std::set<std::uint32_t> set_inter(const std::set<std::uint32_t>& a,
                                  const std::set<std::uint32_t>& b) {
    std::set<std::uint32_t> out;
    for (auto v : a)
        if (b.count(v)) out.insert(v);
    return out;
}

} // namespace

CofiniteElement CofiniteElement::join(const CofiniteElement& o) const {
    CofiniteElement r;
    if (!cofinite && !o.cofinite) {
        r.cofinite = false;
        r.labels = set_union(labels, o.labels);
    } else if (cofinite && o.cofinite) {
        r.cofinite = true;
        r.labels = set_inter(labels, o.labels);
    } else {
        const auto& fin = cofinite ? o.labels : labels;
        const auto& cof = cofinite ? labels : o.labels;
        r.cofinite = true;
        r.labels = set_diff(cof, fin);
    }
    return r;
}

CofiniteElement CofiniteElement::meet(const CofiniteElement& o) const {
    return complement().join(o.complement()).complement();
}

CofiniteElement CofiniteElement::complement() const {
    CofiniteElement r;
    r.cofinite = !cofinite;
    r.labels = labels;
    return r;
}

CofinitePoint CofinitePoint::parse(const std::string& text) {
    CofinitePoint p;
    if (text == "inf") {
        p.infinity = true;
        return p;
    }
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("point must be a non-negative integer or 'inf'");
    p.n = static_cast<std::uint32_t>(std::stoul(text));
    return p;
}

std::string CofinitePoint::str() const {
    return infinity ? "inf" : std::to_string(n);
}

bool member(const CofinitePoint& p, const CofiniteElement& a) {
    if (p.infinity) return a.cofinite;
    bool listed = a.labels.count(p.n) != 0;
    return a.cofinite ? !listed : listed;
}

OnePointDescription one_point_ultrafilters() {
    OnePointDescription d;
    d.classification =
        "an ultrafilter containing a finite set contains a singleton and is "
        "principal; every other ultrafilter contains all cofinite sets and "
        "equals the cofinite filter at infinity";
    d.non_principal_count = 1;
    return d;
}

StoneCechExtension stone_cech_extend(const BoolAlgebra& power_set,
                                     const std::vector<std::size_t>& f,
                                     const TopSpace& k) {
    if (power_set.backend() != BoolAlgebra::Backend::PowerSet)
        throw InputError("Stone-Cech extension starts from P(X)");
    const std::size_t n = power_set.universe_size();
    if (f.size() != n)
        throw InputError("map is not total on X");
    for (auto v : f)
        if (v >= k.points) throw InputError("map value outside the target space");
    auto kx = check_axioms(k);
    if (!(kx.compact && kx.hausdorff))
        throw PreconditionFailed("target must be compact Hausdorff");

    StoneCechExtension ext;
    ext.stone = stone_space(power_set);
    const std::size_t m = ext.stone.ultrafilters.size();

    // alpha: point i of X corresponds to the principal ultrafilter whose
    // basic open around the atom of i is a singleton.
    ext.embedding.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const Bitset& u = ext.stone.basic_open(power_set.atom(static_cast<unsigned>(x)));
        if (u.count() != 1)
            throw AxiomViolation("principal basic open is not a singleton");
        ext.embedding[x] = u.members()[0];
    }

    auto image_in_k = [&](Elem a) {
        Bitset img(k.points);
        for (unsigned i = 0; i < power_set.atom_count(); ++i)
            if (power_set.has_atom(a, i)) img.set(f[i]);
        return img;
    };

    // Each ultrafilter determines its image as the single point in the
    // intersection of the closures cl(f(A)) over its members A.
    ext.extension.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Bitset inter = Bitset::full(k.points);
        for (Elem a = 0; a < power_set.size(); ++a)
            if (ext.stone.ultrafilters[i].contains(a))
                inter &= closure(k, image_in_k(a));
        if (inter.count() != 1)
            throw IntersectionNotSingleton(
                "closure intersection has " + std::to_string(inter.count()) + " points");
        ext.extension[i] = inter.members()[0];
    }

    // Extension property: ext o alpha = f.
    for (std::size_t x = 0; x < n; ++x)
        if (ext.extension[ext.embedding[x]] != f[x])
            throw AxiomViolation("extension does not restrict to f");

    // Closure identity: cl(ext(U_A)) = cl(f(A)) for every A.
    for (Elem a = 0; a < power_set.size(); ++a) {
        Bitset img(k.points);
        const Bitset& ua = ext.stone.basic_open(a);
        for (std::size_t i = 0; i < m; ++i)
            if (ua.test(i)) img.set(ext.extension[i]);
        if (closure(k, img) != closure(k, image_in_k(a)))
            throw AxiomViolation("closure identity fails at " + power_set.element_name(a));
    }

    // Continuity, by preimages and by filter convergence.
    if (!is_continuous(ext.extension, ext.stone.space, k))
        throw AxiomViolation("extension is not continuous");
    if (ext.stone.space.points <= 4 && k.points <= 20)
        if (!continuity_via_filters(ext.extension, ext.stone.space, k))
            throw AxiomViolation("extension fails filter-convergence continuity");
    return ext;
}

BoolAlgebra compactification_from_space(const TopSpace& y, const Bitset& x_points) {
    if (x_points.size() != y.points)
        throw InputError("subset size does not match the space");
    if (!check_axioms(y).stone)
        throw PreconditionFailed("the ambient space is not a Stone space");
    if (closure(y, x_points) != Bitset::full(y.points))
        throw PreconditionFailed("the subset is not dense");
    // Subspace discreteness: every subset point is isolated in the trace.
    for (auto p : x_points.members()) {
        bool isolated = false;
        for (const auto& o : y.opens) {
            Bitset trace = o & x_points;
            if (trace.count() == 1 && trace.test(p)) { isolated = true; break; }
        }
        if (!isolated)
            throw PreconditionFailed("the subspace topology on the subset is not discrete");
    }

    // B := { A n X : A clopen }, re-indexed over the subset points.
    auto xs = x_points.members();
    auto cl_sets = clopens(y);
    std::vector<Bitset> members;
    for (const auto& a : cl_sets) {
        Bitset t(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (a.test(xs[j])) t.set(j);
        members.push_back(t);
    }
    // A -> A n X must be injective (density makes it so).
    {
        auto sorted = members;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw AxiomViolation("two clopens trace to the same subset of X");
    }
    BoolAlgebra sub = BoolAlgebra::from_set_family(xs.size(), members);
    if (!separates_points(sub))
        throw DoesNotSeparate("recovered algebra does not separate the subset points");

    // Clop(Y) is isomorphic to the recovered algebra.
    BoolAlgebra cy = clop(y);
    std::vector<Elem> iso(cy.size());
    for (Elem e = 0; e < cy.size(); ++e) {
        const Bitset& a = cy.concrete_set(e);
        Bitset t(xs.size());
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (a.test(xs[j])) t.set(j);
        iso[e] = sub.element_for_set(t);
    }
    if (!is_isomorphism(validate_hom(iso, cy, sub)))
        throw AxiomViolation("A -> A n X is not an isomorphism");

    // Y is homeomorphic to U(B): y -> the ultrafilter of traces around y.
    StoneSpace s = stone_space(sub);
    std::vector<std::size_t> map(y.points);
    for (std::size_t p = 0; p < y.points; ++p) {
        Bitset mem(sub.size());
        for (Elem e = 0; e < cy.size(); ++e)
            if (cy.concrete_set(e).test(p)) mem.set(iso[e]);
        bool found = false;
        for (std::size_t i = 0; i < s.ultrafilters.size(); ++i)
            if (s.ultrafilters[i].members == mem) {
                map[p] = i;
                found = true;
                break;
            }
        if (!found)
            throw NotUltra("a point's trace filter is not an ultrafilter");
    }
    if (!is_homeomorphism(validate_continuous(map, y, s.space)))
        throw AxiomViolation("Y is not homeomorphic to the recovered Stone space");
    return sub;
}

Domination domination(const BoolAlgebra& sub_z, const BoolAlgebra& sub_y) {
    if (sub_z.universe_size() != sub_y.universe_size())
        throw InputError("sub-algebras live over different universes");

    Domination d;
    // Containment B_Z within B_Y, with a witness on refusal.
    std::vector<Elem> z_in_y(sub_z.size());
    for (Elem z = 0; z < sub_z.size(); ++z) {
        bool found = false;
        for (Elem yv = 0; yv < sub_y.size(); ++yv)
            if (sub_y.concrete_set(yv) == sub_z.concrete_set(z)) {
                z_in_y[z] = yv;
                found = true;
                break;
            }
        if (!found) {
            d.comparable = false;
            d.witness = sub_z.element_name(z);
            return d;
        }
    }

    d.comparable = true;
    d.from = stone_space(sub_y);
    d.to = stone_space(sub_z);
    d.map.resize(d.from.ultrafilters.size());
    for (std::size_t j = 0; j < d.from.ultrafilters.size(); ++j) {
        Bitset restricted(sub_z.size());
        for (Elem z = 0; z < sub_z.size(); ++z)
            if (d.from.ultrafilters[j].contains(z_in_y[z])) restricted.set(z);
        bool found = false;
        for (std::size_t i = 0; i < d.to.ultrafilters.size(); ++i)
            if (d.to.ultrafilters[i].members == restricted) {
                d.map[j] = i;
                found = true;
                break;
            }
        if (!found)
            throw NotUltra("restriction of an ultrafilter is not an ultrafilter");
    }

    // Surjective, continuous, identity on principal points.
    std::vector<bool> hit(d.to.ultrafilters.size(), false);
    for (auto i : d.map) hit[i] = true;
    for (bool h : hit)
        if (!h) throw AxiomViolation("restriction map is not surjective");
    validate_continuous(d.map, d.from.space, d.to.space);
    // Identity on principal points: F_x in B_Y restricts to F_x in B_Z.
    auto principal = [](const BoolAlgebra& b, const StoneSpace& s, std::size_t x) {
        Bitset mem(b.size());
        for (Elem e = 0; e < b.size(); ++e)
            if (b.concrete_set(e).test(x)) mem.set(e);
        for (std::size_t i = 0; i < s.ultrafilters.size(); ++i)
            if (s.ultrafilters[i].members == mem) return i;
        throw NotUltra("F_x is not an ultrafilter");
    };
    for (std::size_t x = 0; x < sub_y.universe_size(); ++x)
        if (d.map[principal(sub_y, d.from, x)] != principal(sub_z, d.to, x))
            throw AxiomViolation("restriction is not the identity on principal points");
    return d;
}

} // namespace stone
