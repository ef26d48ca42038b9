// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// The corpus holds 50 algebras (power sets over 1..5 points, free term
// algebras on 1..3 generators, 42 random satisfiable presentations on
// 2..3 generators) plus a fixed family of finite spaces. Every check is
// exact; each criterion also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stone/compactify.hpp"
#include "stone/duality.hpp"
#include "stone/hom_z2.hpp"
#include "stone/io.hpp"
#include "stone/ring.hpp"
#include "stone/term.hpp"

using namespace stone;

namespace {

struct CorpusEntry {
    std::string name;
    std::shared_ptr<Presentation> pres;   // set for term algebras
    std::shared_ptr<BoolAlgebra> direct;  // set otherwise

    const BoolAlgebra& algebra() const { return pres ? pres->algebra() : *direct; }
};

TermPtr random_term(std::mt19937& rng, const std::vector<std::string>& gens, int depth) {
    unsigned pick = rng() % (depth > 0 ? 8u : 4u);
    switch (pick) {
        case 0: return make_zero();
        case 1: return make_one();
        case 2:
        case 3: return make_var(gens[rng() % gens.size()]);
        case 4:
        case 5: return make_not(random_term(rng, gens, depth - 1));
        case 6: return make_and(random_term(rng, gens, depth - 1),
                                random_term(rng, gens, depth - 1));
        default: return make_or(random_term(rng, gens, depth - 1),
                                random_term(rng, gens, depth - 1));
    }
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    for (unsigned n = 1; n <= 5; ++n)
        out.push_back({"powerset-" + std::to_string(n), nullptr,
                       std::make_shared<BoolAlgebra>(BoolAlgebra::power_set(n))});

    const std::vector<std::vector<std::string>> gen_lists = {
        {"a"}, {"a", "b"}, {"a", "b", "c"}};
    for (const auto& gens : gen_lists)
        out.push_back({"free-" + std::to_string(gens.size()),
                       std::make_shared<Presentation>(
                           gens, std::vector<std::pair<TermPtr, TermPtr>>{}),
                       nullptr});

    std::mt19937 rng(2026);
    unsigned made = 0;
    while (made < 42) {
        std::vector<std::string> gens = rng() % 2 == 0
                                            ? std::vector<std::string>{"a", "b"}
                                            : std::vector<std::string>{"a", "b", "c"};
        std::vector<std::pair<TermPtr, TermPtr>> rels;
        unsigned count = 1 + rng() % 2;
        for (unsigned i = 0; i < count; ++i)
            rels.emplace_back(random_term(rng, gens, 3), random_term(rng, gens, 2));
        try {
            out.push_back({"random-" + std::to_string(made),
                           std::make_shared<Presentation>(gens, rels), nullptr});
            ++made;
        } catch (const UnsatisfiablePresentation&) {
            // Reroll: only satisfiable presentations enter the corpus.
        }
    }
    return out;
}

struct NamedSpace {
    std::string name;
    TopSpace space;
};

std::vector<NamedSpace> build_spaces(const std::vector<CorpusEntry>& corpus) {
    std::vector<NamedSpace> out;
    for (std::size_t n = 1; n <= 4; ++n)
        out.push_back({"discrete-" + std::to_string(n), discrete_space(n)});
    out.push_back({"indiscrete-2", indiscrete_space(2)});
    Bitset pt(2);
    pt.set(0);
    out.push_back({"sierpinski",
                   make_space(2, {Bitset(2), pt, Bitset::full(2)})});
    Bitset b01(4), b23(4);
    b01.set(0); b01.set(1);
    b23.set(2); b23.set(3);
    out.push_back({"two-blocks", space_from_basis(4, {b01, b23})});
    for (const auto& entry : corpus) {
        const BoolAlgebra& b = entry.algebra();
        if (b.atom_count() > 4 || b.size() > 16) continue;
        out.push_back({"ultra-" + entry.name, stone_space(b).space});
    }
    return out;
}

// --- reporting -------------------------------------------------------------

int failures = 0;

void run(int index, const std::string& title, double budget_seconds,
         const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    std::string error;
    try {
        detail = body();
    } catch (const StoneError& e) {
        error = std::string(e.code()) + ": " + e.what();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && secs <= budget_seconds;
    if (!ok) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s, budget %.0f s)%s%s\n",
                ok ? "PASS" : "FAIL", index, title.c_str(),
                error.empty() ? detail.c_str() : error.c_str(), secs,
                budget_seconds,
                error.empty() && secs > budget_seconds ? " — over budget" : "",
                "");
}

std::string count_line(std::size_t n, const std::string& what) {
    return std::to_string(n) + " " + what;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw InputError(message);
}

// Index of the ultrafilter whose member set matches, or throws.
std::size_t ultra_index(const std::vector<Filter>& us, const Bitset& members) {
    for (std::size_t i = 0; i < us.size(); ++i)
        if (us[i].members == members) return i;
    throw InputError("no ultrafilter with the requested member set");
}

} // namespace

int main() {
    std::vector<CorpusEntry> corpus = build_corpus();
    std::vector<NamedSpace> spaces = build_spaces(corpus);

    run(1, "representation certificate for every corpus algebra", 10.0, [&] {
        require(corpus.size() >= 50, "corpus is smaller than 50 algebras");
        for (const auto& entry : corpus) {
            const BoolAlgebra& b = entry.algebra();
            DualityCertificate c = rep_iso(b);
            require(c.kind == "rep_iso" && c.witness.size() == b.size(),
                    "incomplete witness for " + entry.name);
        }
        return count_line(corpus.size(), "algebras certified");
    });

    run(2, "space-side certificate for every Stone space in the corpus", 5.0, [&] {
        std::size_t certified = 0;
        for (const auto& ns : spaces) {
            if (!check_axioms(ns.space).stone) continue;
            DualityCertificate c = rep_homeo(ns.space);
            require(c.kind == "rep_homeo" && c.witness.size() == ns.space.points,
                    "incomplete witness for " + ns.name);
            ++certified;
        }
        require(certified >= 7, "too few Stone spaces certified");
        return count_line(certified, "spaces certified");
    });

    run(3, "ultrafilters, homomorphisms and prime ideals agree", 10.0, [&] {
        BoolAlgebra z2 = BoolAlgebra::z2();
        for (const auto& entry : corpus) {
            const BoolAlgebra& b = entry.algebra();
            auto us = all_ultrafilters(b);
            auto hs = all_homs(b, z2);
            BooleanRing r = to_ring(b);
            auto ps = prime_ideals(r);
            require(us.size() == b.atom_count() && hs.size() == us.size() &&
                        ps.size() == us.size(),
                    "count mismatch for " + entry.name);
            // Three index maps, the third computed without ultrafilters;
            // the composite of the first two must equal it.
            for (std::size_t j = 0; j < hs.size(); ++j) {
                std::size_t u = ultra_index(us, hom_to_ultra(hs[j]).members);
                std::size_t via_ultra = 0;
                bool found = false;
                Bitset kernel(b.size());
                for (Elem x = 0; x < b.size(); ++x)
                    if (hs[j](x) == 0) kernel.set(x);
                for (std::size_t k = 0; k < ps.size(); ++k) {
                    if (ps[k].members == ~us[u].members) via_ultra = k;
                    if (ps[k].members == kernel) {
                        require(!found, "duplicate prime ideal");
                        found = true;
                        require(ps[k].members == ~us[u].members,
                                "hom kernel and ultrafilter complement disagree");
                    }
                }
                require(found && ps[via_ultra].members == kernel,
                        "certificate composition broke for " + entry.name);
            }
        }
        return count_line(corpus.size(), "algebras with matching triples");
    });

    run(4, "filter classifications agree on every filter of P(X), |X| <= 4", 60.0, [&] {
        std::size_t filters_seen = 0, pairs = 0;
        for (unsigned n = 1; n <= 4; ++n) {
            BoolAlgebra p = BoolAlgebra::power_set(n);
            auto fs = all_filters(p);
            for (const auto& f : fs) {
                FilterClassification c = classify(f);
                if (c.proper)
                    require(c.prime == c.maximal && c.maximal == c.ultra,
                            "classification split on a proper filter");
                else
                    require(!c.maximal && !c.ultra,
                            "improper filter flagged maximal or ultra");
                ++filters_seen;
            }
            for (const auto& u : all_ultrafilters(p))
                for (Elem x = 0; x < p.size(); ++x) {
                    std::vector<Elem> set = u.elements();
                    set.push_back(x);
                    require(has_fpp(p, set) == u.contains(x),
                            "maximal-FPP corollary failed");
                    ++pairs;
                }
        }
        return count_line(filters_seen, "filters classified, " +
                                            std::to_string(pairs) +
                                            " ultrafilter/element pairs");
    });

    run(5, "ring round trips are table-identical", 2.0, [&] {
        for (const auto& entry : corpus) {
            const BoolAlgebra& b = entry.algebra();
            BooleanRing r = to_ring(b);
            require(to_algebra(r).same_object(b), "round trip left the object");
            for (Elem x = 0; x < b.size(); ++x) {
                require(r.add(x, x) == r.zero(), "2x != 0");
                for (Elem y = 0; y < b.size(); ++y) {
                    require(r.mul(x, y) == r.mul(y, x), "multiplication not commutative");
                    require(r.add(x, y) == r.add(y, x), "addition not commutative");
                    require(r.add(r.add(x, y), r.mul(x, y)) == b.join(x, y),
                            "join does not come back from the ring");
                }
            }
            RingTables t = ring_tables(r);
            BoolAlgebra back = algebra_from_ring_tables(t);
            RingTables t2 = ring_tables(to_ring(back));
            require(t.add == t2.add && t.mul == t2.mul, "ring tables drifted");
        }
        return count_line(corpus.size(), "rings round-tripped");
    });

    run(6, "Zariski laws and basic clopens on every spectrum", 5.0, [&] {
        for (const auto& entry : corpus) {
            const BoolAlgebra& b = entry.algebra();
            BooleanRing r = to_ring(b);
            SpectrumSpace s = spectrum(r);
            for (Elem x = 0; x < r.size(); ++x)
                for (Elem y = 0; y < r.size(); ++y) {
                    require(s.basic_open(r.mul(x, y)) ==
                                (s.basic_open(x) & s.basic_open(y)),
                            "V_{xy} law failed");
                    Elem join = r.add(r.add(x, y), r.mul(x, y));
                    require(s.basic_open(join) ==
                                (s.basic_open(x) | s.basic_open(y)),
                            "V union law failed");
                }
            require(every_clopen_is_basic(s), "a clopen is not basic");
        }
        return count_line(corpus.size(), "spectra verified");
    });

    run(7, "one non-principal point; membership matches the set oracle", 1.0, [&] {
        require(one_point_ultrafilters().non_principal_count == 1,
                "non-principal count is not 1");
        std::mt19937 rng(2026);
        // Oracle: concrete subsets of {0..159}; labels stay below 64, so
        // bits 64..159 witness the cofinite tail exactly.
        auto concrete = [](const CofiniteElement& e) {
            Bitset s(160);
            for (std::uint32_t p = 0; p < 160; ++p) {
                bool listed = e.labels.count(p) != 0;
                if (e.cofinite ? !listed : listed) s.set(p);
            }
            return s;
        };
        for (int q = 0; q < 1000; ++q) {
            CofiniteElement e;
            e.cofinite = rng() % 2 == 0;
            for (unsigned i = rng() % 33; i > 0; --i) e.labels.insert(rng() % 64);
            Bitset s = concrete(e);
            CofinitePoint p;
            if (rng() % 8 == 0) {
                p.infinity = true;
                bool tail = true;
                for (std::uint32_t t = 64; t < 160; ++t)
                    if (!s.test(t)) tail = false;
                require(member(p, e) == tail, "membership at infinity disagrees");
            } else {
                p.n = rng() % 128;
                require(member(p, e) == s.test(p.n),
                        "membership at " + std::to_string(p.n) + " disagrees");
            }
        }
        return "1 non-principal point, 1000 queries matched";
    });

    run(8, "universal extension for every map into every small K", 30.0, [&] {
        std::size_t maps = 0;
        for (unsigned xs = 1; xs <= 3; ++xs) {
            BoolAlgebra px = BoolAlgebra::power_set(xs);
            for (std::size_t ks = 1; ks <= 4; ++ks) {
                TopSpace k = discrete_space(ks);
                require(check_axioms(k).compact && check_axioms(k).hausdorff,
                        "target space is not compact Hausdorff");
                std::vector<std::size_t> f(xs, 0);
                while (true) {
                    StoneCechExtension ext = stone_cech_extend(px, f, k);
                    for (std::size_t x = 0; x < xs; ++x)
                        require(ext.extension[ext.embedding[x]] == f[x],
                                "extension does not restrict to f");
                    ++maps;
                    std::size_t i = 0;
                    while (i < xs && ++f[i] == ks) f[i++] = 0;
                    if (i == xs) break;
                }
            }
        }
        return count_line(maps, "maps extended");
    });

    run(9, "domination of nested sub-algebras", 5.0, [&] {
        std::mt19937 rng(7);
        std::size_t pairs = 0;
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t n = 3 + rng() % 3;
            auto random_set = [&] {
                Bitset s(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (rng() % 2) s.set(i);
                return s;
            };
            std::vector<Bitset> g1 = {random_set()};
            std::vector<Bitset> g2 = g1;
            g2.push_back(random_set());
            std::vector<Bitset> g3 = g2;
            g3.push_back(random_set());
            BoolAlgebra b1 = subalgebra(n, g1);
            BoolAlgebra b2 = subalgebra(n, g2);
            BoolAlgebra b3 = subalgebra(n, g3);
            Domination d21 = domination(b1, b2);
            Domination d32 = domination(b2, b3);
            Domination d31 = domination(b1, b3);
            for (const Domination* d : {&d21, &d32, &d31}) {
                require(d->comparable, "nested pair reported incomparable");
                std::vector<bool> hit(d->to.ultrafilters.size(), false);
                for (auto v : d->map) hit[v] = true;
                for (bool h : hit) require(h, "restriction is not surjective");
                ++pairs;
            }
            for (std::size_t j = 0; j < d31.map.size(); ++j)
                require(d31.map[j] == d21.map[d32.map[j]],
                        "restriction does not compose transitively");
        }
        require(pairs >= 20, "fewer than 20 nested pairs exercised");
        return count_line(pairs, "nested pairs verified");
    });

    run(10, "printer/parser round trip and curated syntax errors", 1.0, [&] {
        std::size_t elements = 0;
        for (const auto& entry : corpus) {
            if (!entry.pres) continue;
            const Presentation& p = *entry.pres;
            for (Elem e = 0; e < p.algebra().size(); ++e) {
                require(p.canonicalize(*parse(p.print_canonical(e))) == e,
                        "round trip moved an element of " + entry.name);
                ++elements;
            }
        }
        const std::vector<std::pair<std::string, std::size_t>> malformed = {
            {"", 0},        {"a +", 3},  {"* a", 0},    {"(a", 2},
            {"a)", 1},      {"a b", 2},  {"a + * b", 4}, {"!", 1},
            {"a ** b", 3},  {"()", 1},   {"a + (b * )", 9}, {"a + !", 5},
        };
        for (const auto& [text, pos] : malformed) {
            try {
                parse(text);
                require(false, "malformed input parsed: \"" + text + "\"");
            } catch (const SyntaxError& e) {
                require(e.position() == pos,
                        "wrong position for \"" + text + "\": got " +
                            std::to_string(e.position()));
            }
        }
        return count_line(elements, "elements round-tripped, 12 malformed inputs placed");
    });

    run(11, "negative paths raise their named errors", 2.0, [&] {
        BoolAlgebra p2 = BoolAlgebra::power_set(2);
        OpTables t;
        t.join.assign(4, std::vector<Elem>(4));
        t.meet.assign(4, std::vector<Elem>(4));
        t.comp.assign(4, 0);
        for (Elem x = 0; x < 4; ++x) {
            t.comp[x] = p2.complement(x);
            for (Elem y = 0; y < 4; ++y) {
                t.join[x][y] = p2.join(x, y);
                t.meet[x][y] = p2.meet(x, y);
            }
        }
        t.join[1][2] = 0;  // fault injection
        try {
            BoolAlgebra::from_tables(t);
            require(false, "mutated tables validated");
        } catch (const AxiomViolation&) {}

        Bitset half(3);
        half.set(0);
        half.set(1);
        try {
            compactify(subalgebra(3, {half}));
            require(false, "non-separating sub-algebra compactified");
        } catch (const DoesNotSeparate&) {}

        try {
            rep_homeo(indiscrete_space(2));
            require(false, "non-Hausdorff space certified");
        } catch (const NotStone&) {}

        try {
            Presentation p({"a"}, {{parse("a"), parse("!a")}});
            require(false, "unsatisfiable presentation built an algebra");
        } catch (const UnsatisfiablePresentation&) {}

        return "4 fault injections refused with the named errors";
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
