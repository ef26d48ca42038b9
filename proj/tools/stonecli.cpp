#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stone/compactify.hpp"
#include "stone/duality.hpp"
#include "stone/hom_z2.hpp"
#include "stone/io.hpp"
#include "stone/ring.hpp"

using nlohmann::json;
using namespace stone;

namespace {

struct Output {
    std::string command;
    bool as_json = false;
    bool reverse = false;  // --seed-order reverse
    std::vector<std::string> lines;
    json data = json::object();

    void line(std::string s) { lines.push_back(std::move(s)); }

    void listing(const std::string& key, std::vector<std::string> ls) {
        if (reverse) std::reverse(ls.begin(), ls.end());
        data[key] = ls;
        for (auto& l : ls) lines.push_back(std::move(l));
    }

    int finish(const std::string& status, int exit_code) {
        if (as_json) {
            json env;
            env["command"] = command;
            env["status"] = status;
            env["data"] = data;
            std::cout << env.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
        return exit_code;
    }
};

json cert_json(const DualityCertificate& c) {
    json j;
    j["kind"] = c.kind;
    j["checks"] = c.checks;
    json w = json::array();
    for (const auto& [a, b] : c.witness) w.push_back(a + " -> " + b);
    j["witness"] = w;
    return j;
}

void emit_cert(Output& out, const DualityCertificate& c) {
    out.data["certificates"].push_back(cert_json(c));
    out.line("certificate " + c.kind);
    for (const auto& ck : c.checks) out.line("  " + ck);
    for (const auto& [a, b] : c.witness) out.line("  " + a + " -> " + b);
}

std::vector<std::string> axiom_lines(const SpaceAxioms& ax) {
    auto flag = [](const char* name, bool v) {
        return std::string(name) + ": " + (v ? "true" : "false");
    };
    return {flag("t1", ax.t1),
            flag("hausdorff", ax.hausdorff),
            flag("compact", ax.compact),
            flag("zero_dimensional", ax.zero_dimensional),
            flag("totally_disconnected", ax.totally_disconnected),
            flag("stone", ax.stone)};
}

Elem parse_element(const LoadedAlgebra& la, const std::string& text) {
    const BoolAlgebra& b = la.algebra;
    if (la.presentation)
        return la.presentation->canonicalize(*parse(text));
    if (!text.empty() && text.front() == '{') {
        Bitset s(b.universe_size());
        std::string body = text.substr(1, text.size() - (text.back() == '}' ? 2 : 1));
        for (auto& c : body)
            if (c == ',') c = ' ';
        std::istringstream in(body);
        std::size_t p;
        while (in >> p) {
            if (p >= b.universe_size())
                throw InputError("point " + std::to_string(p) + " outside the universe");
            s.set(p);
        }
        return b.element_for_set(s);
    }
    for (Elem e = 0; e < b.size(); ++e)
        if (b.element_name(e) == text) return e;
    if (text.find_first_not_of("0123456789") == std::string::npos) {
        std::size_t v = std::stoul(text);
        if (v < b.size()) return static_cast<Elem>(v);
    }
    throw InputError("unknown element: " + text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean algebra / Stone space toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string seed_order = "canonical";
    app.add_flag("--json", as_json, "structured output envelope");
    app.add_option("--seed-order", seed_order, "listing order: canonical or reverse")
        ->check(CLI::IsMember({"canonical", "reverse"}));

    std::string alg_file, space_file, map_file, sub_z, sub_y, elt_text, point_text;
    std::vector<std::string> gen_elems;

    auto* validate = app.add_subcommand("validate", "validate an algebra file");
    validate->add_option("algebra-file", alg_file)->required();
    auto* ultra = app.add_subcommand("ultra", "list all ultrafilters");
    ultra->add_option("algebra-file", alg_file)->required();
    auto* homs = app.add_subcommand("homs", "list all homomorphisms into Z2");
    homs->add_option("algebra-file", alg_file)->required();
    auto* spect = app.add_subcommand("spec", "list the prime ideals of the induced ring");
    spect->add_option("algebra-file", alg_file)->required();
    auto* stone_cmd = app.add_subcommand("stone", "emit the Stone space");
    stone_cmd->add_option("algebra-file", alg_file)->required();
    auto* dual = app.add_subcommand("dual", "duality checks");
    auto* dual_check = dual->add_subcommand("check", "representation + triple homeomorphisms");
    dual_check->add_option("algebra-file", alg_file)->required();
    auto* space_cmd = app.add_subcommand("space", "space checks");
    auto* space_check = space_cmd->add_subcommand("check", "axiom flags + representation");
    space_check->add_option("space-file", space_file)->required();
    auto* filter_cmd = app.add_subcommand("filter", "filter operations");
    auto* filter_gen = filter_cmd->add_subcommand("gen", "generate the filter of a subset");
    filter_gen->add_option("algebra-file", alg_file)->required();
    filter_gen->add_option("elements", gen_elems, "generating elements");
    auto* compact = app.add_subcommand("compactify", "compactify a separating sub-algebra");
    compact->add_option("subalgebra-file", sub_z)->required();
    auto* dominate = app.add_subcommand("dominate", "domination of compactifications");
    dominate->add_option("subalg-Z", sub_z)->required();
    dominate->add_option("subalg-Y", sub_y)->required();
    auto* onepoint = app.add_subcommand("onepoint", "finite-cofinite algebra queries");
    auto* op_member = onepoint->add_subcommand("member", "ultrafilter membership");
    op_member->add_option("elt", elt_text, "fin{..} or cofin{..}")->required();
    op_member->add_option("point", point_text, "a number or inf")->required();
    auto* extend = app.add_subcommand("extend", "Stone-Cech extension of a map");
    extend->add_option("algebra-file", alg_file)->required();
    extend->add_option("map-file", map_file)->required();
    extend->add_option("space-file", space_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Output out;
    out.as_json = as_json;
    out.reverse = seed_order == "reverse";
    try {
        if (*validate) {
            out.command = "validate";
            LoadedAlgebra la = load_algebra(alg_file);
            out.data["atoms"] = la.algebra.atom_count();
            out.data["carrier"] = la.algebra.size();
            out.line("valid: atoms " + std::to_string(la.algebra.atom_count()) +
                     ", carrier " + std::to_string(la.algebra.size()));
        } else if (*ultra) {
            out.command = "ultra";
            LoadedAlgebra la = load_algebra(alg_file);
            std::vector<std::string> ls;
            for (const auto& u : all_ultrafilters(la.algebra)) ls.push_back(filter_line(u));
            out.listing("ultrafilters", std::move(ls));
        } else if (*homs) {
            out.command = "homs";
            LoadedAlgebra la = load_algebra(alg_file);
            BoolAlgebra z2 = BoolAlgebra::z2();
            std::vector<std::string> ls;
            for (const auto& h : all_homs(la.algebra, z2)) ls.push_back(hom_line(h));
            out.listing("homs", std::move(ls));
        } else if (*spect) {
            out.command = "spec";
            LoadedAlgebra la = load_algebra(alg_file);
            BooleanRing r = to_ring(la.algebra);
            std::vector<std::string> ls;
            for (const auto& p : prime_ideals(r)) ls.push_back(ideal_line(p));
            out.listing("prime_ideals", std::move(ls));
        } else if (*stone_cmd) {
            out.command = "stone";
            LoadedAlgebra la = load_algebra(alg_file);
            StoneSpace s = stone_space(la.algebra);
            out.listing("space", space_lines(s.space));
        } else if (*dual_check) {
            out.command = "dual check";
            LoadedAlgebra la = load_algebra(alg_file);
            out.data["certificates"] = json::array();
            emit_cert(out, rep_iso(la.algebra));
            emit_cert(out, hom_ultra_homeo(la.algebra));
            emit_cert(out, spec_ultra_homeo(la.algebra));
        } else if (*space_check) {
            out.command = "space check";
            TopSpace x = load_space(space_file);
            SpaceAxioms ax = check_axioms(x);
            out.listing("axioms", axiom_lines(ax));
            if (ax.stone) {
                out.data["certificates"] = json::array();
                emit_cert(out, rep_homeo(x));
            }
        } else if (*filter_gen) {
            out.command = "filter gen";
            LoadedAlgebra la = load_algebra(alg_file);
            std::vector<Elem> gens;
            for (const auto& t : gen_elems) gens.push_back(parse_element(la, t));
            Filter f = generated_filter(la.algebra, gens);
            out.listing("filter", {filter_line(f)});
        } else if (*compact) {
            out.command = "compactify";
            BoolAlgebra sub = load_subalgebra(sub_z);
            Compactification c = compactify(sub);
            out.listing("space", space_lines(c.stone.space));
            std::vector<std::string> emb;
            for (std::size_t x = 0; x < c.embedding.size(); ++x)
                emb.push_back(std::to_string(x) + " -> " + std::to_string(c.embedding[x]));
            out.listing("embedding", std::move(emb));
        } else if (*dominate) {
            out.command = "dominate";
            BoolAlgebra bz = load_subalgebra(sub_z);
            BoolAlgebra by = load_subalgebra(sub_y);
            Domination d = domination(bz, by);
            if (!d.comparable) {
                out.data["witness"] = d.witness;
                out.line("refusal: " + d.witness + " is not in the Y algebra");
                return out.finish("refusal", 1);
            }
            std::vector<std::string> ls;
            for (std::size_t j = 0; j < d.map.size(); ++j)
                ls.push_back(std::to_string(j) + " -> " + std::to_string(d.map[j]));
            out.listing("map", std::move(ls));
        } else if (*op_member) {
            out.command = "onepoint member";
            CofiniteElement e = CofiniteElement::parse(elt_text);
            CofinitePoint p = CofinitePoint::parse(point_text);
            bool m = member(p, e);
            out.data["member"] = m;
            out.line(m ? "true" : "false");
        } else if (*extend) {
            out.command = "extend";
            LoadedAlgebra la = load_algebra(alg_file);
            auto f = load_point_map(map_file);
            TopSpace k = load_space(space_file);
            StoneCechExtension ext = stone_cech_extend(la.algebra, f, k);
            std::vector<std::string> ls;
            for (std::size_t i = 0; i < ext.extension.size(); ++i)
                ls.push_back(std::to_string(i) + " -> " + std::to_string(ext.extension[i]));
            out.listing("extension", std::move(ls));
        }
    } catch (const StoneError& e) {
        out.data["error"] = e.code();
        out.data["message"] = e.what();
        out.line(e.what());
        bool input = e.code() == "InputError" || e.code() == "SyntaxError" ||
                     e.code() == "SizeGuard";
        return out.finish(input ? "input-error" : "fail", input ? 2 : 1);
    }
    return out.finish("pass", 0);
}
