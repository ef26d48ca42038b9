#include "stone/io.hpp"

#include <fstream>
#include <sstream>

#include "stone/compactify.hpp"

namespace stone {

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::size_t parse_count(const std::string& tok, const std::string& what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(what + " must be a non-negative integer, got '" + tok + "'");
    return std::stoul(tok);
}

Bitset parse_point_set(const std::string& line, std::size_t n) {
    Bitset s(n);
    std::string body = line;
    if (!line.empty() && line.front() == '{') {
        if (line.back() != '}')
            throw InputError("unterminated brace set: " + line);
        body = line.substr(1, line.size() - 2);
        for (auto& c : body)
            if (c == ',') c = ' ';
    }
    for (const auto& t : tokens(body)) {
        std::size_t p = parse_count(t, "point");
        if (p >= n)
            throw InputError("point " + t + " outside the universe of size " + std::to_string(n));
        s.set(p);
    }
    return s;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

LoadedAlgebra parse_algebra(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty())
        throw InputError("empty algebra file");
    auto head = tokens(lines[0]);

    if (head[0] == "powerset") {
        if (head.size() != 2)
            throw InputError("expected: powerset <n>");
        std::size_t n = parse_count(head[1], "universe size");
        if (n == 0)
            throw TrivialAlgebra("powerset 0 has 0 = 1");
        if (n > 20)
            throw SizeGuard("powerset universes are limited to 20 points");
        if (lines.size() > 1)
            throw InputError("unexpected content after the powerset header");
        return LoadedAlgebra{nullptr, BoolAlgebra::power_set(static_cast<unsigned>(n))};
    }

    if (head[0] == "table") {
        if (head.size() != 2)
            throw InputError("expected: table <k>");
        std::size_t k = parse_count(head[1], "carrier size");
        if (lines.size() != 1 + 2 * k + 1)
            throw InputError("table " + std::to_string(k) + " needs " +
                             std::to_string(2 * k + 1) + " table rows, got " +
                             std::to_string(lines.size() - 1));
        auto row = [&](const std::string& line) {
            auto ts = tokens(line);
            if (ts.size() != k)
                throw InputError("table row has " + std::to_string(ts.size()) +
                                 " entries, expected " + std::to_string(k));
            std::vector<Elem> out;
            for (const auto& t : ts) {
                std::size_t v = parse_count(t, "table entry");
                if (v >= k)
                    throw InputError("table entry " + t + " outside the carrier");
                out.push_back(static_cast<Elem>(v));
            }
            return out;
        };
        OpTables t;
        for (std::size_t i = 0; i < k; ++i) t.join.push_back(row(lines[1 + i]));
        for (std::size_t i = 0; i < k; ++i) t.meet.push_back(row(lines[1 + k + i]));
        t.comp = row(lines[1 + 2 * k]);
        return LoadedAlgebra{nullptr, BoolAlgebra::from_tables(t)};
    }

    if (head[0] == "terms") {
        if (head.size() != 1)
            throw InputError("the terms header takes no arguments");
        if (lines.size() < 2)
            throw InputError("terms needs a generator list line");
        std::vector<std::string> gens = tokens(lines[1]);
        std::vector<std::pair<TermPtr, TermPtr>> rels;
        for (std::size_t i = 2; i < lines.size(); ++i) {
            auto ts = tokens(lines[i]);
            if (ts.empty() || ts[0] != "rel")
                throw InputError("expected: rel <term> = <term>");
            std::string body = lines[i].substr(3);
            std::size_t eq = body.find('=');
            if (eq == std::string::npos)
                throw InputError("relation line lacks '=': " + lines[i]);
            rels.emplace_back(parse(body.substr(0, eq)), parse(body.substr(eq + 1)));
        }
        auto pres = std::make_shared<Presentation>(std::move(gens), std::move(rels));
        return LoadedAlgebra{pres, pres->algebra()};
    }

    throw InputError("unknown algebra header: " + head[0]);
}

LoadedAlgebra load_algebra(const std::string& path) {
    return parse_algebra(read_file(path));
}

TopSpace parse_space(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty())
        throw InputError("empty space file");
    auto head = tokens(lines[0]);
    if (head.size() != 2 || (head[0] != "space" && head[0] != "basis"))
        throw InputError("expected: space <n> or basis <n>");
    std::size_t n = parse_count(head[1], "point count");
    std::vector<Bitset> sets;
    for (std::size_t i = 1; i < lines.size(); ++i)
        sets.push_back(parse_point_set(lines[i], n));
    if (head[0] == "basis")
        return space_from_basis(n, sets);
    return make_space(n, std::move(sets));
}

TopSpace load_space(const std::string& path) {
    return parse_space(read_file(path));
}

BoolAlgebra parse_subalgebra(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty())
        throw InputError("empty sub-algebra file");
    auto head = tokens(lines[0]);
    if (head.size() != 2 || head[0] != "subalgebra")
        throw InputError("expected: subalgebra <n>");
    std::size_t n = parse_count(head[1], "universe size");
    std::vector<Bitset> gens;
    for (std::size_t i = 1; i < lines.size(); ++i)
        gens.push_back(parse_point_set(lines[i], n));
    return subalgebra(n, gens);
}

BoolAlgebra load_subalgebra(const std::string& path) {
    return parse_subalgebra(read_file(path));
}

std::vector<std::size_t> parse_point_map(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty())
        throw InputError("empty map file");
    auto head = tokens(lines[0]);
    if (head.size() != 2 || head[0] != "map")
        throw InputError("expected: map <n>");
    std::size_t n = parse_count(head[1], "domain size");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < lines.size(); ++i)
        for (const auto& t : tokens(lines[i]))
            out.push_back(parse_count(t, "image point"));
    if (out.size() != n)
        throw InputError("map lists " + std::to_string(out.size()) +
                         " image points, expected " + std::to_string(n));
    return out;
}

std::vector<std::size_t> load_point_map(const std::string& path) {
    return parse_point_map(read_file(path));
}

std::string brace_points(const Bitset& s) {
    std::string out = "{";
    bool first = true;
    for (auto p : s.members()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(p);
    }
    return out + "}";
}

std::vector<std::string> space_lines(const TopSpace& x) {
    std::vector<std::string> out;
    out.push_back("space " + std::to_string(x.points));
    for (const auto& o : x.opens)
        out.push_back(brace_points(o));
    return out;
}

} // namespace stone
