#ifndef STONE_IO_HPP
#define STONE_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/term.hpp"
#include "stone/topology.hpp"

namespace stone {

/// An algebra loaded from its text format. `presentation` is set only for
/// the `terms` header and owns the model data behind term-element names.
struct LoadedAlgebra {
    std::shared_ptr<Presentation> presentation;
    BoolAlgebra algebra;
};

/// Parses the line-oriented algebra format: `powerset <n>`, or `table <k>`
/// followed by the k x k join and meet tables and a complement row, or
/// `terms` followed by a generator list and `rel <term> = <term>` lines.
LoadedAlgebra parse_algebra(const std::string& text);
LoadedAlgebra load_algebra(const std::string& path);

/// Parses `space <n>` with one open set per line, or `basis <n>` with one
/// basis set per line (closed under intersection and union before
/// validation). Sets are brace lists `{0,2,5}` or bare point lists `0 2 5`.
TopSpace parse_space(const std::string& text);
TopSpace load_space(const std::string& path);

/// Parses `subalgebra <n>` followed by generator lines (same set syntax)
/// and closes the generators into a sub-algebra of P({0..n-1}).
BoolAlgebra parse_subalgebra(const std::string& text);
BoolAlgebra load_subalgebra(const std::string& path);

/// Parses `map <n>` followed by n whitespace-separated image points.
std::vector<std::size_t> parse_point_map(const std::string& text);
std::vector<std::size_t> load_point_map(const std::string& path);

std::string read_file(const std::string& path);

/// A point subset in the listing syntax `{0,2,5}`.
std::string brace_points(const Bitset& s);

/// The space listing emitted by the CLI: `space <n>` then one open per
/// line in canonical order.
std::vector<std::string> space_lines(const TopSpace& x);

} // namespace stone

#endif
