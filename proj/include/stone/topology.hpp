#ifndef STONE_TOPOLOGY_HPP
#define STONE_TOPOLOGY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/bitset.hpp"
#include "stone/filter.hpp"

namespace stone {

/// A finite topological space with its open sets stored extensionally,
/// sorted in lexicographic point-set order.
struct TopSpace {
    std::size_t points = 0;
    std::vector<Bitset> opens;

    bool is_open(const Bitset& s) const;
    bool is_closed(const Bitset& s) const;
    bool is_clopen(const Bitset& s) const { return is_open(s) && is_closed(s); }
};

/// Validates the family: contains the empty set and the full set, closed
/// under pairwise intersection and arbitrary union. Throws InputError.
TopSpace make_space(std::size_t points, std::vector<Bitset> opens);

/// Closes a basis under intersection and union. Guarded at 2^16 opens.
TopSpace space_from_basis(std::size_t points, const std::vector<Bitset>& basis);

TopSpace discrete_space(std::size_t points);
TopSpace indiscrete_space(std::size_t points);

/// Smallest closed superset of s.
Bitset closure(const TopSpace& x, const Bitset& s);

/// Connected components as a partition, via the non-separability graph
/// (y inseparable from x when every open around one contains the other).
std::vector<Bitset> components(const TopSpace& x);
std::size_t component_of(const TopSpace& x, std::size_t p);

struct SpaceAxioms {
    bool hausdorff = false;
    bool t1 = false;
    bool compact = false;
    bool zero_dimensional = false;
    bool totally_disconnected = false;
    bool stone = false;
};

/// Each flag by its definition. Compactness is established by reducing
/// covers to finite subcovers, not assumed. Local compactness is omitted:
/// it is vacuous on finite spaces.
SpaceAxioms check_axioms(const TopSpace& x);

/// All clopen subsets, in lexicographic order.
std::vector<Bitset> clopens(const TopSpace& x);

/// The clopen Boolean algebra of the space (a set-family algebra over the
/// points).
BoolAlgebra clop(const TopSpace& x);

/// Verifies that every component equals the intersection of the clopen
/// sets around each of its points; requires compact Hausdorff.
bool component_clopen_identity(const TopSpace& x);

/// A verified continuous map: preimage of every open is open.
struct ContinuousMap {
    const TopSpace* src = nullptr;
    const TopSpace* dst = nullptr;
    std::vector<std::size_t> map;

    std::size_t operator()(std::size_t p) const { return map[p]; }
};

bool is_continuous(const std::vector<std::size_t>& map, const TopSpace& x, const TopSpace& y);
ContinuousMap validate_continuous(const std::vector<std::size_t>& map,
                                  const TopSpace& x, const TopSpace& y);
bool is_homeomorphism(const ContinuousMap& f);

/// The Stone space of an algebra: points are its ultrafilters, basic
/// opens are U_e = { F : e in F }. Construction asserts the basis laws
/// U_{x*y} = U_x n U_y, U_{x+y} = U_x u U_y, U_{!x} = complement.
struct StoneSpace {
    TopSpace space;
    const BoolAlgebra* algebra = nullptr;
    std::vector<Filter> ultrafilters;  // canonical order
    std::vector<Bitset> basis;         // U_e per carrier element

    const Bitset& basic_open(Elem e) const { return basis[e]; }
};

StoneSpace stone_space(const BoolAlgebra& b);

/// Filter convergence over the power set of a space's points. `pow` must
/// be the power-set algebra on x.points.
bool converges(const Filter& f, std::size_t p, const TopSpace& x);
Filter neighborhood_filter(std::size_t p, const TopSpace& x, const BoolAlgebra& pow);

/// Image filter {f(A) : A in F} saturated upward; verified to be a filter
/// and an ultrafilter when the input is one.
Filter pushforward(const std::vector<std::size_t>& map, const Filter& f,
                   const BoolAlgebra& pow_target);

/// True iff every filter converging to a point pushes forward to a filter
/// converging to the image; asserted equal to the open-preimage test.
bool continuity_via_filters(const std::vector<std::size_t>& map,
                            const TopSpace& x, const TopSpace& y);

/// For B = P(X): checks, for every ultrafilter F, that A in F iff F lies
/// in the closure of the principal ultrafilters at points of A inside the
/// Stone space of B.
bool pr_closure_check(const BoolAlgebra& power_set, Elem a);

} // namespace stone

#endif
