#ifndef STONE_COMPACTIFY_HPP
#define STONE_COMPACTIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/topology.hpp"

namespace stone {

/// Closure of a generator family under union, intersection and complement.
std::vector<Bitset> close_generators(std::size_t universe, std::vector<Bitset> gens);

/// The sub-Boolean algebra of P({0..universe-1}) generated by `gens`.
BoolAlgebra subalgebra(std::size_t universe, const std::vector<Bitset>& gens);

/// True iff for any two distinct points some member contains exactly one.
bool separates_points(const BoolAlgebra& sub);

/// A compactification of the finite discrete space on the sub-algebra's
/// universe: the Stone space plus the verified embedding x -> F_x.
struct Compactification {
    StoneSpace stone;
    std::vector<std::size_t> embedding;  // universe point -> Stone point
};

/// Throws DoesNotSeparate; verifies the embedding is injective, open onto
/// a discrete image, and dense.
Compactification compactify(const BoolAlgebra& sub);

/// Symbolic element of the finite-cofinite algebra over the non-negative
/// integers: a finite label set, or the complement of one.
struct CofiniteElement {
    bool cofinite = false;
    std::set<std::uint32_t> labels;

    static CofiniteElement parse(const std::string& text);  // fin{..} / cofin{..}
    std::string str() const;

    CofiniteElement join(const CofiniteElement& o) const;
    CofiniteElement meet(const CofiniteElement& o) const;
    CofiniteElement complement() const;
    bool operator==(const CofiniteElement& o) const = default;
};

/// Point of the one-point compactification: a principal ultrafilter or
/// the cofinite filter at infinity.
struct CofinitePoint {
    bool infinity = false;
    std::uint32_t n = 0;

    static CofinitePoint parse(const std::string& text);  // "inf" or a number
    std::string str() const;
};

/// Membership of an element in the ultrafilter at a point (equivalently,
/// whether the point lies in the basic clopen U_A).
bool member(const CofinitePoint& p, const CofiniteElement& a);

/// The symbolic classification of the ultrafilters of the finite-cofinite
/// algebra: one principal ultrafilter per integer and exactly one
/// non-principal point.
struct OnePointDescription {
    std::string classification;
    std::size_t non_principal_count;  // always 1; asserted, not assumed
};

OnePointDescription one_point_ultrafilters();

/// The Stone-Cech extension of f : X -> K at finite scale. `power_set`
/// must be P(X); `f` maps universe points into K, compact Hausdorff.
/// Builds the extension through the singleton intersections of closures,
/// then asserts the extension property, the closure identity
/// cl(ext(U_A)) = cl(f(A)), and continuity by both criteria.
struct StoneCechExtension {
    StoneSpace stone;                    // U(P(X))
    std::vector<std::size_t> embedding;  // alpha
    std::vector<std::size_t> extension;  // Stone point -> K point
};

StoneCechExtension stone_cech_extend(const BoolAlgebra& power_set,
                                     const std::vector<std::size_t>& f,
                                     const TopSpace& k);

/// Recovers the separating sub-algebra {A n X : A clopen} from a Stone
/// space Y with a dense discrete subset X, and verifies Clop(Y) is
/// isomorphic to it and Y homeomorphic to its ultrafilter space.
BoolAlgebra compactification_from_space(const TopSpace& y, const Bitset& x_points);

/// Domination between the compactifications of two separating
/// sub-algebras over the same universe.
struct Domination {
    bool comparable = false;
    std::string witness;                 // a member of Z outside Y, on refusal
    StoneSpace from;                     // U(B_Y)
    StoneSpace to;                       // U(B_Z)
    std::vector<std::size_t> map;        // F -> F n B_Z
};

Domination domination(const BoolAlgebra& sub_z, const BoolAlgebra& sub_y);

} // namespace stone

#endif
