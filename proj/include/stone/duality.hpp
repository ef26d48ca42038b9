#ifndef STONE_DUALITY_HPP
#define STONE_DUALITY_HPP

#include <string>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/topology.hpp"

namespace stone {

/// Outcome of a representation / homeomorphism verification. A certificate
/// is only produced when every check passed; failed checks throw.
struct DualityCertificate {
    std::string kind;
    std::vector<std::string> checks;  // human-readable pass records
    // Witnessing map, printed pairwise (source -> target).
    std::vector<std::pair<std::string, std::string>> witness;
};

/// x -> U_x from B onto the clopen algebra of its Stone space, verified
/// to be a bijective homomorphism.
DualityCertificate rep_iso(const BoolAlgebra& b);

/// x -> { clopen U : x in U } from a Stone space onto the ultrafilter
/// space of its clopen algebra, verified bijective and bicontinuous.
/// Throws NotStone when the axioms fail.
DualityCertificate rep_homeo(const TopSpace& x);

/// F -> phi^{-1}(F), the continuous map dual to an algebra homomorphism.
/// Verifies the preimage identity (U_x pulls back to U_{phi(x)}) and, when
/// phi is an isomorphism, that the result is a homeomorphism.
ContinuousMap dual_hom(const Homomorphism& phi,
                       const StoneSpace& of_dst, const StoneSpace& of_src);

/// U -> f^{-1}(U), the homomorphism dual to a continuous map. `clop_src`
/// and `clop_dst` must be clop() of the map's source and target. When f is
/// a homeomorphism the result is verified an isomorphism.
Homomorphism dual_map(const ContinuousMap& f,
                      const BoolAlgebra& clop_dst, const BoolAlgebra& clop_src);

/// Exhaustive isomorphism search by atom permutation.
bool algebras_isomorphic(const BoolAlgebra& a, const BoolAlgebra& b);

/// Exhaustive homeomorphism search by point permutation.
bool spaces_homeomorphic(const TopSpace& x, const TopSpace& y);

} // namespace stone

#endif
