#ifndef STONE_HOM_Z2_HPP
#define STONE_HOM_Z2_HPP

#include <cstdint>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/duality.hpp"
#include "stone/topology.hpp"

namespace stone {

/// The product space 2^B: one point per map B -> {0,1}, encoded as a
/// bitmask over the carrier (bit x = value at element x). The topology is
/// generated by the subbasis sets {f : f(a)=0} and {f : f(a)=1}.
///
/// Guards: subbasis membership queries up to |carrier| = 16; the full open
/// family is materialized only up to |carrier| = 4.
struct FunctionSpace {
    const BoolAlgebra* algebra = nullptr;
    std::size_t point_count = 0;  // 2^|carrier|

    Bitset zero_set(Elem a) const;  // 0_a
    Bitset one_set(Elem a) const;   // 1_a

    bool materialized = false;
    TopSpace space;  // valid when materialized
};

FunctionSpace function_space(const BoolAlgebra& b);

/// Every homomorphism B -> Z2 exactly once, in canonical (ultrafilter)
/// order; the count equals the atom count.
std::vector<Homomorphism> all_homs(const BoolAlgebra& b, const BoolAlgebra& z2);

/// Rebuilds Hom(B,Z2) inside 2^B as the intersection
/// A_0 n A_1 n (n A_{a+b}) n (n A_{a*b}), each A-set assembled from
/// unions of subbasis intersections, compares it with direct law
/// filtering, and verifies the set is closed.
bool hom_closedness_check(const BoolAlgebra& b);

/// The homeomorphism f -> f^{-1}{1} between Hom(B,Z2) (with the subspace
/// topology of 2^B) and the ultrafilter space.
DualityCertificate hom_ultra_homeo(const BoolAlgebra& b);

/// Listing line: the sorted elements a homomorphism maps to 1.
std::string hom_line(const Homomorphism& h);

} // namespace stone

#endif
