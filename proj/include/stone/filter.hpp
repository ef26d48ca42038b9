#ifndef STONE_FILTER_HPP
#define STONE_FILTER_HPP

#include <optional>
#include <vector>

#include "stone/algebra.hpp"
#include "stone/bitset.hpp"

namespace stone {

/// A filter stored extensionally: one bit per carrier element.
struct Filter {
    const BoolAlgebra* alg = nullptr;
    Bitset members;

    bool contains(Elem x) const { return members.test(x); }
    std::vector<Elem> elements() const;
};

struct FilterClassification {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool ultra = false;
};

struct Ideal {
    const BoolAlgebra* alg = nullptr;
    Bitset members;

    bool contains(Elem x) const { return members.test(x); }
};

/// Checks nonemptiness, meet-closure and upward closure; throws NotAFilter.
Filter make_filter(const BoolAlgebra& a, const Bitset& members);
bool is_filter(const BoolAlgebra& a, const Bitset& members);

/// Checks ideal laws (closed under +, absorbs *); throws NotAFilter on
/// failure (shared error for subset-structure validation).
Ideal make_ideal(const BoolAlgebra& a, const Bitset& members);
bool is_ideal(const BoolAlgebra& a, const Bitset& members);

/// Finite product property. For finite A this is equivalent to the full
/// product being nonzero, since every sub-product dominates it.
bool has_fpp(const BoolAlgebra& a, const std::vector<Elem>& set);

/// The filter F_A of all x above some finite product of A; minimal among
/// filters containing A. Throws NoFPP.
Filter generated_filter(const BoolAlgebra& a, const std::vector<Elem>& set);

/// Up-set of a single element.
Filter principal_filter(const BoolAlgebra& a, Elem x);

/// Each flag is computed independently from its own definition; the
/// prime/maximal/ultra equivalence on proper filters is a theorem the
/// tests assert, never an assumption here.
FilterClassification classify(const Filter& f);

/// Deterministic ultrafilter extension: greedy over the carrier in
/// canonical order, keeping the avoided element out when one is given.
Filter extend_to_ultrafilter(const Filter& f, std::optional<Elem> avoid = std::nullopt);

/// Every ultrafilter exactly once, in canonical order (one per atom; the
/// count is asserted).
std::vector<Filter> all_ultrafilters(const BoolAlgebra& a);

/// Exhaustive filter enumeration by scanning all element subsets.
/// Guarded: carrier of at most 16 elements.
std::vector<Filter> all_filters(const BoolAlgebra& a);

/// Indicator homomorphism of an ultrafilter into the given two-element
/// algebra; throws NotUltra.
Homomorphism ultra_to_hom(const Filter& f, const BoolAlgebra& z2);

/// Preimage of 1 under a homomorphism into a two-element algebra.
Filter hom_to_ultra(const Homomorphism& h);

/// B minus F, verified to be a prime ideal; throws NotUltra.
Ideal complement_ideal(const Filter& f);

/// Listing line: sorted element list in canonical element syntax.
std::string filter_line(const Filter& f);
std::string ideal_line(const Ideal& i);

} // namespace stone

#endif
