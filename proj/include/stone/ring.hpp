#ifndef STONE_RING_HPP
#define STONE_RING_HPP

#include <vector>

#include "stone/algebra.hpp"
#include "stone/duality.hpp"
#include "stone/filter.hpp"
#include "stone/topology.hpp"

namespace stone {

/// The Boolean ring induced on an algebra's carrier: addition is
/// symmetric difference x*!y + y*!x, multiplication is meet.
struct BooleanRing {
    const BoolAlgebra* algebra = nullptr;

    std::size_t size() const { return algebra->size(); }
    Elem zero() const { return algebra->zero(); }
    Elem one() const { return algebra->one(); }
    Elem add(Elem x, Elem y) const { return x ^ y; }
    Elem mul(Elem x, Elem y) const { return algebra->meet(x, y); }
};

/// Builds the induced ring and verifies the ring axioms plus the derived
/// facts (idempotence, characteristic 2, commutativity) exhaustively.
BooleanRing to_ring(const BoolAlgebra& b);

/// Recovers the algebra: join x+y+xy, meet xy, complement 1+x. Verifies
/// the recovered tables coincide with the source algebra's.
const BoolAlgebra& to_algebra(const BooleanRing& r);

/// Raw ring tables (for the NotBooleanRing path and table round trips).
struct RingTables {
    std::vector<std::vector<Elem>> add;
    std::vector<std::vector<Elem>> mul;
};

RingTables ring_tables(const BooleanRing& r);

/// Validates a raw Boolean ring: ring axioms, then idempotence of every
/// element (NotBooleanRing otherwise), then builds the induced algebra
/// through the axiom validator.
BoolAlgebra algebra_from_ring_tables(const RingTables& t);

struct RingIdeal {
    const BooleanRing* ring = nullptr;
    Bitset members;

    bool contains(Elem x) const { return members.test(x); }
};

struct IdealClassification {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
};

bool is_ring_ideal(const BooleanRing& r, const Bitset& members);
RingIdeal make_ring_ideal(const BooleanRing& r, const Bitset& members);

/// Closure of A under linear combinations r1*a1 + ... + rn*an, iterated
/// to a fixpoint; the smallest ideal containing A (verified).
RingIdeal ideal_generated(const BooleanRing& r, const std::vector<Elem>& set);

/// Flags by independent definitions; prime <=> maximal is asserted for
/// proper ideals of Boolean rings.
IdealClassification classify_ideal(const RingIdeal& i);

/// All prime ideals, in canonical order (complements of the ultrafilters
/// of the induced algebra, each verified prime; completeness is
/// cross-checked exhaustively at small carriers).
std::vector<RingIdeal> prime_ideals(const BooleanRing& r);

/// The Zariski spectrum: points are prime ideals, basic opens
/// V_x = { P : x not in P }. Construction asserts V_{x*y} = V_x n V_y,
/// the clopen-ness of each V_x via V_{1+x}, and the Stone flags.
struct SpectrumSpace {
    TopSpace space;
    const BooleanRing* ring = nullptr;
    std::vector<RingIdeal> points;
    std::vector<Bitset> basis;  // V_x per element

    const Bitset& basic_open(Elem x) const { return basis[x]; }
};

SpectrumSpace spectrum(const BooleanRing& r);

/// F -> B \ F from the ultrafilter space onto Spec(R_B), verified
/// bijective and bicontinuous via U_x -> V_x.
DualityCertificate spec_ultra_homeo(const BoolAlgebra& b);

/// Every clopen of the materialized spectrum equals some V_x.
bool every_clopen_is_basic(const SpectrumSpace& s);

std::string ideal_line(const RingIdeal& i);

} // namespace stone

#endif
