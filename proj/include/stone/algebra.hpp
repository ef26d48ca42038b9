#ifndef STONE_ALGEBRA_HPP
#define STONE_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stone/bitset.hpp"
#include "stone/error.hpp"

namespace stone {

/// Canonical index of an element within its algebra's carrier.
using Elem = std::uint32_t;

/// Raw operation tables over a carrier {0..k-1}, the input of validation.
struct OpTables {
    std::vector<std::vector<Elem>> join; // k x k
    std::vector<std::vector<Elem>> meet; // k x k
    std::vector<Elem> comp;              // k
    std::vector<std::string> labels;     // optional, defaults to indices
};

/// A finite Boolean algebra in canonical form.
///
/// Every validated algebra is stored as the power set of its atoms: with m
/// atoms the carrier is {0..2^m-1} and element e contains atom i exactly
/// when bit i of e is set. Listing elements by ascending index is then
/// standard binary counting over the atom list (atom 0 least significant),
/// which is the canonical carrier order everywhere. Join, meet and
/// complement are bitwise; the backend only determines how elements print.
class BoolAlgebra {
public:
    enum class Backend { PowerSet, Z2, Tables, Terms, SetFamily };

    /// Power set of the universe {0..n-1}.
    static BoolAlgebra power_set(unsigned n);

    /// The two-element algebra; elements print as "0" and "1".
    static BoolAlgebra z2();

    /// Validates raw tables against the axioms; throws AxiomViolation with
    /// a witnessing tuple naming the first broken law, or TrivialAlgebra.
    static BoolAlgebra from_tables(const OpTables& t);

    /// A family of subsets of {0..universe-1} closed under union,
    /// intersection and complement and containing the empty set and the
    /// universe (a sub-Boolean algebra of the power set). Throws
    /// AxiomViolation if the family is not closed, TrivialAlgebra if it
    /// degenerates.
    static BoolAlgebra from_set_family(std::size_t universe, std::vector<Bitset> members);

    /// Term-algebra constructor used by the term front-end: m = number of
    /// models, names = canonical printed form per element (size 2^m).
    static BoolAlgebra from_models(unsigned model_count, std::vector<std::string> names);

    unsigned atom_count() const { return atoms_; }
    std::size_t size() const { return std::size_t{1} << atoms_; }
    Backend backend() const { return backend_; }

    Elem zero() const { return 0; }
    Elem one() const { return static_cast<Elem>(size() - 1); }
    Elem join(Elem x, Elem y) const { return x | y; }
    Elem meet(Elem x, Elem y) const { return x & y; }
    Elem complement(Elem x) const { return one() & ~x; }
    bool leq(Elem x, Elem y) const { return join(x, y) == y; }

    /// Element with exactly atom i; atoms listed in canonical order.
    Elem atom(unsigned i) const { return Elem{1} << i; }
    bool has_atom(Elem e, unsigned i) const { return (e >> i) & 1; }
    std::vector<Elem> atoms() const;

    std::string element_name(Elem e) const;

    /// SetFamily / PowerSet backends: the subset of the ambient universe
    /// an element denotes.
    const Bitset& concrete_set(Elem e) const;
    std::size_t universe_size() const { return universe_; }

    /// Finds the element denoting the given subset of the universe;
    /// throws InputError if the set is not in the family.
    Elem element_for_set(const Bitset& s) const;

    /// Carrier enumeration guard (full scans refuse more than 20 atoms).
    void guard_enumeration() const;

    /// Identity used for MixedAlgebras checks; distinct objects are
    /// distinct algebras even when equal as tables.
    bool same_object(const BoolAlgebra& o) const { return this == &o; }

    /// Structural equality of operation tables in canonical form: same
    /// atom count (canonical ops are then identical by construction).
    bool same_tables(const BoolAlgebra& o) const { return atoms_ == o.atoms_; }

private:
    BoolAlgebra() = default;

    unsigned atoms_ = 0;
    Backend backend_ = Backend::PowerSet;
    std::size_t universe_ = 0;            // PowerSet / SetFamily
    std::vector<Bitset> concrete_;        // SetFamily: set per canonical index
    std::vector<std::string> names_;      // Terms / Tables: name per index
};

/// An element tagged with its algebra; equality and order demand the same
/// algebra object.
struct Element {
    const BoolAlgebra* alg = nullptr;
    Elem idx = 0;

    friend bool operator==(const Element& a, const Element& b) {
        return a.alg == b.alg && a.idx == b.idx;
    }
};

void require_same_algebra(const Element& x, const Element& y);
bool leq(const Element& x, const Element& y);
Element sup(const Element& x, const Element& y);
Element inf(const Element& x, const Element& y);

/// A verified structure-preserving map between algebras.
struct Homomorphism {
    const BoolAlgebra* src = nullptr;
    const BoolAlgebra* dst = nullptr;
    std::vector<Elem> map; // size src->size()

    Elem operator()(Elem x) const { return map[x]; }
};

/// Checks the homomorphism laws on every pair and throws NotAHomomorphism
/// naming the broken law and a witness; also asserts the derived complement
/// preservation.
Homomorphism validate_hom(const std::vector<Elem>& map,
                          const BoolAlgebra& src, const BoolAlgebra& dst);

bool is_isomorphism(const Homomorphism& h);

/// Formats a sorted element list "[a, b, c]" in canonical element syntax.
std::string element_list(const BoolAlgebra& a, const std::vector<Elem>& elems);

} // namespace stone

#endif
