#ifndef STONE_TERM_HPP
#define STONE_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stone/algebra.hpp"

namespace stone {

/// Boolean term AST. `+` is Or, `*` is And, `!` is Not; `*` binds tighter
/// than `+`, `!` tightest, binary operators left-associative.
struct Term {
    enum class Kind { Zero, One, Var, Not, And, Or };
    Kind kind;
    std::string var;                  // Kind::Var
    std::shared_ptr<const Term> lhs;  // Not / And / Or
    std::shared_ptr<const Term> rhs;  // And / Or
};

using TermPtr = std::shared_ptr<const Term>;

TermPtr make_zero();
TermPtr make_one();
TermPtr make_var(std::string name);
TermPtr make_not(TermPtr t);
TermPtr make_and(TermPtr a, TermPtr b);
TermPtr make_or(TermPtr a, TermPtr b);

/// Parses the term grammar; throws SyntaxError with a 0-based character
/// position and the expected-token description.
TermPtr parse(const std::string& text);

/// Collects variable names appearing in a term.
std::vector<std::string> variables(const Term& t);

/// An assignment is a bitmask over the generator list: generator j holds
/// value bit (g-1-j), so ascending masks enumerate assignments in
/// lexicographic order by generator list with 0 < 1.
bool evaluate(const Term& t, std::uint32_t assignment,
              const std::vector<std::string>& generators);

/// A generators-plus-relations presentation of a Boolean algebra. The
/// carrier is the set of truth functions on the satisfying assignments
/// (models); atoms correspond to models in ascending assignment order.
class Presentation {
public:
    /// Throws UnsatisfiablePresentation when no assignment satisfies every
    /// relation, UnknownVariable when a relation uses an undeclared name,
    /// SizeGuard beyond 4 generators.
    Presentation(std::vector<std::string> generators,
                 std::vector<std::pair<TermPtr, TermPtr>> relations);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<std::pair<TermPtr, TermPtr>>& relations() const { return rels_; }
    const std::vector<std::uint32_t>& models() const { return models_; }
    const BoolAlgebra& algebra() const { return algebra_; }

    /// Truth bit-vector of t over the models, as a canonical element.
    Elem canonicalize(const Term& t) const;

    /// Sum-of-products over the satisfied models; "0"/"1" for the bounds.
    std::string print_canonical(Elem e) const;

private:
    std::vector<std::string> gens_;
    std::vector<std::pair<TermPtr, TermPtr>> rels_;
    std::vector<std::uint32_t> models_;
    BoolAlgebra algebra_;
};

} // namespace stone

#endif
