#ifndef STONE_ERROR_HPP
#define STONE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace stone {

/// Base class for all verification and input errors. `code()` is the stable
/// machine-readable name used by the CLI and the tests.
class StoneError : public std::runtime_error {
public:
    StoneError(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define STONE_ERROR(Name) \
    class Name : public StoneError { \
    public: \
        explicit Name(const std::string& msg) : StoneError(#Name, msg) {} \
    };

STONE_ERROR(AxiomViolation)
STONE_ERROR(TrivialAlgebra)
STONE_ERROR(MixedAlgebras)
STONE_ERROR(NotAHomomorphism)
STONE_ERROR(SizeGuard)
STONE_ERROR(EmptySet)
STONE_ERROR(NoFPP)
STONE_ERROR(NotProper)
STONE_ERROR(AvoidInFilter)
STONE_ERROR(NotUltra)
STONE_ERROR(NotAFilter)
STONE_ERROR(NotStone)
STONE_ERROR(PreconditionFailed)
STONE_ERROR(NotBooleanRing)
STONE_ERROR(DoesNotSeparate)
STONE_ERROR(UnsatisfiablePresentation)
STONE_ERROR(UnknownVariable)
STONE_ERROR(IntersectionNotSingleton)
STONE_ERROR(InputError)

#undef STONE_ERROR

/// Parse error with a character position and a description of what was
/// expected there.
class SyntaxError : public StoneError {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : StoneError("SyntaxError",
                     "at position " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace stone

#endif
