#ifndef GINMAP_ERRORS_HPP
#define GINMAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginmap {

// Inverting zero in the coefficient field.
struct ZeroDivisionError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operand lengths or matrix dimensions do not line up.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two objects built over different variable rosters were combined.
struct RosterMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation that needs a nonzero polynomial received zero.
struct ZeroPolynomialError : std::domain_error {
    using std::domain_error::domain_error;
};

// Degree preconditions (too small for homogenization, mismatched across
// components, wrong basis kind for a Hermitian form).
struct DegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The squared norm of the map is not divisible by the source norm; the map
// does not take the source hyperquadric into the target hyperquadric.
struct NotDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Independent random coordinate changes kept disagreeing after all retries.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A map failed verification or is structurally unusable.
struct InvalidMapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two reports with different source/target signatures or order sets.
struct SignatureMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unknown catalog name or a missing/invalid catalog parameter.
struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Syntax error in polynomial text; `position` is a 0-based byte offset.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct UnknownVariableError : ParseError {
    using ParseError::ParseError;
};

struct NegativeExponentError : ParseError {
    using ParseError::ParseError;
};

// A bipolynomial whose coefficient matrix is not Hermitian (not real-valued).
struct RealFormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ginmap

#endif
