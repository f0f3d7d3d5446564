#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

// Malformed textual input (element strings, scalars, trees).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Family or constructor precondition violated (size mismatch, label bullets, ...).
struct ConstraintError : std::invalid_argument {
  explicit ConstraintError(const std::string& what) : std::invalid_argument(what) {}
};

// Exhaustive census would exceed the predicate-evaluation budget.
struct FeasibilityError : std::runtime_error {
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

// affine_image result would be longer than the circle; caller must split first.
struct CoversCircleError : std::runtime_error {
  explicit CoversCircleError(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-range rank or argument.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace thompson
