#pragma once
#include <stdexcept>
#include <string>

namespace licci {

// Invalid (f0, f1, f2, f3) quadruple, or a format operation outside its domain.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& m) : std::runtime_error(m) {}
};

// Operation needs the inverse Cartan matrix but the form is singular.
struct AffineTypeError : std::runtime_error {
  explicit AffineTypeError(const std::string& m) : std::runtime_error(m) {}
};

// Construction only defined over finite-type diagrams.
struct NotFiniteTypeError : std::runtime_error {
  explicit NotFiniteTypeError(const std::string& m) : std::runtime_error(m) {}
};

struct NotDominantError : std::runtime_error {
  explicit NotDominantError(const std::string& m) : std::runtime_error(m) {}
};

struct NotReducedError : std::runtime_error {
  explicit NotReducedError(const std::string& m) : std::runtime_error(m) {}
};

struct NotMinimalCosetError : std::runtime_error {
  explicit NotMinimalCosetError(const std::string& m) : std::runtime_error(m) {}
};

struct NotPositiveRootError : std::runtime_error {
  explicit NotPositiveRootError(const std::string& m) : std::runtime_error(m) {}
};

struct NotSkewError : std::runtime_error {
  explicit NotSkewError(const std::string& m) : std::runtime_error(m) {}
};

// Linear system over the coefficients has no solution.
struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(const std::string& m) : std::runtime_error(m) {}
};

// Monomial enumeration would not terminate for the requested ring.
struct InfiniteMonomialBasisError : std::runtime_error {
  explicit InfiniteMonomialBasisError(const std::string& m) : std::runtime_error(m) {}
};

// A verified algebraic identity failed to hold.
struct IdentityFailure : std::runtime_error {
  explicit IdentityFailure(const std::string& m) : std::runtime_error(m) {}
};

// The heuristic regular-sequence certificate did not pass.
struct RegularSequenceSuspect : std::runtime_error {
  explicit RegularSequenceSuspect(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace licci
