#pragma once

#include <stdexcept>
#include <string>

namespace lommel {

// Base for all library errors; what() carries the offending values.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter combination hits a pole of the defining series/gamma factors.
struct ParameterPole : Error {
  using Error::Error;
};

// Gamma evaluated within the guard band of 0, -1, -2, ...
struct PoleAtNonpositiveInteger : ParameterPole {
  using ParameterPole::ParameterPole;
};

// Lower hypergeometric parameter at a nonpositive integer.
struct BadLowerParameter : Error {
  using Error::Error;
};

// Series summation hit its term cap before the stop rule fired.
struct NoConvergence : Error {
  using Error::Error;
};

// Argument outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

// Domain violation of a transformation argument (x outside (0, 1/2)).
struct ArgumentOutOfDomain : DomainError {
  using DomainError::DomainError;
};

// Integrand returned a non-finite value at an interior node.
struct NonFiniteSample : Error {
  using Error::Error;
};

// Quadrature level cap reached without meeting the tolerance.
struct ToleranceNotReached : Error {
  using Error::Error;
};

// A normalizing constant (a-ratio) is zero where a division needs it.
struct ZeroNormalizer : Error {
  using Error::Error;
};

// Numerator gamma of the a-ratio sits at a pole (the ratio diverges).
struct NumeratorPole : ParameterPole {
  using ParameterPole::ParameterPole;
};

// Bracket generation requested outside the bracketed regions.
struct NotInBracketedRegion : Error {
  using Error::Error;
};

// Bracket endpoints carry the same sign where theory promises a change.
struct SignChangeMissing : Error {
  using Error::Error;
};

// Zero-count parameters too close to the integer lattice to classify.
struct DegenerateParameters : Error {
  using Error::Error;
};

}  // namespace lommel
