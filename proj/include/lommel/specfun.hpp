#pragma once

#include <lommel/errors.hpp>

namespace lommel::sf {

// 2F1 parameter triple (upper, upper, lower).
struct HypTriple {
  double a;
  double b;
  double c;
};

struct SeriesResult {
  double value;
  int terms_used;
  double truncation_estimate;  // |first neglected term|
};

// Gamma with a 1e-12 guard band around the poles at 0, -1, -2, ...
double gamma(double x);

// 1/Gamma(x), evaluating to exactly 0 inside the pole guard band.
double gamma_reciprocal_or_zero(double x);

// Gauss series sum_{n>=0} (a)_n(b)_n/((c)_n n!) x^n for |x| <= 1/2 + 1e-9.
// Stops after three consecutive terms below 1e-15*|partial sum|.
SeriesResult hyp2f1(const HypTriple& p, double x);

// Closed form of 2F1(1/2+nu, 1/2-nu; mu+1/2; 1/2):
//   2^(1/2-mu) sqrt(pi) Gamma(mu+1/2) / (Gamma((mu+nu+1)/2) Gamma((mu-nu+1)/2)).
// Returns exactly 0 when a denominator gamma is at a pole.
double hyp2f1_at_half(double mu, double nu);

// sum_{n>=0} (a1)_n/((b1)_n (b2)_n n!) x^n for |x| <= 25600.  The interface
// is binary64; internally the summation switches to wider arithmetic for
// large |x| where the alternating terms peak far above the result.
SeriesResult hyp1f2(double a1, double b1, double b2, double x);

// Right-hand side of the quadratic argument transformation:
//   2F1(1/2+nu, 1/2-nu; mu-1/2; x) / ((1-2x)(1-x)^(mu-3/2))
//     = 2F1((mu+nu)/2, (mu-nu)/2; mu-1/2; 4x(1-x)),  x in (0, 1/2).
// Evaluates the right-hand side; its argument 4x(1-x) may approach 1, so
// the series is summed with a 1e-13 relative stop and an extended cap.
double quadratic_transform_rhs(double mu, double nu, double x);

}  // namespace lommel::sf
