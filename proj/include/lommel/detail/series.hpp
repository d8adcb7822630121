#pragma once

#include <cmath>
#include <cstdlib>

namespace lommel::detail {

// Outcome of a hypergeometric-style summation in working type Real.
template <class Real>
struct SumOutcome {
  Real value{};
  int terms_used = 0;         // terms actually added (>= 1)
  double truncation = 0.0;    // |first term not added|
  bool converged = false;
};

// Sum a series whose term-to-term multiplier is ratio(n) (term 0 is 1),
// stopping once three consecutive added terms fall below eps_rel*|partial|.
// The small terms are still accumulated; the truncation estimate is the
// first term that is not.
template <class Real, class RatioFn>
SumOutcome<Real> sum_with_ratio(RatioFn ratio, double eps_rel, int max_terms) {
  using std::abs;
  SumOutcome<Real> out;
  Real term{1};
  Real sum{0};
  int streak = 0;
  for (int n = 0; n < max_terms; ++n) {
    sum += term;
    ++out.terms_used;
    const Real aterm = abs(term);
    if (aterm < eps_rel * abs(sum))
      ++streak;
    else
      streak = 0;
    if (streak >= 3) {
      const Real next = abs(Real(term * ratio(n)));
      out.value = sum;
      out.truncation = static_cast<double>(next);
      out.converged = true;
      return out;
    }
    term *= ratio(n);
  }
  out.value = sum;
  out.truncation = static_cast<double>(abs(term));
  out.converged = false;
  return out;
}

// x within `band` of a nonpositive integer (0, -1, -2, ...).
inline bool near_nonpositive_integer(double x, double band) {
  if (x > band) return false;
  const double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) <= band;
}

// x within `band` of an odd negative integer (-1, -3, -5, ...).
inline bool near_odd_negative_integer(double x, double band) {
  if (x > -1.0 + band) return false;
  const double r = std::round(x);
  const long long ri = static_cast<long long>(r);
  return ri <= -1 && (ri % 2 != 0) && std::abs(x - r) <= band;
}

// x within `band` of any integer.
inline bool near_integer(double x, double band) {
  return std::abs(x - std::round(x)) <= band;
}

}  // namespace lommel::detail
