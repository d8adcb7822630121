#pragma once

#include <lommel/errors.hpp>
#include <lommel/lommel.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace lommel::zeros {

// Monotonicity shape of the sine-route kernel on (0,1).
enum class KernelClass {
  DecreasingToZero,
  IncreasingToPlusInf,
  DecreasingToMinusInf,
  NotMonotone,
  Boundary,
};

// Zero-structure classification of the (mu, nu) plane.
enum class RegionClass {
  RealZerosSine,        // sine-kernel region: only real zeros, pi-brackets
  RealZerosCosine,      // cosine-kernel region: only real zeros, shifted brackets
  PositiveNoRealZeros,  // positive on the real axis, zeros all complex
  Cor0Segment,          // the degenerate (0,0) parameter point
  Unclassified,
  Boundary,
};

enum class LpClass { InRegion, Boundary, Outside };

// 2F1 zero-count input; a, b, c (and a-b, c-a-b) must be non-integer.
struct HurwitzInput {
  double a;
  double b;
  double c;
};

struct Bracket {
  int k;
  double lo;
  double hi;
};

struct ZeroRecord {
  int k;
  double bracket_lo;
  double bracket_hi;
  double root;
  double residual;
  RegionClass provenance;
};

// Closed-form count of zeros of 2F1(a,b;c;x) on (0,1): normalize (swap so
// a > b; Euler-transform when c > a+b), then apply the sign-pattern table.
int hurwitz_count(const HurwitzInput& h);

// Kernel monotonicity classes (mu > -1/2); Boundary within 1e-9 of a
// class-region edge.
KernelClass kernel_monotonicity(const LommelParams& p);

// Region classes with a 1e-9 boundary band; the (0,0) point reports
// Cor0Segment ahead of the band.
RegionClass region_classify(const LommelParams& p);

// Guaranteed one-zero brackets: (k pi, (k+1) pi), k = 1..k_max in the sine
// region; ((2k+1) pi/2, (2k+3) pi/2), k = 0..k_max in the cosine region.
std::vector<Bracket> brackets_for(const LommelParams& p, int k_max);

// Bisect each bracket on the entire part (positive z^(mu+1) factor keeps
// signs equivalent) to width 1e-12.
std::vector<ZeroRecord> find_zeros(const LommelParams& p, int k_max);

// pi (k + (2 mu + 5)/4), the large-k zero location (mu < 1/2, k >= 1).
double asymptotic_zero(const LommelParams& p, int k);

// Laguerre-Polya membership of 1F2(1; b1, b2; .) via the parameter map
// mu = b1+b2-3, nu = b2-b1 and the two real-zero regions.
LpClass lp_plus_region(double b1, double b2);

// Values of g at n+1 equally spaced points on [lo, hi]; returns the
// consecutive pairs with a strict sign change.
std::vector<std::pair<double, double>> sign_scan_oracle(const std::function<double(double)>& g,
                                                        double lo, double hi, int n);

// Stable lowercase tokens for serialization.
const char* to_token(KernelClass c);
const char* to_token(RegionClass c);
const char* to_token(LpClass c);

}  // namespace lommel::zeros
