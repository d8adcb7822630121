#include <lommel/zeros.hpp>

#include <lommel/detail/series.hpp>

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <numbers>
#include <string>

namespace lommel::zeros {

namespace {

constexpr double kBand = 1e-9;
constexpr double kPi = std::numbers::pi;

long long lfloor(double x) { return static_cast<long long>(std::floor(x)); }

// Inequality slacks of one open region: inside means every slack clears the
// band; near means no slack is badly violated and at least one sits on it.
struct Slacks {
  double min_slack;
  bool inside;
  bool near;
};

Slacks eval_slacks(std::initializer_list<double> vals) {
  double mn = HUGE_VAL;
  for (double v : vals) mn = std::min(mn, v);
  return {mn, mn > kBand, mn >= -kBand && mn <= kBand};
}

Slacks sine_region(double mu, double nu) {
  return eval_slacks({mu + 0.5, 0.5 - mu, std::fabs(nu) - std::fabs(mu), mu + 1.0 - std::fabs(nu)});
}

Slacks cosine_region(double mu, double nu) {
  return eval_slacks(
      {mu + 1.5, -0.5 - mu, std::fabs(nu) - std::fabs(mu + 1.0), mu + 2.0 - std::fabs(nu)});
}

Slacks positive_region(double mu, double nu) {
  return eval_slacks({mu - 0.5, std::fabs(nu), mu - std::fabs(nu)});
}

}  // namespace

int hurwitz_count(const HurwitzInput& h) {
  double a = h.a;
  double b = h.b;
  double c = h.c;
  // Reject inputs where the count is ambiguous: near-integer a, b, c (the
  // floor expressions and the sign pattern jump there) and a vanishing
  // c-a-b (the normalization branch flips there).
  for (double v : {a, b, c}) {
    if (detail::near_integer(v, kBand)) {
      throw DegenerateParameters("hurwitz_count: a, b, c must stay away from integers");
    }
  }
  if (std::fabs(c - a - b) <= kBand) {
    throw DegenerateParameters("hurwitz_count: c - a - b must stay away from 0");
  }
  if (b > a) std::swap(a, b);
  if (c > a + b) {
    // Euler transform keeps the zero count ((1-x)^(c-a-b) has none on (0,1));
    // the new pair {c-a, c-b} is stored sorted so a > b still holds.
    const double na = c - b;
    const double nb = c - a;
    for (double v : {na, nb}) {
      if (detail::near_integer(v, kBand)) {
        throw DegenerateParameters("hurwitz_count: c-a, c-b must stay away from integers");
      }
    }
    a = na;
    b = nb;
  }
  // Now a > b and c <= a + b; floors below see only clean arguments.
  const bool ap = a > 0.0;
  const bool bp = b > 0.0;
  const bool cp = c > 0.0;
  if (ap && bp && cp) return 0;
  if (ap && bp && !cp) return lfloor(-c) % 2 == 0 ? 1 : 0;
  if (ap && !bp && cp) return 1 + static_cast<int>(lfloor(-b));
  if (ap && !bp && !cp) {
    const long long fb = lfloor(-b);
    const long long fc = lfloor(-c);
    if (fb > fc) return static_cast<int>(fb - fc);
    return (fb + fc) % 2 != 0 ? 1 : 0;
  }
  // a < 0 forces b < 0 (ordering) and c <= a + b < 0.
  return (lfloor(-a) + lfloor(-b) + lfloor(-c)) % 2 == 0 ? 1 : 0;
}

KernelClass kernel_monotonicity(const LommelParams& p) {
  if (!(p.mu > -0.5)) {
    throw DomainError("kernel_monotonicity: requires mu > -1/2");
  }
  const Slacks dec = positive_region(p.mu, p.nu);
  const Slacks inc = sine_region(p.mu, p.nu);
  // Same cone as the cosine zero region shifted by one in mu: mu < 1/2 and
  // |nu| between mu+1 and mu+2.
  const Slacks dec_minus =
      eval_slacks({0.5 - p.mu, std::fabs(p.nu) - (p.mu + 1.0), p.mu + 2.0 - std::fabs(p.nu)});
  if (dec.inside) return KernelClass::DecreasingToZero;
  if (inc.inside) return KernelClass::IncreasingToPlusInf;
  if (dec_minus.inside) return KernelClass::DecreasingToMinusInf;
  if (dec.near || inc.near || dec_minus.near) return KernelClass::Boundary;
  return KernelClass::NotMonotone;
}

RegionClass region_classify(const LommelParams& p) {
  if (!p.series_valid()) {
    throw ParameterPole("region_classify: series parameter pole at mu = " + std::to_string(p.mu) +
                        ", nu = " + std::to_string(p.nu));
  }
  if (std::fabs(p.mu) <= kBand && std::fabs(p.nu) <= kBand) return RegionClass::Cor0Segment;
  const Slacks sine = sine_region(p.mu, p.nu);
  const Slacks cosine = cosine_region(p.mu, p.nu);
  const Slacks positive = positive_region(p.mu, p.nu);
  if (sine.inside) return RegionClass::RealZerosSine;
  if (cosine.inside) return RegionClass::RealZerosCosine;
  if (positive.inside) return RegionClass::PositiveNoRealZeros;
  if (sine.near || cosine.near || positive.near) return RegionClass::Boundary;
  return RegionClass::Unclassified;
}

std::vector<Bracket> brackets_for(const LommelParams& p, int k_max) {
  if (k_max < 1) throw DomainError("brackets_for: k_max must be >= 1");
  const RegionClass r = region_classify(p);
  std::vector<Bracket> out;
  if (r == RegionClass::RealZerosSine) {
    out.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
      out.push_back({k, k * kPi, (k + 1) * kPi});
    }
  } else if (r == RegionClass::RealZerosCosine) {
    out.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
      out.push_back({k, (2 * k + 1) * kPi / 2.0, (2 * k + 3) * kPi / 2.0});
    }
  } else {
    throw NotInBracketedRegion(std::string("brackets_for: region '") + to_token(r) +
                               "' has no guaranteed brackets");
  }
  return out;
}

std::vector<ZeroRecord> find_zeros(const LommelParams& p, int k_max) {
  const RegionClass r = region_classify(p);
  const std::vector<Bracket> brackets = brackets_for(p, k_max);
  std::vector<ZeroRecord> out;
  out.reserve(brackets.size());
  for (const Bracket& b : brackets) {
    double lo = b.lo;
    double hi = b.hi;
    double glo = lommel_entire(p, lo);
    const double ghi = lommel_entire(p, hi);
    if (!(glo * ghi < 0.0)) {
      char msg[128];
      std::snprintf(msg, sizeof(msg), "find_zeros: no sign change on bracket %d (%.6f, %.6f)", b.k,
                    lo, hi);
      throw SignChangeMissing(msg);
    }
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double gm = lommel_entire(p, mid);
      if (glo * gm <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        glo = gm;
      }
    }
    const double root = 0.5 * (lo + hi);
    out.push_back({b.k, b.lo, b.hi, root, lommel_entire(p, root), r});
  }
  return out;
}

double asymptotic_zero(const LommelParams& p, int k) {
  if (!(p.mu < 0.5)) throw DomainError("asymptotic_zero: requires mu < 1/2");
  if (k < 1) throw DomainError("asymptotic_zero: requires k >= 1");
  return kPi * (k + (2.0 * p.mu + 5.0) / 4.0);
}

LpClass lp_plus_region(double b1, double b2) {
  const double mu = b1 + b2 - 3.0;
  const double nu = b2 - b1;  // region tests use |nu|, so b1 <-> b2 is exact
  const Slacks sine = sine_region(mu, nu);
  const Slacks cosine = cosine_region(mu, nu);
  if (sine.inside || cosine.inside) return LpClass::InRegion;
  if (sine.near || cosine.near) return LpClass::Boundary;
  return LpClass::Outside;
}

std::vector<std::pair<double, double>> sign_scan_oracle(const std::function<double(double)>& g,
                                                        double lo, double hi, int n) {
  if (!(lo < hi)) throw DomainError("sign_scan_oracle: requires lo < hi");
  if (n < 100) throw DomainError("sign_scan_oracle: requires n >= 100");
  std::vector<std::pair<double, double>> out;
  double prev_x = lo;
  double prev_v = g(lo);
  if (!std::isfinite(prev_v)) {
    throw NonFiniteSample("sign_scan_oracle: non-finite sample at " + std::to_string(lo));
  }
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = g(x);
    if (!std::isfinite(v)) {
      throw NonFiniteSample("sign_scan_oracle: non-finite sample at " + std::to_string(x));
    }
    if (prev_v * v < 0.0) out.emplace_back(prev_x, x);
    prev_x = x;
    prev_v = v;
  }
  return out;
}

const char* to_token(KernelClass c) {
  switch (c) {
    case KernelClass::DecreasingToZero: return "decreasingtozero";
    case KernelClass::IncreasingToPlusInf: return "increasingtoplusinf";
    case KernelClass::DecreasingToMinusInf: return "decreasingtominusinf";
    case KernelClass::NotMonotone: return "notmonotone";
    case KernelClass::Boundary: return "boundary";
  }
  return "unknown";
}

const char* to_token(RegionClass c) {
  switch (c) {
    case RegionClass::RealZerosSine: return "realzerossine";
    case RegionClass::RealZerosCosine: return "realzeroscosine";
    case RegionClass::PositiveNoRealZeros: return "positivenorealzeros";
    case RegionClass::Cor0Segment: return "cor0segment";
    case RegionClass::Unclassified: return "unclassified";
    case RegionClass::Boundary: return "boundary";
  }
  return "unknown";
}

const char* to_token(LpClass c) {
  switch (c) {
    case LpClass::InRegion: return "inregion";
    case LpClass::Boundary: return "boundary";
    case LpClass::Outside: return "outside";
  }
  return "unknown";
}

}  // namespace lommel::zeros
