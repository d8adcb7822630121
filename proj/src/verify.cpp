#include <lommel/verify.hpp>

#include <lommel/detail/rng.hpp>
#include <lommel/errors.hpp>
#include <lommel/lommel.hpp>
#include <lommel/quadrature.hpp>
#include <lommel/specfun.hpp>
#include <lommel/zeros.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace lommel::verify {
namespace {

using detail::Pick;
using mp50 = boost::multiprecision::cpp_dec_float_50;

constexpr double kPi = std::numbers::pi;

// Frozen references for the weighted-quadrature corpus, 40 digits:
//   Int_0^1 sin(5t) (1-t)^(-1/2) dt  and  Int_0^1 cos(3t) (1-t)^(1/4) dt.
constexpr double kSin5Weighted = -0.5012375652365844823118028732963747263573;
constexpr double kCos3Weighted = 0.1422727845598685738670479529814876725117;

// Distance >= d from every nonpositive integer (gamma pole lattice).
bool off_nonpos_ints(double q, double d) {
  if (q >= d) return true;
  return std::abs(q - std::round(q)) >= d;
}

// Distance >= d from every odd negative integer (series denominator poles).
bool off_odd_negatives(double x, double d) {
  const double m = 2.0 * std::round((x + 1.0) / 2.0) - 1.0;  // nearest odd integer
  if (m > -0.5) return true;
  return std::abs(x - m) >= d;
}

bool series_params_clear(const LommelParams& p, double d) {
  return off_odd_negatives(p.mu + p.nu, d) && off_odd_negatives(p.mu - p.nu, d);
}

int count_changes(const std::function<double(double)>& g, double lo, double hi, int n) {
  return static_cast<int>(zeros::sign_scan_oracle(g, lo, hi, n).size());
}

SuiteResult make(const char* name, double worst, double def_threshold, double tol_override) {
  const double thr = tol_override > 0.0 ? tol_override : def_threshold;
  return SuiteResult{name, worst, thr, worst <= thr};
}

// ---------------------------------------------------------------- specfun

// Vanishing upper parameter collapses the Gauss series to 1 exactly.
double worst_hyp2f1_zero_upper(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(-5.0, 5.0);
    double c = rng.uniform(-5.0, 5.0);
    while (std::abs(c - std::round(c)) < 0.05) c = rng.uniform(-5.0, 5.0);
    const double x = rng.uniform(-0.5, 0.5);
    const double v = sf::hyp2f1({a, 0.0, c}, x).value;
    worst = std::max(worst, std::abs(v - 1.0));
  }
  return worst;
}

// Closed gamma-ratio value at argument 1/2 against the summed series.
double worst_gauss_half(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mu = 0.0, nu = 0.0;
    for (int att = 0; att < 10000; ++att) {
      mu = rng.uniform(-0.45, 4.0);
      nu = rng.uniform(-3.0, 3.0);
      const double g1 = (mu + nu + 1.0) / 2.0;
      const double g2 = (mu - nu + 1.0) / 2.0;
      if (off_nonpos_ints(g1, 0.025) && off_nonpos_ints(g2, 0.025)) break;
    }
    const double closed = sf::hyp2f1_at_half(mu, nu);
    const double summed = sf::hyp2f1({0.5 + nu, 0.5 - nu, mu + 0.5}, 0.5).value;
    worst = std::max(worst, std::abs(closed - summed) / std::max(1.0, std::abs(closed)));
  }
  return worst;
}

// Quadratic argument transformation: assembled left side vs the evaluated
// right side at 4x(1-x).
double worst_quadratic_transform(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mu = rng.uniform(1.6, 5.0);
    const double nu = rng.uniform(-2.5, 2.5);
    const double x = rng.uniform(0.02, 0.42);
    const double lhs = sf::hyp2f1({0.5 + nu, 0.5 - nu, mu - 0.5}, x).value /
                       ((1.0 - 2.0 * x) * std::pow(1.0 - x, mu - 1.5));
    const double rhs = sf::quadratic_transform_rhs(mu, nu, x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return worst;
}

// Matching upper and lower parameters cancel, leaving the 0F1 series.
double worst_0f1_reduction(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double a1 = rng.uniform(0.5, 4.0);
    const double b2 = rng.uniform(0.6, 5.0);
    const double x = rng.sign() * rng.uniform(1.0, 30.0);
    const double lib = sf::hyp1f2(a1, a1, b2, x).value;
    long double term = 1.0L, sum = 1.0L;
    for (int n = 0; n < 400; ++n) {
      term *= static_cast<long double>(x) / ((b2 + n) * (n + 1.0L));
      sum += term;
      if (std::abs(static_cast<double>(term)) < 1e-22 * std::abs(static_cast<double>(sum)) &&
          n > 8)
        break;
    }
    const double ref = static_cast<double>(sum);
    worst = std::max(worst, std::abs(lib - ref) / std::max(1.0, std::abs(ref)));
  }
  return worst;
}

double worst_gamma_recurrence(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    double x = 0.0;
    for (int att = 0; att < 10000; ++att) {
      x = rng.uniform(-40.0, 40.0);
      if (std::abs(x - std::round(x)) >= 0.05) break;
    }
    const double lhs = sf::gamma(x + 1.0);
    const double rhs = x * sf::gamma(x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

// ------------------------------------------------------------- quadrature

double worst_poly_exactness() {
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    auto f = [k](double t, double) { return std::pow(t, k); };
    const auto r = quad::integrate_singular(f, 0.0, 1e-12);
    worst = std::max(worst, std::abs(r.value * (k + 1) - 1.0));
  }
  return worst;
}

// Error envelope: at every tolerance rung the true error stays within
// half the requested tolerance (the estimate itself converges in bursts,
// so pointwise monotonicity of the realized error is not a property of
// the scheme).
double worst_tol_halving() {
  struct Case {
    std::function<quad::QuadResult(double)> run;
    double exact;
  };
  const std::vector<Case> corpus = {
      {[](double tol) {
         return quad::integrate_singular([](double t, double) { return std::exp(t); }, 0.0, tol);
       },
       std::exp(1.0) - 1.0},
      {[](double tol) {
         return quad::integrate_weighted([](double t, double) { return std::sin(5.0 * t); }, -0.5,
                                         tol);
       },
       kSin5Weighted},
      {[](double tol) {
         return quad::integrate_weighted([](double t, double) { return std::cos(3.0 * t); }, 0.25,
                                         tol);
       },
       kCos3Weighted},
  };
  double worst = 0.0;
  for (const auto& c : corpus) {
    const double scale = std::max(1.0, std::abs(c.exact));
    for (double tol = 1e-4; tol >= 0.9e-12; tol *= 0.1) {
      const auto r = c.run(tol);
      if (!r.converged) return 2.0;
      worst = std::max(worst, std::abs(r.value - c.exact) / (0.5 * tol * scale));
    }
  }
  return worst;
}

// integrate_weighted must agree with folding the weight into the integrand.
double worst_alpha_folding(Pick& rng) {
  std::vector<double> alphas = {-0.85, -0.5, -0.25, -0.05};
  for (int i = 0; i < 4; ++i) alphas.push_back(rng.uniform(-0.95, 1.0));
  double worst = 0.0;
  for (const double alpha : alphas) {
    const auto w = quad::integrate_weighted([](double t, double) { return std::cos(2.0 * t); },
                                            alpha, 1e-12);
    const auto s = quad::integrate_singular(
        [alpha](double t, double omt) { return std::cos(2.0 * t) * std::pow(omt, alpha); }, alpha,
        1e-12);
    worst = std::max(worst, std::abs(w.value - s.value));
  }
  return worst;
}

// ----------------------------------------------------------------- lommel

double worst_a_product(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mu = 0.0, nu = 0.0;
    for (int att = 0; att < 10000; ++att) {
      mu = rng.uniform(-3.0, 3.0);
      nu = rng.uniform(-3.0, 3.0);
      const bool ok = off_nonpos_ints((mu + nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu - nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu + 1.0 + nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu + 1.0 - nu) / 2.0, 0.025);
      if (ok) break;
    }
    const double prod = a_const(mu + 1.0, nu) * a_const(mu, nu);
    const double expect = mu * mu - nu * nu;
    worst = std::max(worst, std::abs(prod - expect) / std::max(1.0, std::abs(expect)));
  }
  return worst;
}

// Integral of the normalized kernel over (0,1) equals 1/a_{mu+1,nu}.
double worst_kernel_normalization(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    double mu = 0.0, nu = 0.0;
    for (int att = 0; att < 10000; ++att) {
      mu = rng.uniform(-0.45, 3.0);
      nu = rng.uniform(-2.0, 2.0);
      const bool ok = off_nonpos_ints((mu + 2.0 + nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu + 2.0 - nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu + 1.0 + nu) / 2.0, 0.025) &&
                      off_nonpos_ints((mu + 1.0 - nu) / 2.0, 0.025);
      if (ok) break;
    }
    const double ah = sf::hyp2f1_at_half(mu, nu);
    const double a1 = a_const(mu + 1.0, nu);
    const auto r = quad::integrate_singular(
        [mu, nu, ah](double, double omt) { return lommel::detail::kernel_from_omt(mu, nu, omt, ah); },
        mu - 0.5, 1e-11);
    worst = std::max(worst, std::abs(r.value * a1 - 1.0));
  }
  return worst;
}

// Series, sine-kernel, and cosine-kernel evaluations agree wherever more
// than one of them is admissible.
double worst_triple_agreement() {
  const double mus[] = {-1.2, -0.8, -0.3, 0.0, 0.4, 1.0, 2.0};
  const double nus[] = {0.25, 0.6, 1.1};
  const double zs[] = {0.5, 1.0, 3.0, 7.0, 15.0};
  double worst = 0.0;
  for (const double mu : mus)
    for (const double nu : nus)
      for (const double z : zs) {
        const LommelParams p{mu, nu};
        std::vector<double> vals;
        if (p.series_valid()) vals.push_back(lommel_series(p, z));
        if (p.sine_repr_valid()) vals.push_back(lommel_sine_integral(p, z));
        if (p.cosine_repr_valid()) {
          try {
            vals.push_back(lommel_cosine_integral(p, z));
          } catch (const ZeroNormalizer&) {
          }
        }
        if (vals.size() < 2) continue;
        double lo = vals[0], hi = vals[0];
        for (const double v : vals) {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        worst = std::max(worst, (hi - lo) / (1.0 + std::abs(vals[0])));
      }
  return worst;
}

// z^2 y'' + z y' + (z^2 - nu^2) y = z^(mu+1), via five-point differences.
double worst_ode_residual(Pick& rng) {
  double worst = 0.0;
  const double zs[] = {2.0, 5.0, 10.0};
  for (int i = 0; i < 20; ++i) {
    LommelParams p{};
    for (int att = 0; att < 10000; ++att) {
      p.mu = rng.uniform(-1.0, 2.0);
      p.nu = rng.uniform(-2.0, 2.0);
      if (series_params_clear(p, 0.05) &&
          std::abs((p.mu + 1.0) * (p.mu + 1.0) - p.nu * p.nu) > 0.05)
        break;
    }
    const double h = 0.01;
    for (const double z : zs) {
      double y[5];
      for (int j = 0; j < 5; ++j) y[j] = lommel_series(p, z + (j - 2) * h);
      const double d1 = (y[0] - 8.0 * y[1] + 8.0 * y[3] - y[4]) / (12.0 * h);
      const double d2 = (-y[0] + 16.0 * y[1] - 30.0 * y[2] + 16.0 * y[3] - y[4]) / (12.0 * h * h);
      const double rhs = std::pow(z, p.mu + 1.0);
      const double resid = z * z * d2 + z * d1 + (z * z - p.nu * p.nu) * y[2] - rhs;
      worst = std::max(worst, std::abs(resid) / rhs);
    }
  }
  return worst;
}

double worst_entire_evenness(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    LommelParams p{};
    for (int att = 0; att < 10000; ++att) {
      p.mu = rng.uniform(-2.5, 2.5);
      p.nu = rng.uniform(-2.5, 2.5);
      if (series_params_clear(p, 0.05)) break;
    }
    const double z = rng.uniform(1e-3, 40.0);
    worst = std::max(worst, std::abs(lommel_entire(p, z) - lommel_entire(p, -z)));
  }
  return worst;
}

double worst_series_entire_consistency(Pick& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    LommelParams p{};
    for (int att = 0; att < 10000; ++att) {
      p.mu = rng.uniform(-2.5, 2.5);
      p.nu = rng.uniform(-2.5, 2.5);
      if (series_params_clear(p, 0.05) &&
          std::abs((p.mu + 1.0) * (p.mu + 1.0) - p.nu * p.nu) > 0.01)
        break;
    }
    const double z = rng.uniform(0.1, 20.0);
    const double pref = std::pow(z, p.mu + 1.0) / ((p.mu + 1.0) * (p.mu + 1.0) - p.nu * p.nu);
    const double ent = lommel_entire(p, z);
    const double s = lommel_series(p, z);
    worst = std::max(worst, std::abs(s - pref * ent) / (std::abs(pref) * (1.0 + std::abs(ent))));
  }
  return worst;
}

// ------------------------------------------------------------------ zeros

// Strict positivity on (0, 50] throughout the all-complex-zeros region.
double positivity_violations(Pick& rng) {
  int violations = 0;
  for (int i = 0; i < 20; ++i) {
    LommelParams p{};
    p.nu = rng.uniform(-2.5, 2.5);
    const double base = std::max(0.5, std::abs(p.nu));
    p.mu = rng.uniform(base + 0.05, base + 2.0);
    if (zeros::region_classify(p) != zeros::RegionClass::PositiveNoRealZeros) {
      ++violations;
      continue;
    }
    for (double z = 0.01; z <= 50.0 + 1e-12; z += 0.01)
      if (lommel_series(p, z) <= 0.0) ++violations;
  }
  return violations;
}

// Self-contained Gauss evaluator on (0,1) for the zero-count cross-check:
// the direct series below x = 0.55, the two-term connection toward x = 1.
double gauss_series_raw(double a, double b, double c, double x) {
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 400000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    sum += term;
    if (n > 3 && std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double gauss_unit_interval(double a, double b, double c, double x) {
  if (x <= 0.55) return gauss_series_raw(a, b, c, x);
  const double s = c - a - b;
  const double y = 1.0 - x;
  const double t1 = sf::gamma(c) * sf::gamma(s) / (sf::gamma(c - a) * sf::gamma(c - b)) *
                    gauss_series_raw(a, b, 1.0 - s, y);
  const double t2 = sf::gamma(c) * sf::gamma(-s) / (sf::gamma(a) * sf::gamma(b)) *
                    std::pow(y, s) * gauss_series_raw(c - a, c - b, 1.0 + s, y);
  return t1 + t2;
}

// Wide-precision direct series; converges for any x in (0,1), used only to
// settle signs too small for the double sweep.
double gauss_sign_check(double a, double b, double c, double x) {
  mp50 term = 1, sum = 1;
  const mp50 xm = x;
  mp50 an = a, bn = b, cn = c;
  for (long n = 0; n < 600000; ++n) {
    term *= an * bn / (cn * (n + 1)) * xm;
    sum += term;
    if (n > 3 && abs(term) < mp50(1e-45) * abs(sum)) break;
    an += 1;
    bn += 1;
    cn += 1;
  }
  return sum.convert_to<double>();
}

int scan_zero_count(double a, double b, double c, int n) {
  std::vector<double> v(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    double f;
    try {
      f = gauss_unit_interval(a, b, c, x);
    } catch (const Error&) {
      f = std::numeric_limits<double>::quiet_NaN();
    }
    v[i] = f;
    if (std::isfinite(f)) scale = std::max(scale, std::abs(f));
  }
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(v[i]) || std::abs(v[i]) < 1e-10 * scale)
      v[i] = gauss_sign_check(a, b, c, (i + 0.5) / n);
  int count = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (v[i] * v[i + 1] < 0.0) ++count;
  return count;
}

double hurwitz_mismatches(Pick& rng) {
  int mismatches = 0;
  for (int i = 0; i < 300; ++i) {
    double a = 0.0, b = 0.0, c = 0.0;
    for (int att = 0; att < 100000; ++att) {
      a = rng.uniform(-4.0, 4.0);
      b = rng.uniform(-4.0, 4.0);
      if (a + b <= -3.9) continue;
      c = rng.uniform(-4.0, a + b);
      auto off_lattice = [](double q) { return std::abs(q - std::round(q)) >= 0.05; };
      if (off_lattice(a) && off_lattice(b) && off_lattice(c) && off_lattice(a - b) &&
          off_lattice(c - a - b))
        break;
    }
    const int table = zeros::hurwitz_count({a, b, c});
    const int scanned = scan_zero_count(a, b, c, 10000);
    if (table != scanned) ++mismatches;
  }
  return mismatches;
}

// Monotone kernel classes must show a constant-sign derivative on a t-grid.
double monotonicity_violations(Pick& rng) {
  int violations = 0;
  auto check = [&violations](const LommelParams& p, zeros::KernelClass expect, double sign) {
    if (zeros::kernel_monotonicity(p) != expect) {
      ++violations;
      return;
    }
    for (double t = 0.05; t < 0.96; t += 0.10)
      if (sign * kernel_f_derivative(p, t) <= 0.0) ++violations;
  };
  for (int i = 0; i < 100; ++i) {
    LommelParams p{};
    p.nu = rng.uniform(-2.0, 2.0);
    const double base = std::max(0.5, std::abs(p.nu));
    p.mu = rng.uniform(base + 0.05, base + 2.0);
    check(p, zeros::KernelClass::DecreasingToZero, -1.0);
  }
  for (int i = 0; i < 100; ++i) {
    LommelParams p{};
    p.mu = rng.uniform(-0.4, 0.4);
    p.nu = rng.sign() * rng.uniform(std::abs(p.mu) + 0.05, p.mu + 0.95);
    check(p, zeros::KernelClass::IncreasingToPlusInf, 1.0);
  }
  for (int i = 0; i < 100; ++i) {
    LommelParams p{};
    p.mu = rng.uniform(-0.45, 0.45);
    p.nu = rng.sign() * rng.uniform(p.mu + 1.05, p.mu + 1.95);
    check(p, zeros::KernelClass::DecreasingToMinusInf, -1.0);
  }
  return violations;
}

// Each of the first 12 brackets holds exactly one sign change, and the
// span they tile holds exactly 12 overall.
double bracket_uniqueness_violations(Pick& rng) {
  int violations = 0;
  auto run_point = [&violations](const LommelParams& p) {
    const auto brs = zeros::brackets_for(p, 12);
    auto g = [&p](double z) { return lommel_entire(p, z); };
    int used = 0;
    double span_lo = 0.0, span_hi = 0.0;
    for (const auto& b : brs) {
      if (used == 12) break;
      if (used == 0) span_lo = b.lo;
      span_hi = b.hi;
      ++used;
      if (count_changes(g, b.lo, b.hi, 100) != 1) ++violations;
    }
    if (count_changes(g, span_lo, span_hi, 1200) != 12) ++violations;
  };
  for (int i = 0; i < 30; ++i) {
    LommelParams p{};
    p.mu = rng.uniform(-0.4, 0.4);
    p.nu = rng.sign() * rng.uniform(std::abs(p.mu) + 0.05, p.mu + 0.95);
    run_point(p);
  }
  for (int i = 0; i < 30; ++i) {
    LommelParams p{};
    p.mu = rng.uniform(-1.3, -0.7);
    p.nu = rng.sign() * rng.uniform(std::abs(p.mu + 1.0) + 0.05, p.mu + 1.95);
    run_point(p);
  }
  return violations;
}

// V = c z^(mu-1)(1-cos z) - s: one sign change per (k pi, (k+1) pi).
double aux_v_violations(Pick& rng) {
  int violations = 0;
  for (int i = 0; i < 10; ++i) {
    LommelParams p{};
    p.mu = rng.uniform(-0.45, 0.45);
    p.nu = rng.uniform(p.mu + 1.05, p.mu + 1.95);
    const double c = (i % 2 == 0) ? 1.0 : 2.0;
    auto g = [&p, c](double z) { return aux_V(p, c, z); };
    for (int k = 1; k <= 10; ++k)
      if (count_changes(g, k * kPi, (k + 1) * kPi, 200) != 1) ++violations;
  }
  return violations;
}

// U = (c + 1/a_{mu+1,nu}) z^mu sin z - s: one sign change per
// ((2k+1) pi/2, (2k+3) pi/2), over both applicable parameter strips.
double aux_u_violations(Pick& rng) {
  int violations = 0;
  auto run_point = [&violations](const LommelParams& p, double c) {
    auto g = [&p, c](double z) { return aux_U(p, c, z); };
    for (int k = 0; k <= 10; ++k)
      if (count_changes(g, (2 * k + 1) * kPi / 2.0, (2 * k + 3) * kPi / 2.0, 200) != 1)
        ++violations;
  };
  for (int i = 0; i < 10; ++i) {
    LommelParams p{};
    for (int att = 0; att < 10000; ++att) {
      p.mu = rng.uniform(-1.45, -0.55);
      p.nu = rng.uniform(p.mu + 2.05, p.mu + 2.95);
      if (series_params_clear(p, 0.05)) break;
    }
    run_point(p, (i % 2 == 0) ? 0.0 : 1.0);
  }
  for (int i = 0; i < 10; ++i) {
    LommelParams p{};
    for (int att = 0; att < 10000; ++att) {
      p.mu = rng.uniform(-0.45, 2.0);
      p.nu = rng.uniform(0.05, p.mu + 0.95);
      if (series_params_clear(p, 0.05)) break;
    }
    run_point(p, (i % 2 == 0) ? 0.0 : 1.0);
  }
  return violations;
}

// Phase-shifted combination: one sign change per ((k-1/2)pi+theta, (k+1/2)pi+theta).
double theta_violations() {
  const LommelParams pts[] = {{0.0, 0.5}, {0.2, 0.35}, {-0.2, 0.45}, {0.3, 0.8}};
  const double thetas[] = {kPi / 6.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0};
  int violations = 0;
  for (const auto& p : pts)
    for (const double theta : thetas) {
      auto g = [&p, theta](double z) { return theta_combination(p, theta, z); };
      for (int k = 1; k <= 8; ++k)
        if (count_changes(g, (k - 0.5) * kPi + theta, (k + 0.5) * kPi + theta, 150) != 1)
          ++violations;
    }
  return violations;
}

// |root_k - large-k estimate| must shrink strictly with k.
double asymptotic_gap_violations() {
  const LommelParams pts[] = {{0.0, 0.5},  {0.2, 0.5},  {-0.4, 0.5},
                              {-1.0, 0.5}, {-1.2, 0.5}, {-0.8, 0.5}};
  int violations = 0;
  for (const auto& p : pts) {
    const bool sine_side = zeros::region_classify(p) == zeros::RegionClass::RealZerosSine;
    const auto recs = zeros::find_zeros(p, 20);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& r : recs) {
      if (r.k < 5 || r.k > 20) continue;
      const double est = zeros::asymptotic_zero(p, sine_side ? r.k - 1 : r.k);
      const double gap = std::abs(r.root - est);
      if (gap >= prev) ++violations;
      prev = gap;
    }
  }
  return violations;
}

double lp_symmetry_violations(Pick& rng) {
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const double b1 = rng.uniform(0.0, 6.0);
    const double b2 = rng.uniform(0.0, 6.0);
    if (zeros::lp_plus_region(b1, b2) != zeros::lp_plus_region(b2, b1)) ++violations;
  }
  return violations;
}

// The scan oracle itself, on a known zero set and on one analyzed bracket.
double sign_scan_violations() {
  int violations = 0;
  const auto pairs = zeros::sign_scan_oracle([](double z) { return std::sin(z); }, 0.25, 10.0, 1000);
  if (pairs.size() != 3) ++violations;
  const double roots[] = {kPi, 2.0 * kPi, 3.0 * kPi};
  for (std::size_t i = 0; i < pairs.size() && i < 3; ++i)
    if (!(pairs[i].first < roots[i] && roots[i] < pairs[i].second)) ++violations;
  const LommelParams p{0.0, 0.5};
  const auto one = zeros::sign_scan_oracle([&p](double z) { return lommel_entire(p, z); }, kPi,
                                           2.0 * kPi, 2000);
  if (one.size() != 1) ++violations;
  return violations;
}

}  // namespace

Report run_all(std::uint64_t seed, double tol_override) {
  Report rep;
  int ordinal = 0;
  auto rng_for = [&seed, &ordinal]() { return Pick(seed + 1000ull * ordinal++); };
  auto add = [&rep, tol_override](const char* name, double worst, double thr) {
    rep.suites.push_back(make(name, worst, thr, tol_override));
  };

  {
    auto r = rng_for();
    add("hyp2f1-zero-upper", worst_hyp2f1_zero_upper(r), 0.0);
  }
  {
    auto r = rng_for();
    add("gauss-half-identity", worst_gauss_half(r), 1e-11);
  }
  {
    auto r = rng_for();
    add("quadratic-transform-identity", worst_quadratic_transform(r), 1e-9);
  }
  {
    auto r = rng_for();
    add("hyp1f2-0f1-reduction", worst_0f1_reduction(r), 1e-12);
  }
  {
    auto r = rng_for();
    add("gamma-recurrence", worst_gamma_recurrence(r), 1e-13);
  }
  {
    rng_for();
    add("quad-polynomial-exactness", worst_poly_exactness(), 1e-13);
  }
  {
    rng_for();
    add("quad-tol-halving", worst_tol_halving(), 1.0);
  }
  {
    auto r = rng_for();
    add("quad-alpha-folding", worst_alpha_folding(r), 1e-13);
  }
  {
    auto r = rng_for();
    add("a-product-identity", worst_a_product(r), 1e-11);
  }
  {
    auto r = rng_for();
    add("kernel-normalization", worst_kernel_normalization(r), 1e-9);
  }
  {
    rng_for();
    add("triple-agreement", worst_triple_agreement(), 1e-8);
  }
  {
    auto r = rng_for();
    add("ode-residual", worst_ode_residual(r), 1e-6);
  }
  {
    auto r = rng_for();
    add("entire-evenness", worst_entire_evenness(r), 0.0);
  }
  {
    auto r = rng_for();
    add("series-entire-consistency", worst_series_entire_consistency(r), 1e-12);
  }
  {
    auto r = rng_for();
    add("positivity-scan", positivity_violations(r), 0.0);
  }
  {
    auto r = rng_for();
    add("hurwitz-oracle", hurwitz_mismatches(r), 0.0);
  }
  {
    auto r = rng_for();
    add("monotonicity-consistency", monotonicity_violations(r), 0.0);
  }
  {
    auto r = rng_for();
    add("bracket-uniqueness", bracket_uniqueness_violations(r), 0.0);
  }
  {
    auto r = rng_for();
    add("aux-v-brackets", aux_v_violations(r), 0.0);
  }
  {
    auto r = rng_for();
    add("aux-u-brackets", aux_u_violations(r), 0.0);
  }
  {
    rng_for();
    add("theta-brackets", theta_violations(), 0.0);
  }
  {
    rng_for();
    add("asymptotic-gap-decay", asymptotic_gap_violations(), 0.0);
  }
  {
    auto r = rng_for();
    add("lp-symmetry", lp_symmetry_violations(r), 0.0);
  }
  {
    rng_for();
    add("sign-scan-smoke", sign_scan_violations(), 0.0);
  }

  rep.all_pass = true;
  for (const auto& s : rep.suites) rep.all_pass = rep.all_pass && s.pass;
  return rep;
}

}  // namespace lommel::verify
