#include <lommel/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lommel::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// Node map t(u) = 1/(1+exp(-2s)), s = (pi/2) sinh u, with weight
// dt/du = pi cosh(u) / (exp(2s) + 2 + exp(-2s)).  2s is kept below 700 so
// nothing overflows; beyond that the node weight cannot be represented
// anyway and the caller accounts for the clipped tail.
struct Node {
  double t;
  double omt;
  double w;
  bool usable;
};

Node make_node(double u) {
  const double s = 0.5 * kPi * std::sinh(u);
  const double twos = 2.0 * s;
  if (twos > 700.0 || twos < -700.0) return {0, 0, 0, false};
  const double e2s = std::exp(twos);
  const double inv = 1.0 / e2s;
  const double omt = 1.0 / (1.0 + e2s);
  const double t = 1.0 / (1.0 + inv);
  const double w = kPi * std::cosh(u) / (e2s + 2.0 + inv);
  if (!(omt > 0.0) || !(t > 0.0)) return {0, 0, 0, false};
  return {t, omt, w, true};
}

}  // namespace

QuadResult integrate_singular(const Integrand& f, double alpha, double tol) {
  if (!(alpha > -1.0))
    throw DomainError("integrate_singular: alpha = " + std::to_string(alpha) + " <= -1");
  if (!(tol >= 1e-13))
    throw DomainError("integrate_singular: tol = " + std::to_string(tol) + " below 1e-13");

  const double aeff = std::min(alpha, 0.0);
  const double L = -std::log(tol) + 9.0;
  const double s_right_want = L / (2.0 * (1.0 + aeff));
  const double s_right = std::min(s_right_want, 345.0);
  const double s_left = 0.5 * L;
  const double umax_r = std::asinh(2.0 * s_right / kPi);
  const double umax_l = std::asinh(2.0 * s_left / kPi);
  // Singular mass beyond the representable node range, ~ delta^(1+alpha).
  const double clipped_tail =
      s_right_want > s_right ? std::exp(-2.0 * s_right * (1.0 + aeff)) / (1.0 + aeff) : 0.0;

  int evals = 0;
  auto contribution = [&](double u) {
    const Node nd = make_node(u);
    if (!nd.usable) return 0.0;
    const double fv = f(nd.t, nd.omt);
    if (!std::isfinite(fv))
      throw NonFiniteSample("integrate_singular: non-finite integrand at t = " +
                            std::to_string(nd.t));
    ++evals;
    return nd.w * fv;
  };

  constexpr int kMaxLevel = 12;
  double h = 1.0;
  double total = 0.0;
  for (int k = static_cast<int>(-std::floor(umax_l)); k <= static_cast<int>(std::floor(umax_r));
       ++k)
    total += contribution(k * h);
  double estimate = h * total;
  double err = std::abs(estimate);

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double extra = 0.0;
    const long long kmin = static_cast<long long>(std::ceil(-umax_l / h));
    const long long kmax = static_cast<long long>(std::floor(umax_r / h));
    for (long long k = kmin; k <= kmax; ++k) {
      if ((k & 1) == 0) continue;
      extra += contribution(k * h);
    }
    const double refined = 0.5 * estimate + h * extra;
    err = std::abs(refined - estimate);
    estimate = refined;
    if (level >= 3 && err <= 0.5 * tol * std::max(1.0, std::abs(estimate)) &&
        clipped_tail <= tol)
      return {estimate, std::max(err, clipped_tail), evals, true};
  }
  return {estimate, std::max(err, clipped_tail), evals, false};
}

QuadResult integrate_weighted(const Integrand& g, double alpha, double tol) {
  return integrate_singular(
      [&](double t, double omt) { return g(t, omt) * std::pow(omt, alpha); }, alpha, tol);
}

QuadResult integrate_split(const Integrand& f, double alpha, double tol,
                           const std::vector<double>& cuts) {
  if (cuts.empty()) return integrate_singular(f, alpha, tol);
  double prev = 0.0;
  for (double c : cuts) {
    if (!(c > prev && c < 1.0))
      throw DomainError("integrate_split: cuts must ascend strictly inside (0,1)");
    prev = c;
  }
  std::vector<double> edges;
  edges.reserve(cuts.size() + 2);
  edges.push_back(0.0);
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(1.0);

  const int pieces = static_cast<int>(edges.size()) - 1;
  const double piece_tol = std::max(tol / pieces, 1e-13);
  QuadResult total{0.0, 0.0, 0, true};
  for (int i = 0; i < pieces; ++i) {
    const double a = edges[i];
    const double len = edges[i + 1] - a;
    QuadResult q;
    if (i + 1 < pieces) {
      // Interior piece: no endpoint singularity; 1-t stays bounded away
      // from zero so the direct subtraction is accurate.
      q = integrate_singular(
          [&](double tau, double) {
            const double t = a + len * tau;
            return len * f(t, 1.0 - t);
          },
          0.0, piece_tol);
    } else {
      // Final piece reaches t=1: map the endpoint distance exactly.
      q = integrate_singular(
          [&](double tau, double omtau) { return len * f(a + len * tau, len * omtau); }, alpha,
          piece_tol);
    }
    total.value += q.value;
    total.error_estimate += q.error_estimate;
    total.evaluations += q.evaluations;
    total.converged = total.converged && q.converged;
  }
  return total;
}

}  // namespace lommel::quad
