#include "oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace oracle {

namespace {

// Shared stop rule: five consecutive terms below eps*|sum|.
template <class Real>
struct Summer {
  Real sum{0};
  int small_streak = 0;
  bool add(const Real& term, const Real& eps) {
    sum += term;
    using std::abs;
    if (abs(term) < eps * abs(sum))
      ++small_streak;
    else
      small_streak = 0;
    return small_streak >= 5;
  }
};

template <class Real>
Real sum_2f1_series(const Real& a, const Real& b, const Real& c, const Real& x) {
  const Real eps{"1e-45"};
  Real term{1};
  Summer<Real> s;
  for (int n = 0; n < 200000; ++n) {
    if (s.add(term, eps)) return s.sum;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
  }
  throw std::runtime_error("oracle: 2F1 series did not converge");
}

template <class Real>
Real sum_1f2_series(const Real& a1, const Real& b1, const Real& b2, const Real& x,
                    const char* eps_str) {
  const Real eps{eps_str};
  Real term{1};
  Summer<Real> s;
  for (int n = 0; n < 200000; ++n) {
    if (s.add(term, eps)) return s.sum;
    term *= (a1 + n) / ((b1 + n) * (b2 + n) * (n + 1)) * x;
  }
  throw std::runtime_error("oracle: 1F2 series did not converge");
}

}  // namespace

mp50 gamma(const mp50& x) { return boost::math::tgamma(x); }

mp50 beta(const mp50& a, const mp50& b) {
  return boost::math::tgamma(a) * boost::math::tgamma(b) / boost::math::tgamma(a + b);
}

mp50 hyp2f1(const mp50& a, const mp50& b, const mp50& c, const mp50& x) {
  if (x <= mp50{"0.55"}) return sum_2f1_series(a, b, c, x);
  // Connection formula at 1-x; valid for non-integer c-a-b.
  const mp50 omx = 1 - x;
  const mp50 cab = c - a - b;
  const mp50 p1 = gamma(c) * gamma(cab) / (gamma(mp50(c - a)) * gamma(mp50(c - b))) *
                  sum_2f1_series(a, b, mp50(1 - cab), omx);
  const mp50 p2 = gamma(c) * gamma(mp50(-cab)) / (gamma(a) * gamma(b)) *
                  boost::multiprecision::pow(omx, cab) *
                  sum_2f1_series(mp50(c - a), mp50(c - b), mp50(1 + cab), omx);
  return p1 + p2;
}

mp50 hyp1f2(const mp50& a1, const mp50& b1, const mp50& b2, const mp50& x) {
  return sum_1f2_series(a1, b1, b2, x, "1e-45");
}

mp200 hyp1f2_big(const mp200& a1, const mp200& b1, const mp200& b2, const mp200& x) {
  return sum_1f2_series(a1, b1, b2, x, "1e-75");
}

mp50 hyp0f1(const mp50& b, const mp50& x) {
  const mp50 eps{"1e-45"};
  mp50 term{1};
  Summer<mp50> s;
  for (int n = 0; n < 200000; ++n) {
    if (s.add(term, eps)) return s.sum;
    term *= x / ((b + n) * (n + 1));
  }
  throw std::runtime_error("oracle: 0F1 series did not converge");
}

mp50 lommel_entire(const mp50& mu, const mp50& nu, const mp50& z) {
  const mp50 eps{"1e-45"};
  const mp50 z2 = z * z;
  mp50 term{1};
  Summer<mp50> s;
  for (int n = 0; n < 200000; ++n) {
    if (s.add(term, eps)) return s.sum;
    const mp50 d = mu + 2 * n + 3;
    term *= -z2 / (d * d - nu * nu);
  }
  throw std::runtime_error("oracle: Lommel series did not converge");
}

mp50 lommel_series(const mp50& mu, const mp50& nu, const mp50& z) {
  if (z == 0) return mp50{0};
  const mp50 denom = (mu + 1) * (mu + 1) - nu * nu;
  return boost::multiprecision::pow(z, mu + 1) / denom * lommel_entire(mu, nu, z);
}

mp50 sine_moment(const mp50& alpha, const mp50& z) {
  const mp50 eps{"1e-45"};
  mp50 pow_fact = z;  // z^(2n+1)/(2n+1)!
  Summer<mp50> s;
  for (int n = 0; n < 4000; ++n) {
    const mp50 term = (n % 2 ? -1 : 1) * pow_fact * beta(mp50(2 * n + 2), alpha + 1);
    if (s.add(term, eps)) return s.sum;
    pow_fact *= z * z / ((2 * n + 2) * (2 * n + 3));
  }
  throw std::runtime_error("oracle: sine moment series did not converge");
}

mp50 cosine_moment(const mp50& alpha, const mp50& z) {
  const mp50 eps{"1e-45"};
  mp50 pow_fact{1};  // z^(2n)/(2n)!
  Summer<mp50> s;
  for (int n = 0; n < 4000; ++n) {
    const mp50 term = (n % 2 ? -1 : 1) * pow_fact * beta(mp50(2 * n + 1), alpha + 1);
    if (s.add(term, eps)) return s.sum;
    pow_fact *= z * z / ((2 * n + 1) * (2 * n + 2));
  }
  throw std::runtime_error("oracle: cosine moment series did not converge");
}

namespace {

// Double sweep value of 2F1 on (0,1) plus a magnitude scale against which
// rounding error can be judged (max partial sum / summed coefficient sizes).
struct ScaledValue {
  double value;
  double scale;
};

ScaledValue double_2f1_on_unit(double a, double b, double c, double x) {
  if (x <= 0.55) {
    double term = 1, sum = 0, scale = 1;
    for (int n = 0; n < 4000; ++n) {
      sum += term;
      scale = std::max(scale, std::abs(sum));
      if (std::abs(term) < 1e-17 * std::abs(sum) && n > 2) break;
      term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
    }
    return {sum, scale};
  }
  const double omx = 1 - x;
  const double cab = c - a - b;
  auto series = [&](double aa, double bb, double cc) {
    double term = 1, sum = 0;
    for (int n = 0; n < 4000; ++n) {
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum) && n > 2) break;
      term *= (aa + n) * (bb + n) / ((cc + n) * (n + 1)) * omx;
    }
    return sum;
  };
  const double p1 = std::tgamma(c) * std::tgamma(cab) / (std::tgamma(c - a) * std::tgamma(c - b)) *
                    series(a, b, 1 - cab);
  const double p2 = std::tgamma(c) * std::tgamma(-cab) / (std::tgamma(a) * std::tgamma(b)) *
                    std::pow(omx, cab) * series(c - a, c - b, 1 + cab);
  return {p1 + p2, std::abs(p1) + std::abs(p2) + 1.0};
}

}  // namespace

int hurwitz_scan_count(double a, double b, double c, int n) {
  int count = 0;
  int prev_sign = 0;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) / n;
    const ScaledValue v = double_2f1_on_unit(a, b, c, x);
    int sign;
    if (std::abs(v.value) > 1e-10 * v.scale) {
      sign = v.value > 0 ? 1 : -1;
    } else {
      const mp50 mv = hyp2f1(mp50(a), mp50(b), mp50(c), mp50(x));
      sign = mv > 0 ? 1 : (mv < 0 ? -1 : 0);
    }
    if (prev_sign != 0 && sign != 0 && sign != prev_sign) ++count;
    if (sign != 0) prev_sign = sign;
  }
  return count;
}

double root_scan_bisect(double mu, double nu, double lo, double hi, int n) {
  const mp50 m{mu}, v{nu};
  auto g = [&](const mp50& z) { return lommel_entire(m, v, z); };
  mp50 a{lo}, b{hi};
  mp50 prev_x = a;
  mp50 prev_g = g(a);
  mp50 root_lo{0}, root_hi{0};
  int found = 0;
  for (int i = 1; i <= n; ++i) {
    const mp50 x = a + (b - a) * i / n;
    const mp50 gx = g(x);
    if (prev_g * gx < 0) {
      ++found;
      root_lo = prev_x;
      root_hi = x;
    }
    prev_x = x;
    prev_g = gx;
  }
  if (found != 1) throw std::runtime_error("oracle: expected exactly one sign change in scan");
  mp50 glo = g(root_lo);
  const mp50 width{"1e-30"};
  while (root_hi - root_lo > width) {
    const mp50 mid = (root_lo + root_hi) / 2;
    const mp50 gm = g(mid);
    if (glo * gm <= 0) {
      root_hi = mid;
    } else {
      root_lo = mid;
      glo = gm;
    }
  }
  return static_cast<double>((root_lo + root_hi) / 2);
}

double gamma_d(double x) { return static_cast<double>(gamma(mp50(x))); }

double hyp2f1_d(double a, double b, double c, double x) {
  return static_cast<double>(hyp2f1(mp50(a), mp50(b), mp50(c), mp50(x)));
}

double hyp1f2_d(double a1, double b1, double b2, double x) {
  if (std::abs(x) > 1100.0)
    return static_cast<double>(hyp1f2_big(mp200(a1), mp200(b1), mp200(b2), mp200(x)));
  return static_cast<double>(hyp1f2(mp50(a1), mp50(b1), mp50(b2), mp50(x)));
}

double lommel_entire_d(double mu, double nu, double z) {
  if (std::abs(z) > 66.0) {
    // Large argument: redo the sum in mp200 via the 1F2 form.
    const mp200 m{mu}, v{nu};
    return static_cast<double>(
        hyp1f2_big(mp200(1), (m - v + 3) / 2, (m + v + 3) / 2, -mp200(z) * z / 4));
  }
  return static_cast<double>(lommel_entire(mp50(mu), mp50(nu), mp50(z)));
}

double lommel_series_d(double mu, double nu, double z) {
  if (std::abs(z) > 66.0) {
    const mp200 m{mu}, v{nu};
    const mp200 entire =
        hyp1f2_big(mp200(1), (m - v + 3) / 2, (m + v + 3) / 2, -mp200(z) * z / 4);
    const mp200 denom = (m + 1) * (m + 1) - v * v;
    return static_cast<double>(boost::multiprecision::pow(mp200(z), m + 1) / denom * entire);
  }
  return static_cast<double>(lommel_series(mp50(mu), mp50(nu), mp50(z)));
}

}  // namespace oracle
