#include <lommel/lommel.hpp>

#include <lommel/detail/series.hpp>
#include <lommel/quadrature.hpp>
#include <lommel/specfun.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace lommel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZMax = 100.0 * kPi;

void require_z_range(double z) {
  if (!(z >= 0.0) || z > kZMax + 1e-9)
    throw DomainError("z = " + std::to_string(z) + " outside [0, 100*pi]");
}

// Zeros of the oscillatory factor become piece boundaries once the period
// is short against (0,1); below z=50 a single tanh-sinh run handles it.
std::vector<double> trig_cuts(double z, bool sine) {
  std::vector<double> cuts;
  if (z <= 50.0) return cuts;
  const double step = kPi / z;
  for (double t = sine ? step : 0.5 * step; t < 1.0 - 1e-9; t += step) cuts.push_back(t);
  return cuts;
}

double checked_at_half(double mu, double nu) {
  const double v = sf::hyp2f1_at_half(mu, nu);
  if (v == 0.0)
    throw ParameterPole("kernel normalization vanishes at mu = " + std::to_string(mu) +
                        ", nu = " + std::to_string(nu));
  return v;
}

}  // namespace

bool LommelParams::series_valid() const {
  return !detail::near_odd_negative_integer(mu + nu, 1e-9) &&
         !detail::near_odd_negative_integer(mu - nu, 1e-9);
}

double lommel_entire(const LommelParams& p, double z) {
  if (!p.series_valid())
    throw ParameterPole("mu +- nu at an odd negative integer: mu = " + std::to_string(p.mu) +
                        ", nu = " + std::to_string(p.nu));
  return sf::hyp1f2(1.0, 0.5 * (p.mu - p.nu + 3.0), 0.5 * (p.mu + p.nu + 3.0), -0.25 * z * z)
      .value;
}

double lommel_series(const LommelParams& p, double z) {
  if (z < 0.0) throw DomainError("lommel_series: z = " + std::to_string(z) + " negative");
  require_z_range(z);
  if (z == 0.0) {
    if (p.mu > -1.0) return 0.0;
    throw DomainError("lommel_series: z = 0 with mu <= -1");
  }
  const double denom = (p.mu + 1.0) * (p.mu + 1.0) - p.nu * p.nu;
  return std::pow(z, p.mu + 1.0) / denom * lommel_entire(p, z);
}

double a_const(double mu, double nu) {
  const double n1 = 0.5 * (mu + 1.0 + nu);
  const double n2 = 0.5 * (mu + 1.0 - nu);
  if (detail::near_nonpositive_integer(n1, 1e-12) || detail::near_nonpositive_integer(n2, 1e-12))
    throw NumeratorPole("a-ratio numerator gamma pole at mu = " + std::to_string(mu) +
                        ", nu = " + std::to_string(nu));
  return 2.0 * std::tgamma(n1) * std::tgamma(n2) *
         sf::gamma_reciprocal_or_zero(0.5 * (mu + nu)) *
         sf::gamma_reciprocal_or_zero(0.5 * (mu - nu));
}

double a_const(const LommelParams& p) { return a_const(p.mu, p.nu); }

namespace detail {

double kernel_from_omt(double mu, double nu, double omt, double at_half) {
  const sf::HypTriple triple{0.5 + nu, 0.5 - nu, mu + 0.5};
  return std::pow(omt, mu - 0.5) * sf::hyp2f1(triple, 0.5 * omt).value / at_half;
}

}  // namespace detail

double kernel_f(const LommelParams& p, double t) {
  if (!p.sine_repr_valid())
    throw DomainError("kernel_f: mu = " + std::to_string(p.mu) + " <= -1/2");
  if (!(t > 0.0 && t < 1.0))
    throw DomainError("kernel_f: t = " + std::to_string(t) + " outside (0,1)");
  const double at_half = checked_at_half(p.mu, p.nu);
  return detail::kernel_from_omt(p.mu, p.nu, 1.0 - t, at_half);
}

double kernel_f_derivative(const LommelParams& p, double t) {
  if (!p.sine_repr_valid())
    throw DomainError("kernel_f_derivative: mu = " + std::to_string(p.mu) + " <= -1/2");
  if (!(t > 0.0 && t < 1.0))
    throw DomainError("kernel_f_derivative: t = " + std::to_string(t) + " outside (0,1)");
  const double at_half = checked_at_half(p.mu, p.nu);
  const double omt = 1.0 - t;
  const sf::HypTriple lowered{0.5 + p.nu, 0.5 - p.nu, p.mu - 0.5};
  try {
    return 0.5 * (1.0 - 2.0 * p.mu) * std::pow(omt, p.mu - 1.5) *
           sf::hyp2f1(lowered, 0.5 * omt).value / at_half;
  } catch (const BadLowerParameter&) {
    throw ParameterPole("kernel_f_derivative: mu - 1/2 = " + std::to_string(p.mu - 0.5) +
                        " is a nonpositive integer");
  }
}

double lommel_sine_integral(const LommelParams& p, double z) {
  if (!p.sine_repr_valid())
    throw DomainError("lommel_sine_integral: mu = " + std::to_string(p.mu) + " <= -1/2");
  if (!(z > 0.0)) throw DomainError("lommel_sine_integral: z must be positive");
  require_z_range(z);
  const double at_half = checked_at_half(p.mu, p.nu);
  const double mu = p.mu;
  const double nu = p.nu;
  const auto q = quad::integrate_split(
      [&](double t, double omt) {
        return std::sin(z * t) * detail::kernel_from_omt(mu, nu, omt, at_half);
      },
      mu - 0.5, 1e-11, trig_cuts(z, true));
  if (!q.converged)
    throw ToleranceNotReached("lommel_sine_integral: quadrature stalled, error estimate " +
                              std::to_string(q.error_estimate));
  return std::pow(z, mu) * q.value;
}

double lommel_cosine_integral(const LommelParams& p, double z) {
  if (!p.cosine_repr_valid())
    throw DomainError("lommel_cosine_integral: mu = " + std::to_string(p.mu) + " <= -3/2");
  if (!(z > 0.0)) throw DomainError("lommel_cosine_integral: z must be positive");
  require_z_range(z);
  const double norm = a_const(p.mu + 1.0, p.nu);
  if (norm == 0.0)
    throw ZeroNormalizer("lommel_cosine_integral: a-ratio vanishes at mu+1 = " +
                         std::to_string(p.mu + 1.0) + ", nu = " + std::to_string(p.nu));
  const double at_half = checked_at_half(p.mu + 1.0, p.nu);
  const double mu1 = p.mu + 1.0;
  const double nu = p.nu;
  const auto q = quad::integrate_split(
      [&](double t, double omt) {
        return std::cos(z * t) * detail::kernel_from_omt(mu1, nu, omt, at_half);
      },
      p.mu + 0.5, 1e-11, trig_cuts(z, false));
  if (!q.converged)
    throw ToleranceNotReached("lommel_cosine_integral: quadrature stalled, error estimate " +
                              std::to_string(q.error_estimate));
  return std::pow(z, p.mu + 1.0) / norm * q.value;
}

double lommel_asymptotic(const LommelParams& p, double z) {
  if (!(z >= 10.0))
    throw DomainError("lommel_asymptotic: z = " + std::to_string(z) + " below 10");
  const double amp = sf::gamma(0.5 * (p.mu + p.nu + 1.0)) * sf::gamma(0.5 * (p.mu - p.nu + 1.0)) /
                     (4.0 * std::sqrt(kPi));
  const double osc =
      amp * std::pow(2.0 / z, p.mu + 1.5) * std::cos(z - 0.5 * kPi * (p.mu + 1.5));
  return std::pow(z, p.mu + 1.0) * (1.0 / (z * z) + osc);
}

double aux_V(const LommelParams& p, double c, double z) {
  if (!(z > 0.0)) throw DomainError("aux_V: z must be positive");
  if (!(c >= 1.0)) throw DomainError("aux_V: c = " + std::to_string(c) + " below 1");
  return c * std::pow(z, p.mu - 1.0) * (1.0 - std::cos(z)) - lommel_series(p, z);
}

double aux_U(const LommelParams& p, double c, double z) {
  if (!(z > 0.0)) throw DomainError("aux_U: z must be positive");
  if (!(c >= 0.0)) throw DomainError("aux_U: c = " + std::to_string(c) + " negative");
  const double norm = a_const(p.mu + 1.0, p.nu);
  if (norm == 0.0)
    throw ZeroNormalizer("aux_U: a-ratio vanishes at mu+1 = " + std::to_string(p.mu + 1.0) +
                         ", nu = " + std::to_string(p.nu));
  return (c + 1.0 / norm) * std::pow(z, p.mu) * std::sin(z) - lommel_series(p, z);
}

double theta_combination(const LommelParams& p, double theta, double z) {
  if (!(z > 0.0)) throw DomainError("theta_combination: z must be positive");
  if (!(theta >= 0.0 && theta <= kPi))
    throw DomainError("theta_combination: theta = " + std::to_string(theta) +
                      " outside [0, pi]");
  const LommelParams lowered{p.mu - 1.0, p.nu};
  if (!p.series_valid() || !lowered.series_valid())
    throw ParameterPole("theta_combination: series pole at mu = " + std::to_string(p.mu) +
                        " or mu-1, nu = " + std::to_string(p.nu));
  return std::pow(z, -p.mu) * (a_const(p) * std::cos(theta) * lommel_series(lowered, z) +
                               std::sin(theta) * lommel_series(p, z));
}

double lommel_eval(const LommelParams& p, double z, EvalRoute route) {
  switch (route) {
    case EvalRoute::Series: return lommel_series(p, z);
    case EvalRoute::SineIntegral: return lommel_sine_integral(p, z);
    case EvalRoute::CosineIntegral: return lommel_cosine_integral(p, z);
    case EvalRoute::Asymptotic: return lommel_asymptotic(p, z);
  }
  throw DomainError("lommel_eval: unknown route");
}

}  // namespace lommel
