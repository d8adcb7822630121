#pragma once

#include <lommel/errors.hpp>

namespace lommel {

// Order pair (mu, nu) with the validity predicates the different
// evaluation routes require.
struct LommelParams {
  double mu;
  double nu;

  // mu+nu and mu-nu each farther than 1e-9 from every odd negative
  // integer (series denominators (mu+2n+1)^2 - nu^2 nonzero).
  bool series_valid() const;

  // Sine-kernel representation needs mu > -1/2.
  bool sine_repr_valid() const { return mu > -0.5; }

  // Cosine-kernel representation extends down to mu > -3/2.
  bool cosine_repr_valid() const { return mu > -1.5; }
};

enum class EvalRoute { Series, SineIntegral, CosineIntegral, Asymptotic };

// s_{mu,nu}(z) by the power series:
//   z^(mu+1)/((mu+1)^2-nu^2) * 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4).
// Requires series_valid, 0 <= z <= 100*pi.
double lommel_series(const LommelParams& p, double z);

// The entire part 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4): branch-free,
// defined for all real z, even in z, value 1 at z=0.
double lommel_entire(const LommelParams& p, double z);

// a_{mu,nu} = 2 G((mu+1+nu)/2) G((mu+1-nu)/2) / (G((mu+nu)/2) G((mu-nu)/2)).
// Exactly 0 when a denominator gamma is at a pole; NumeratorPole when a
// numerator gamma is.
double a_const(const LommelParams& p);
double a_const(double mu, double nu);

// Kernel f_{mu,nu}(t) = (1-t)^(mu-1/2) 2F1(1/2+nu,1/2-nu;mu+1/2;(1-t)/2)
// normalized by its value at t=0 (the Gauss point).  mu > -1/2, t in (0,1).
double kernel_f(const LommelParams& p, double t);

// df_{mu,nu}/dt, evaluated by the hypergeometric derivative formula; equals
// -a_{mu,nu} f_{mu-1,nu}(t).  Requires mu-1 > -3/2 on top of kernel_f's domain.
double kernel_f_derivative(const LommelParams& p, double t);

// s_{mu,nu}(z) = z^mu Int_0^1 sin(zt) f_{mu,nu}(t) dt  (mu > -1/2, 0 < z <= 100*pi).
double lommel_sine_integral(const LommelParams& p, double z);

// s_{mu,nu}(z) = z^(mu+1)/a_{mu+1,nu} Int_0^1 cos(zt) f_{mu+1,nu}(t) dt
// (mu > -3/2, a_{mu+1,nu} != 0, 0 < z <= 100*pi).
double lommel_cosine_integral(const LommelParams& p, double z);

// Two-term large-z form:
//   z^(mu+1) [ z^-2 + G((mu+nu+1)/2)G((mu-nu+1)/2)/(4 sqrt(pi)) (2/z)^(mu+3/2)
//              cos(z - pi(mu+3/2)/2) ],  z >= 10.
double lommel_asymptotic(const LommelParams& p, double z);

// V_{mu,nu}(z) = c z^(mu-1)(1-cos z) - s_{mu,nu}(z),  c >= 1, z > 0.
double aux_V(const LommelParams& p, double c, double z);

// U_{mu,nu}(z) = (c + 1/a_{mu+1,nu}) z^mu sin z - s_{mu,nu}(z),  c >= 0, z > 0.
double aux_U(const LommelParams& p, double c, double z);

// z^-mu (a_{mu,nu} cos(theta) s_{mu-1,nu}(z) + sin(theta) s_{mu,nu}(z)),
// theta in [0, pi], z > 0.
double theta_combination(const LommelParams& p, double theta, double z);

// Dispatch by route (series/sine/cosine/asymptotic).
double lommel_eval(const LommelParams& p, double z, EvalRoute route);

namespace detail {

// Raw kernel formula without the mu > -1/2 gate, taking the endpoint
// distance directly; used by the cosine route (order mu+1) and the
// derivative relation (order mu-1).
double kernel_from_omt(double mu, double nu, double omt, double at_half);

}  // namespace detail

}  // namespace lommel
