#pragma once

#include <lommel/errors.hpp>

#include <functional>
#include <vector>

namespace lommel::quad {

struct QuadResult {
  double value;
  double error_estimate;  // absolute, from the last level refinement
  int evaluations;
  bool converged;  // false once the level cap fires before the tolerance
};

// Integrand on (0,1).  The second argument is 1-t computed without
// cancellation: at the nodes needed to resolve a (1-t)^alpha singularity,
// the distance to the endpoint drops below 2^-53 and t alone rounds to 1.
using Integrand = std::function<double(double t, double one_minus_t)>;

// Tanh-sinh quadrature of f over (0,1).  alpha declares the exponent of
// the (1-t)^alpha factor carried by f (alpha > -1), used to plan the node
// tail; tol >= 1e-13.  Never evaluates f at the endpoints.  On level-cap
// exhaustion the best estimate is returned with converged = false.
QuadResult integrate_singular(const Integrand& f, double alpha, double tol);

// Same scheme with the singular factor applied by the integrator:
// integrates g(t, 1-t) * (1-t)^alpha.
QuadResult integrate_weighted(const Integrand& g, double alpha, double tol);

// Piecewise integral over (0,1) split at interior cut points (ascending,
// each in (0,1)).  Only the final piece touches t=1 and carries alpha;
// interior pieces integrate smoothly.  Used to tame oscillatory factors by
// cutting at their zeros.
QuadResult integrate_split(const Integrand& f, double alpha, double tol,
                           const std::vector<double>& cuts);

}  // namespace lommel::quad
