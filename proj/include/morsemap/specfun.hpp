#pragma once

#include <functional>

namespace morsemap::specfun {

/// Generalized Laguerre polynomial L_n^(alpha)(x), evaluated with the upward
/// three-term recurrence in n. Requires n >= 0, alpha > -1, x >= 0.
double laguerre(int n, double alpha, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Terminating Kummer series M(-n, b, z). b must not be a non-positive
/// integer.
double kummer_m_poly(int n, double b, double z);

inline constexpr double kDefaultQuadratureTol = 1e-10;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integral of f over (0, inf) for integrands with exponential decay.
/// decay_scale is the length over which f falls by ~e; the integrand is
/// rescaled by it before quadrature. Throws ConvergenceError when the
/// estimated absolute error stays above tol.
QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    double decay_scale = 1.0,
                                    double tol = kDefaultQuadratureTol);

/// Integral of f over the whole real line, split at `centre` into two
/// half-lines.
QuadratureResult integrate_line(const std::function<double(double)>& f,
                                double centre, double decay_scale = 1.0,
                                double tol = kDefaultQuadratureTol);

}  // namespace morsemap::specfun
