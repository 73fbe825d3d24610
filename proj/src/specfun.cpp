#include "morsemap/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "morsemap/errors.hpp"

namespace morsemap::specfun {

double laguerre(int n, double alpha, double x) {
  if (n < 0) {
    throw DomainError("laguerre: degree must be non-negative");
  }
  if (!(alpha > -1.0)) {
    throw DomainError("laguerre: alpha must exceed -1");
  }
  if (x < 0.0) {
    throw DomainError("laguerre: argument must be non-negative");
  }
  double previous = 0.0;
  double current = 1.0;
  for (int k = 0; k < n; ++k) {
    // (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * current - (k + alpha) * previous) /
        (k + 1.0);
    previous = current;
    current = next;
  }
  return current;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive");
  }
  return std::lgamma(x);
}

double kummer_m_poly(int n, double b, double z) {
  if (n < 0) {
    throw DomainError("kummer_m_poly: n must be non-negative");
  }
  if (b <= 0.0 && b == std::floor(b)) {
    throw DomainError("kummer_m_poly: b must not be a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) / (b + k) * z / (k + 1.0);
    sum += term;
  }
  return sum;
}

QuadratureResult integrate_halfline(const std::function<double(double)>& f,
                                    double decay_scale, double tol) {
  if (!(decay_scale > 0.0) || !(tol > 0.0)) {
    throw DomainError("integrate_halfline: decay_scale and tol must be positive");
  }
  // Interval halvings allowed before giving up.
  constexpr std::size_t kMaxRefinements = 12;
  boost::math::quadrature::exp_sinh<double> integrator(kMaxRefinements);

  auto scaled = [&](double y) {
    const double v = f(decay_scale * y);
    return std::isfinite(v) ? v : 0.0;
  };

  QuadratureResult out;
  double rel_tol = 1e-12;
  for (int attempt = 0; attempt < 3; ++attempt) {
    double error = 0.0;
    double l1 = 0.0;
    const double value = decay_scale * integrator.integrate(scaled, rel_tol, &error, &l1);
    out.value = value;
    out.error_estimate = decay_scale * error;
    if (out.error_estimate <= tol) {
      return out;
    }
    rel_tol *= 0.01;
  }
  std::ostringstream msg;
  msg << "integrate_halfline: error estimate " << out.error_estimate
      << " above tolerance " << tol;
  throw ConvergenceError(msg.str());
}

QuadratureResult integrate_line(const std::function<double(double)>& f,
                                double centre, double decay_scale, double tol) {
  const auto right = integrate_halfline([&](double t) { return f(centre + t); },
                                        decay_scale, 0.5 * tol);
  const auto left = integrate_halfline([&](double t) { return f(centre - t); },
                                       decay_scale, 0.5 * tol);
  return {right.value + left.value, right.error_estimate + left.error_estimate};
}

}  // namespace morsemap::specfun
