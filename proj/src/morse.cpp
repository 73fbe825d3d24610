#include "morsemap/morse.hpp"

#include <cmath>

#include "morsemap/errors.hpp"
#include "morsemap/specfun.hpp"

namespace morsemap::morse {

namespace {

constexpr double kStateMatchTol = 1e-12;

// N_n^2 = alpha n! 2s / Gamma(n + 2s + 1), from the Laguerre weight norm
// int xi^(2s-1) e^-xi [L_n^(2s)]^2 = Gamma(n+2s+1)/(n! 2s) and dx = -dxi/(alpha xi).
double norm_constant(double alpha, int n, double s) {
  const double log_sq = std::log(alpha) + specfun::log_gamma(n + 1.0) +
                        std::log(2.0 * s) - specfun::log_gamma(n + 2.0 * s + 1.0);
  return std::exp(0.5 * log_sq);
}

}  // namespace

double MorseParams::potential(double x) const {
  const double e = std::exp(-alpha * x);
  return v1 * e + v2 * e * e;
}

void MorseParams::validate() const {
  if (!(alpha > 0.0) || !(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("Morse parameters: alpha, mass and hbar must be positive");
  }
}

double quantization_rhs(const MorseParams& params) {
  params.validate();
  if (!params.has_well()) {
    throw DomainError("Morse potential has no well (need V1 < 0 and V2 > 0)");
  }
  return params.mass * std::abs(params.v1) /
         (params.hbar * params.alpha * std::sqrt(2.0 * params.mass * params.v2));
}

int state_count(const MorseParams& params) {
  params.validate();
  if (!params.has_well()) {
    return 0;
  }
  const double bound = quantization_rhs(params) - 0.5;
  if (!(bound > 0.0)) {
    return 0;
  }
  // Largest integer strictly below `bound`, plus one for n = 0.
  return static_cast<int>(std::ceil(bound));
}

double level_energy(const MorseParams& params, int n) {
  const double rhs = quantization_rhs(params);
  const double bracket = 1.0 - (n + 0.5) / rhs;
  return -params.v1 * params.v1 / (4.0 * params.v2) * bracket * bracket;
}

std::vector<MorseState> spectrum(const MorseParams& params) {
  std::vector<MorseState> states;
  const int count = state_count(params);
  if (count == 0) {
    return states;
  }
  const double rhs = quantization_rhs(params);
  states.reserve(count);
  for (int n = 0; n < count; ++n) {
    MorseState st;
    st.n = n;
    st.s = rhs - n - 0.5;
    st.energy = level_energy(params, n);
    st.norm_const = norm_constant(params.alpha, n, st.s);
    states.push_back(st);
  }
  return states;
}

double xi_of_x(const MorseParams& params, double x) {
  return 2.0 * std::sqrt(2.0 * params.mass * params.v2) * std::exp(-params.alpha * x) /
         (params.hbar * params.alpha);
}

double eigenfunction(const MorseParams& params, const MorseState& state, double x) {
  const int count = state_count(params);
  if (state.n < 0 || state.n >= count) {
    throw DomainError("Morse eigenfunction: state index outside the bound spectrum");
  }
  const double s = quantization_rhs(params) - state.n - 0.5;
  if (std::abs(state.s - s) > kStateMatchTol * s) {
    throw DomainError("Morse eigenfunction: state exponent does not match parameters");
  }
  const double xi = xi_of_x(params, x);
  if (xi == 0.0) {
    return 0.0;
  }
  if (!std::isfinite(xi)) {
    return 0.0;
  }
  const double poly = specfun::laguerre(state.n, 2.0 * s, xi);
  // xi^s e^(-xi/2) overflows/underflows separately for large xi; combine in log space.
  const double log_envelope = s * std::log(xi) - 0.5 * xi;
  return state.norm_const * std::exp(log_envelope) * poly;
}

}  // namespace morsemap::morse
