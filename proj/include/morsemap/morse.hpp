#pragma once

#include <vector>

namespace morsemap::morse {

/// Generalized Morse potential V(x) = v1 e^(-alpha x) + v2 e^(-2 alpha x)
/// for a particle of mass `mass`.
struct MorseParams {
  double v1 = 0.0;
  double v2 = 0.0;
  double alpha = 1.0;
  double mass = 1.0;
  double hbar = 1.0;

  /// Bound states exist only for a well: v1 < 0 and v2 > 0.
  bool has_well() const { return v1 < 0.0 && v2 > 0.0; }

  double potential(double x) const;

  /// Throws DomainError unless alpha, mass and hbar are positive.
  void validate() const;
};

struct MorseState {
  int n = 0;
  double s = 0.0;  ///< sqrt(-2 m E) / (hbar alpha)
  double energy = 0.0;
  double norm_const = 0.0;
};

/// m|V1| / (hbar alpha sqrt(2 m V2)); quantization reads n + s + 1/2 = this.
/// Only meaningful when params.has_well().
double quantization_rhs(const MorseParams& params);

/// Number of n >= 0 with n < quantization_rhs - 1/2. Zero without a well.
int state_count(const MorseParams& params);

/// Closed-form energy -V1^2/(4 V2) [1 - (n + 1/2)/rhs]^2.
double level_energy(const MorseParams& params, int n);

/// All bound states ordered by n (strictly increasing energies, all < 0).
std::vector<MorseState> spectrum(const MorseParams& params);

/// xi = 2 sqrt(2 m V2) e^(-alpha x) / (hbar alpha).
double xi_of_x(const MorseParams& params, double x);

/// psi_n(x) = N_n xi^s e^(-xi/2) L_n^(2s)(xi), normalized on the real line.
/// Throws DomainError if `state` is not a member of spectrum(params).
double eigenfunction(const MorseParams& params, const MorseState& state, double x);

}  // namespace morsemap::morse
