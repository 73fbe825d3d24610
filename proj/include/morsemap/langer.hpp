#pragma once

#include "morsemap/morse.hpp"

namespace morsemap::langer {

/// Radial problem for V(r) = z r^delta + hbar^2 beta / (2 m r^2) in `dim`
/// dimensions with angular quantum number l.
///
/// Only delta in {2, -1, 0, -2} is meaningful. For delta = 2 the oscillator
/// convention is z = m omega^2 / 2.
struct RadialProblem {
  int dim = 3;
  int l = 0;
  double beta = 0.0;
  int delta = 2;
  double z = 0.5;
  double mass = 1.0;
  double hbar = 1.0;

  /// Throws DomainError for dim < 2, l < 0, non-positive mass/hbar or a
  /// delta outside the supported set.
  void validate() const;

  /// z r^delta + hbar^2 beta / (2 m r^2).
  double potential(double r) const;

  /// potential(r) plus the centrifugal L(L+1) hbar^2 / (2 m r^2) term.
  double effective_potential(double r) const;
};

RadialProblem oscillator_problem(int dim, int l, double beta, double omega,
                                 double mass = 1.0, double hbar = 1.0);
RadialProblem coulomb_problem(int dim, int l, double beta, double z,
                              double mass = 1.0, double hbar = 1.0);

struct AngularFactor {
  double l_plus = 0.0;   ///< l + (D-3)/2
  double l_minus = 0.0;  ///< -l - (D-1)/2
  double s = 0.0;        ///< sqrt(beta + (L + 1/2)^2), the same for both branches
};

/// -(D-2)^2 / 4.
double critical_beta(int dim);

/// Throws CriticalCouplingError when beta + (L+1/2)^2 <= 0.
AngularFactor angular_factor(int dim, int l, double beta);

/// 1/2 + S: u(r) ~ r^(1/2+S) as r -> 0.
double origin_exponent(const RadialProblem& problem);

/// Morse parameters of the Langer-transformed radial equation, with the
/// scale gauge r0 = 1 and alpha = 1.
struct MorseImage {
  double lambda = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double alpha_eff = 1.0;
  double r0 = 1.0;

  morse::MorseParams params(double mass, double hbar) const {
    return {v1, v2, alpha_eff, mass, hbar};
  }
};

/// Maps the radial problem at trial energy `energy` onto the generalized
/// Morse potential. delta = 2 gives lambda = 1/2, V1 = -energy/4,
/// V2 = z/4; delta = -1 gives lambda = 1, V1 = z, V2 = -energy.
/// Throws UnsupportedDeltaError for delta in {0, -2}.
MorseImage to_morse(const RadialProblem& problem, double energy);

/// Radial energy of state n obtained purely through the Morse image: the
/// energy at which the image's n-th Morse level has s = lambda S.
double energy_via_morse(const RadialProblem& problem, int n);

}  // namespace morsemap::langer
