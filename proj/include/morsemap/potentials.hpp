#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace morsemap::potentials {

enum class Family { oscillator, coulomb };

std::string_view to_string(Family family);

/// One bound state of the D-dimensional singular oscillator or Coulomb problem.
struct RadialState {
  int n = 0;
  int l = 0;
  int dim = 3;
  double beta = 0.0;
  double s = 0.0;
  double energy = 0.0;
  Family family = Family::oscillator;
};

struct DegeneracyRecord {
  int l = 0;
  int dim = 0;
  std::uint64_t count = 0;
};

/// Number of hyperspherical harmonics with angular quantum number l in D
/// dimensions, (D+2l-2)(D+l-3)! / (l! (D-2)!). d_0(2) is taken as 1.
DegeneracyRecord degeneracy(int dim, int l);

/// hbar omega (2n + 1 + S) for n = 0..n_max.
std::vector<RadialState> sho_spectrum(int dim, int l, double beta, double omega,
                                      double mass, double hbar, int n_max);

/// Normalized u_nL(r) = A r^(1/2+S) e^(-m omega r^2 / 2 hbar) L_n^(S)(m omega r^2 / hbar).
double sho_eigenfunction(const RadialState& state, double omega, double mass,
                         double hbar, double r);

/// -hbar^2 / [2 m a^2 (n + 1/2 + S)^2], a = hbar^2 / (m |Z|), for n = 0..n_max.
std::vector<RadialState> coulomb_spectrum(int dim, int l, double beta, double z,
                                          double mass, double hbar, int n_max);

/// Normalized u_nL(r) = B r^(1/2+S) e^(-r/(a nu)) L_n^(2S)(2r/(a nu)), nu = n + 1/2 + S.
double coulomb_eigenfunction(const RadialState& state, double z, double mass,
                             double hbar, double r);

/// Closed-form normalization constants (A_nL, B_nL) from the Laguerre norms.
double sho_norm_const(const RadialState& state, double omega, double mass, double hbar);
double coulomb_norm_const(const RadialState& state, double z, double mass, double hbar);

/// Bohr-type length hbar^2 / (m |Z|).
double coulomb_length(double z, double mass, double hbar);

struct Level {
  int big_n = 0;
  double energy = 0.0;
  std::uint64_t degeneracy = 0;
};

/// Pure (beta = 0) oscillator levels hbar omega (N + D/2), N = 0..N_max, with
/// N = 2n + l summed over l <= N of matching parity.
std::vector<Level> pure_sho_levels(int dim, double omega, double mass, double hbar,
                                   int big_n_max);

/// Pure Coulomb levels -hbar^2 / (2 m a^2 [N + (D-3)/2]^2), N = 1..N_max, with
/// N = n + l + 1 summed over l <= N - 1. D = 2 is the formula extrapolated.
std::vector<Level> pure_coulomb_levels(int dim, double z, double mass, double hbar,
                                       int big_n_max);

}  // namespace morsemap::potentials
