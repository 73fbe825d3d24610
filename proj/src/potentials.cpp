#include "morsemap/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "morsemap/errors.hpp"
#include "morsemap/langer.hpp"
#include "morsemap/specfun.hpp"

namespace morsemap::potentials {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

void require_family(const RadialState& state, Family family) {
  if (state.family != family) {
    throw DomainError(std::string("eigenfunction: state belongs to the ") +
                      std::string(to_string(state.family)) + " family, not " +
                      std::string(to_string(family)));
  }
}

void require_units(double mass, double hbar) {
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("mass and hbar must be positive");
  }
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::oscillator ? "oscillator" : "coulomb";
}

DegeneracyRecord degeneracy(int dim, int l) {
  if (dim < 2 || l < 0) {
    throw DomainError("degeneracy: need dim >= 2 and l >= 0");
  }
  DegeneracyRecord rec{l, dim, 0};
  if (dim == 2) {
    rec.count = l == 0 ? 1 : 2;
    return rec;
  }
  // (D+l-3)! / (l! (D-3)!) = C(D+l-3, l); the remaining (D-2) divides exactly.
  const auto d = static_cast<std::uint64_t>(dim);
  const auto ll = static_cast<std::uint64_t>(l);
  rec.count = (d + 2 * ll - 2) * binomial(d + ll - 3, ll) / (d - 2);
  return rec;
}

std::vector<RadialState> sho_spectrum(int dim, int l, double beta, double omega,
                                      double mass, double hbar, int n_max) {
  if (!(omega > 0.0)) {
    throw DomainError("oscillator bound states require omega > 0");
  }
  require_units(mass, hbar);
  const auto af = langer::angular_factor(dim, l, beta);
  std::vector<RadialState> states;
  for (int n = 0; n <= n_max; ++n) {
    states.push_back({n, l, dim, beta, af.s, hbar * omega * (2.0 * n + 1.0 + af.s),
                      Family::oscillator});
  }
  return states;
}

double sho_norm_const(const RadialState& state, double omega, double mass, double hbar) {
  // With xi = c r^2: int r^(1+2S) e^-xi L^2 dr = Gamma(n+S+1) / (2 n! c^(S+1)).
  const double c = mass * omega / hbar;
  const double log_sq = std::log(2.0) + (state.s + 1.0) * std::log(c) +
                        specfun::log_gamma(state.n + 1.0) -
                        specfun::log_gamma(state.n + state.s + 1.0);
  return std::exp(0.5 * log_sq);
}

double sho_eigenfunction(const RadialState& state, double omega, double mass,
                         double hbar, double r) {
  require_family(state, Family::oscillator);
  if (r < 0.0) {
    throw DomainError("sho_eigenfunction: r must be non-negative");
  }
  if (r == 0.0) {
    return 0.0;
  }
  const double xi = mass * omega * r * r / hbar;
  const double log_envelope = (0.5 + state.s) * std::log(r) - 0.5 * xi;
  return sho_norm_const(state, omega, mass, hbar) * std::exp(log_envelope) *
         specfun::laguerre(state.n, state.s, xi);
}

double coulomb_length(double z, double mass, double hbar) {
  return hbar * hbar / (mass * std::abs(z));
}

std::vector<RadialState> coulomb_spectrum(int dim, int l, double beta, double z,
                                          double mass, double hbar, int n_max) {
  if (!(z < 0.0)) {
    throw DomainError("Coulomb bound states require Z < 0");
  }
  require_units(mass, hbar);
  const auto af = langer::angular_factor(dim, l, beta);
  const double a = coulomb_length(z, mass, hbar);
  std::vector<RadialState> states;
  for (int n = 0; n <= n_max; ++n) {
    const double nu = n + 0.5 + af.s;
    states.push_back({n, l, dim, beta, af.s, -hbar * hbar / (2.0 * mass * a * a * nu * nu),
                      Family::coulomb});
  }
  return states;
}

double coulomb_norm_const(const RadialState& state, double z, double mass, double hbar) {
  // With rho = k r: int r^(1+2S) e^-rho [L_n^(2S)]^2 dr
  //   = Gamma(n+2S+1) (2n+2S+1) / (n! k^(2S+2)).
  const double nu = state.n + 0.5 + state.s;
  const double k = 2.0 / (coulomb_length(z, mass, hbar) * nu);
  const double log_sq = (2.0 * state.s + 2.0) * std::log(k) +
                        specfun::log_gamma(state.n + 1.0) -
                        specfun::log_gamma(state.n + 2.0 * state.s + 1.0) -
                        std::log(2.0 * state.n + 2.0 * state.s + 1.0);
  return std::exp(0.5 * log_sq);
}

double coulomb_eigenfunction(const RadialState& state, double z, double mass,
                             double hbar, double r) {
  require_family(state, Family::coulomb);
  if (r < 0.0) {
    throw DomainError("coulomb_eigenfunction: r must be non-negative");
  }
  if (r == 0.0) {
    return 0.0;
  }
  const double nu = state.n + 0.5 + state.s;
  const double rho = 2.0 * r / (coulomb_length(z, mass, hbar) * nu);
  const double log_envelope = (0.5 + state.s) * std::log(r) - 0.5 * rho;
  return coulomb_norm_const(state, z, mass, hbar) * std::exp(log_envelope) *
         specfun::laguerre(state.n, 2.0 * state.s, rho);
}

std::vector<Level> pure_sho_levels(int dim, double omega, double mass, double hbar,
                                   int big_n_max) {
  if (dim < 2) {
    throw DomainError("pure_sho_levels: dim must be at least 2");
  }
  if (!(omega > 0.0)) {
    throw DomainError("oscillator bound states require omega > 0");
  }
  require_units(mass, hbar);
  std::vector<Level> levels;
  for (int big_n = 0; big_n <= big_n_max; ++big_n) {
    Level lv{big_n, hbar * omega * (big_n + 0.5 * dim), 0};
    for (int l = big_n % 2; l <= big_n; l += 2) {
      lv.degeneracy += degeneracy(dim, l).count;
    }
    levels.push_back(lv);
  }
  return levels;
}

std::vector<Level> pure_coulomb_levels(int dim, double z, double mass, double hbar,
                                       int big_n_max) {
  if (dim < 2) {
    throw DomainError("pure_coulomb_levels: dim must be at least 2");
  }
  if (!(z < 0.0)) {
    throw DomainError("Coulomb bound states require Z < 0");
  }
  require_units(mass, hbar);
  const double a = coulomb_length(z, mass, hbar);
  std::vector<Level> levels;
  for (int big_n = 1; big_n <= big_n_max; ++big_n) {
    const double shifted = big_n + 0.5 * (dim - 3);
    Level lv{big_n, -hbar * hbar / (2.0 * mass * a * a * shifted * shifted), 0};
    for (int l = 0; l <= big_n - 1; ++l) {
      lv.degeneracy += degeneracy(dim, l).count;
    }
    levels.push_back(lv);
  }
  return levels;
}

}  // namespace morsemap::potentials
