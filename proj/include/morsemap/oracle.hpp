#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "morsemap/langer.hpp"

// Numerov shooting eigensolver. It shares nothing with the closed-form
// spectra and exists to check them.
namespace morsemap::oracle {

/// Uniform grid x_min, x_min + h, ..., x_max with `points` nodes.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int points = 20000;

  double spacing() const { return (x_max - x_min) / (points - 1); }
  double at(int i) const { return x_min + i * spacing(); }
  /// Same interval with the spacing halved.
  Grid1D refined() const { return {x_min, x_max, 2 * points - 1}; }
  /// Throws DomainError unless x_min < x_max and points >= 1000.
  void validate() const;
};

inline constexpr int kMinGridPoints = 1000;

struct OracleResult {
  /// Eigenvalue from the h/2 grid.
  double eigenvalue = 0.0;
  int node_count = 0;
  Grid1D grid;
  /// |E(h/2) - E(h)| / 15, the Richardson estimate for a fourth-order scheme.
  double richardson_error_estimate = 0.0;
};

struct SolverOptions {
  SolverOptions() = default;

  /// Bisection stops once the bracket is below rel_tol * max(1, |E|).
  double rel_tol = 1e-13;
  int max_iterations = 200;
};

using Potential = std::function<double(double)>;
using Bracket = std::pair<double, double>;

/// One-dimensional problem -hbar^2/2m psi'' + V psi = E psi with psi = 0 at
/// both grid ends. Throws BracketError when the node counts at the bracket
/// ends do not straddle target_nodes.
OracleResult solve_1d(const Potential& potential, const Grid1D& grid, int target_nodes,
                      double mass, double hbar, Bracket bracket,
                      const SolverOptions& options = {});

/// As above; the bracket is found by node counting upward from the grid
/// minimum of the potential.
OracleResult solve_1d(const Potential& potential, const Grid1D& grid, int target_nodes,
                      double mass, double hbar, const SolverOptions& options = {});

/// Radial equation on (0, x_max] (grid.x_min must be 0). The solution is
/// seeded with the Frobenius series r^(1/2+S) (1 + c1 r + c2 r^2) at the first
/// two interior nodes and vanishes at x_max.
OracleResult solve_radial(const langer::RadialProblem& problem, const Grid1D& grid,
                          int target_nodes, Bracket bracket,
                          const SolverOptions& options = {});

OracleResult solve_radial(const langer::RadialProblem& problem, const Grid1D& grid,
                          int target_nodes, const SolverOptions& options = {});

struct ScanResult {
  std::vector<OracleResult> states;
  /// Set when max_states cut the scan short; the window holds more levels.
  bool truncated = false;
};

/// Every eigenvalue inside (window.first, window.second), ascending.
ScanResult scan_spectrum(const Potential& potential, const Grid1D& grid, double mass,
                         double hbar, Bracket window, int max_states,
                         const SolverOptions& options = {});

ScanResult scan_spectrum(const langer::RadialProblem& problem, const Grid1D& grid,
                         Bracket window, int max_states,
                         const SolverOptions& options = {});

/// Number of eigenvalues below `energy` on this grid (Sturm count of the
/// outward solution).
int count_below(const Potential& potential, const Grid1D& grid, double mass, double hbar,
                double energy);
int count_below(const langer::RadialProblem& problem, const Grid1D& grid, double energy);

/// Grid covering the classically allowed region at `energy` plus tails in
/// which the WKB amplitude decays by at least e^(-decay) on each side.
Grid1D auto_grid_1d(const Potential& potential, double energy, double mass, double hbar,
                    int points = 20000, double decay = 20.0);

/// Radial grid [0, r_max] with r_max at least 5 outer turning radii and a
/// WKB tail decay of at least e^(-decay).
Grid1D auto_grid_radial(const langer::RadialProblem& problem, double energy,
                        int points = 20000, double decay = 20.0);

}  // namespace morsemap::oracle
