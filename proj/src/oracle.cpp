#include "morsemap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "morsemap/errors.hpp"

namespace morsemap::oracle {

namespace {

constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleBy = 1e-200;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Counts sign changes of a sequence, skipping exact zeros.
struct SignCounter {
  int last = 0;
  int changes = 0;
  void push(double v) {
    const int s = sign_of(v);
    if (s == 0) {
      return;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
};

// Numerov discretization of y'' = (q(x) - k E) y, k = 2m/hbar^2, with the
// solution vanishing at the last node. Written in terms of
// a_i = 1 - h^2 (q_i - k E) / 12, the recurrence reads
//   a_{i+1} y_{i+1} = (12 - 10 a_i) y_i - a_{i-1} y_{i-1}.
class Shooter {
public:
  using Seed = std::function<std::pair<double, double>(double)>;

  Shooter(Grid1D grid, std::vector<double> q, double k, int first, Seed seed)
      : grid_(grid), q_(std::move(q)), k_(k), first_(first), seed_(std::move(seed)),
        h2_over_12_(grid.spacing() * grid.spacing() / 12.0) {
    for (int i = first_; i < grid_.points; ++i) {
      if (!std::isfinite(q_[i])) {
        throw DomainError("oracle: potential is not finite on the grid");
      }
    }
  }

  int last() const { return grid_.points - 1; }

  double min_potential() const {
    return *std::min_element(q_.begin() + first_, q_.end()) / k_;
  }

  void check_resolution(double energy) const {
    for (int i = first_ + 2; i < grid_.points; ++i) {
      if (!(coef(i, energy) > 0.0)) {
        std::ostringstream msg;
        msg << "oracle: grid spacing " << grid_.spacing()
            << " too coarse for the potential near x = " << grid_.at(i);
        throw DomainError(msg.str());
      }
    }
  }

  // Sign changes of the outward solution over the whole grid: the number of
  // eigenvalues of the discrete problem that lie below `energy`.
  int count(double energy) const {
    auto [y_prev, y_cur] = seed_(energy);
    SignCounter nodes;
    nodes.push(y_prev);
    nodes.push(y_cur);
    double a_prev = coef(first_, energy);
    double a_cur = coef(first_ + 1, energy);
    for (int i = first_ + 1; i < last(); ++i) {
      const double a_next = coef(i + 1, energy);
      const double y_next = ((12.0 - 10.0 * a_cur) * y_cur - a_prev * y_prev) / a_next;
      y_prev = y_cur;
      y_cur = y_next;
      a_prev = a_cur;
      a_cur = a_next;
      nodes.push(y_cur);
      if (std::abs(y_cur) > kRescaleAbove) {
        y_prev *= kRescaleBy;
        y_cur *= kRescaleBy;
      }
    }
    return nodes.changes;
  }

  struct Match {
    double wronskian = 0.0;
    int nodes = 0;
  };

  // Discrete Wronskian a_m y_m^out a_{m+1} y_{m+1}^in - (out <-> in) between
  // the outward and inward solutions, joined at the outermost turning point.
  // It is independent of the joining node and vanishes exactly at the
  // discrete eigenvalues.
  Match match(double energy) const {
    const int m = match_index(energy);

    auto [yo_prev, yo_cur] = seed_(energy);
    SignCounter out_nodes;
    out_nodes.push(yo_prev);
    out_nodes.push(yo_cur);
    double a_prev = coef(first_, energy);
    double a_cur = coef(first_ + 1, energy);
    for (int i = first_ + 1; i <= m; ++i) {
      const double a_next = coef(i + 1, energy);
      const double y_next = ((12.0 - 10.0 * a_cur) * yo_cur - a_prev * yo_prev) / a_next;
      yo_prev = yo_cur;
      yo_cur = y_next;
      a_prev = a_cur;
      a_cur = a_next;
      if (i + 1 <= m) {
        out_nodes.push(yo_cur);
      }
      if (std::abs(yo_cur) > kRescaleAbove) {
        yo_prev *= kRescaleBy;
        yo_cur *= kRescaleBy;
      }
    }
    // yo_prev = y_m, yo_cur = y_{m+1}

    double yi_next = 0.0;  // y_{N-1}
    double yi_cur = 1.0;   // y_{N-2}
    SignCounter in_nodes;
    in_nodes.push(yi_cur);
    double a_next = coef(last(), energy);
    a_cur = coef(last() - 1, energy);
    for (int i = last() - 1; i > m; --i) {
      const double a_before = coef(i - 1, energy);
      const double y_before = ((12.0 - 10.0 * a_cur) * yi_cur - a_next * yi_next) / a_before;
      yi_next = yi_cur;
      yi_cur = y_before;
      a_next = a_cur;
      a_cur = a_before;
      in_nodes.push(yi_cur);
      if (std::abs(yi_cur) > kRescaleAbove) {
        yi_next *= kRescaleBy;
        yi_cur *= kRescaleBy;
      }
    }
    // yi_cur = y_m, yi_next = y_{m+1}

    const double a_m = coef(m, energy);
    const double a_m1 = coef(m + 1, energy);
    const double out_scale = std::max(std::abs(yo_prev), std::abs(yo_cur));
    const double in_scale = std::max(std::abs(yi_cur), std::abs(yi_next));
    Match result;
    result.wronskian = (a_m * yo_prev / out_scale) * (a_m1 * yi_next / in_scale) -
                       (a_m * yi_cur / in_scale) * (a_m1 * yo_cur / out_scale);
    result.nodes = out_nodes.changes + in_nodes.changes;
    return result;
  }

private:
  double coef(int i, double energy) const {
    return 1.0 - h2_over_12_ * (q_[i] - k_ * energy);
  }

  int match_index(double energy) const {
    const int lo = first_ + 2;
    const int hi = last() - 3;
    const double ke = k_ * energy;
    for (int i = hi; i >= lo; --i) {
      if (q_[i] < ke) {
        return i;
      }
    }
    return (lo + hi) / 2;
  }

  Grid1D grid_;
  std::vector<double> q_;
  double k_;
  int first_;
  Seed seed_;
  double h2_over_12_;
};

struct Eigen {
  double value = 0.0;
  int nodes = 0;
};

Eigen bisect(const Shooter& shooter, int target, Bracket bracket,
             const SolverOptions& options) {
  auto [lo, hi] = bracket;
  if (!(lo < hi)) {
    throw BracketError("oracle: bracket must satisfy lower < upper");
  }
  shooter.check_resolution(lo);
  int count_lo = shooter.count(lo);
  int count_hi = shooter.count(hi);
  if (!(count_lo <= target && count_hi > target)) {
    std::ostringstream msg;
    msg << "oracle: bracket [" << lo << ", " << hi << "] holds states " << count_lo
        << ".." << count_hi - 1 << ", not state " << target;
    throw BracketError(msg.str());
  }
  int iterations = 0;
  auto converged = [&] {
    return hi - lo <= options.rel_tol * std::max(1.0, std::abs(0.5 * (lo + hi)));
  };
  auto spend = [&] {
    if (++iterations > options.max_iterations) {
      throw ConvergenceError("oracle: bisection exceeded its iteration budget");
    }
  };

  // Narrow until exactly one eigenvalue (the target) lies inside.
  while ((count_lo != target || count_hi != target + 1) && !converged()) {
    spend();
    const double mid = 0.5 * (lo + hi);
    const int c = shooter.count(mid);
    if (c <= target) {
      lo = mid;
      count_lo = c;
    } else {
      hi = mid;
      count_hi = c;
    }
  }

  const int sign_lo = sign_of(shooter.match(lo).wronskian);
  const int sign_hi = sign_of(shooter.match(hi).wronskian);
  const bool use_wronskian = sign_lo != 0 && sign_hi != 0 && sign_lo != sign_hi;
  while (!converged()) {
    spend();
    const double mid = 0.5 * (lo + hi);
    bool go_up;
    if (use_wronskian) {
      go_up = sign_of(shooter.match(mid).wronskian) == sign_lo;
    } else {
      go_up = shooter.count(mid) <= target;
    }
    (go_up ? lo : hi) = mid;
  }
  Eigen e;
  e.value = 0.5 * (lo + hi);
  e.nodes = shooter.match(e.value).nodes;
  return e;
}

Bracket auto_bracket(const Shooter& shooter, int target) {
  const double vmin = shooter.min_potential();
  const double lo = vmin - 1e-6 * std::max(1.0, std::abs(vmin));
  double width = std::max(1e-3, 1e-3 * std::abs(vmin));
  for (int i = 0; i < 200; ++i) {
    const double hi = lo + width;
    if (shooter.count(hi) > target) {
      return {lo, hi};
    }
    width *= 2.0;
  }
  throw BracketError("oracle: could not bracket the requested state");
}

Shooter make_1d(const Potential& potential, const Grid1D& grid, double mass, double hbar) {
  grid.validate();
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("oracle: mass and hbar must be positive");
  }
  const double k = 2.0 * mass / (hbar * hbar);
  std::vector<double> q(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    q[i] = k * potential(grid.at(i));
  }
  // psi(x_min) = 0; the second value only sets the (irrelevant) scale.
  return Shooter(grid, std::move(q), k, 0, [](double) { return std::pair{0.0, 1.0}; });
}

Shooter make_radial(const langer::RadialProblem& problem, const Grid1D& grid) {
  problem.validate();
  grid.validate();
  if (grid.x_min != 0.0) {
    throw DomainError("oracle: radial grids must start at r = 0");
  }
  const double k = 2.0 * problem.mass / (problem.hbar * problem.hbar);
  // An r^-2 coupling in the regular part shifts the Frobenius exponent.
  const double beta_eff = problem.beta + (problem.delta == -2 ? k * problem.z : 0.0);
  const double rho = 0.5 + langer::angular_factor(problem.dim, problem.l, beta_eff).s;

  std::vector<double> q(grid.points, 0.0);
  for (int i = 1; i < grid.points; ++i) {
    q[i] = k * problem.effective_potential(grid.at(i));
  }
  const double h = grid.spacing();
  const double w_minus1 = problem.delta == -1 ? k * problem.z : 0.0;
  const double w_0_static = problem.delta == 0 ? k * problem.z : 0.0;
  // u = r^rho (1 + c1 r + c2 r^2) near the origin.
  auto seed = [=](double energy) {
    const double c1 = w_minus1 / (2.0 * rho);
    const double c2 = (w_minus1 * c1 + w_0_static - k * energy) / (2.0 * (2.0 * rho + 1.0));
    auto series = [&](double r) { return 1.0 + c1 * r + c2 * r * r; };
    return std::pair{series(h), std::pow(2.0, rho) * series(2.0 * h)};
  };
  return Shooter(grid, std::move(q), k, 1, seed);
}

OracleResult richardson(const Shooter& coarse, const Shooter& fine, const Grid1D& grid,
                        int target, Bracket bracket, const SolverOptions& options) {
  const Eigen e_coarse = bisect(coarse, target, bracket, options);
  const Eigen e_fine = bisect(fine, target, bracket, options);
  OracleResult out;
  out.eigenvalue = e_fine.value;
  out.node_count = e_fine.nodes;
  out.grid = grid;
  out.richardson_error_estimate = std::abs(e_fine.value - e_coarse.value) / 15.0;
  return out;
}

ScanResult scan(const Shooter& coarse, const Shooter& fine, const Grid1D& grid,
                Bracket window, int max_states, const SolverOptions& options) {
  if (!std::isfinite(window.first) || !std::isfinite(window.second) ||
      !(window.first < window.second)) {
    throw DomainError("scan_spectrum: window must be finite with lower < upper");
  }
  ScanResult result;
  const int first = coarse.count(window.first);
  const int last = coarse.count(window.second);
  for (int k = first; k < last; ++k) {
    if (static_cast<int>(result.states.size()) >= max_states) {
      result.truncated = true;
      break;
    }
    result.states.push_back(richardson(coarse, fine, grid, k, window, options));
  }
  return result;
}

}  // namespace

void Grid1D::validate() const {
  if (!(x_min < x_max)) {
    throw DomainError("grid: x_min must be below x_max");
  }
  if (points < kMinGridPoints) {
    throw DomainError("grid: at least 1000 points are required");
  }
}

OracleResult solve_1d(const Potential& potential, const Grid1D& grid, int target_nodes,
                      double mass, double hbar, Bracket bracket,
                      const SolverOptions& options) {
  const auto coarse = make_1d(potential, grid, mass, hbar);
  const auto fine = make_1d(potential, grid.refined(), mass, hbar);
  return richardson(coarse, fine, grid, target_nodes, bracket, options);
}

OracleResult solve_1d(const Potential& potential, const Grid1D& grid, int target_nodes,
                      double mass, double hbar, const SolverOptions& options) {
  const auto coarse = make_1d(potential, grid, mass, hbar);
  const auto fine = make_1d(potential, grid.refined(), mass, hbar);
  return richardson(coarse, fine, grid, target_nodes, auto_bracket(coarse, target_nodes),
                    options);
}

OracleResult solve_radial(const langer::RadialProblem& problem, const Grid1D& grid,
                          int target_nodes, Bracket bracket, const SolverOptions& options) {
  const auto coarse = make_radial(problem, grid);
  const auto fine = make_radial(problem, grid.refined());
  return richardson(coarse, fine, grid, target_nodes, bracket, options);
}

OracleResult solve_radial(const langer::RadialProblem& problem, const Grid1D& grid,
                          int target_nodes, const SolverOptions& options) {
  const auto coarse = make_radial(problem, grid);
  const auto fine = make_radial(problem, grid.refined());
  return richardson(coarse, fine, grid, target_nodes, auto_bracket(coarse, target_nodes),
                    options);
}

ScanResult scan_spectrum(const Potential& potential, const Grid1D& grid, double mass,
                         double hbar, Bracket window, int max_states,
                         const SolverOptions& options) {
  const auto coarse = make_1d(potential, grid, mass, hbar);
  const auto fine = make_1d(potential, grid.refined(), mass, hbar);
  return scan(coarse, fine, grid, window, max_states, options);
}

ScanResult scan_spectrum(const langer::RadialProblem& problem, const Grid1D& grid,
                         Bracket window, int max_states, const SolverOptions& options) {
  const auto coarse = make_radial(problem, grid);
  const auto fine = make_radial(problem, grid.refined());
  return scan(coarse, fine, grid, window, max_states, options);
}

int count_below(const Potential& potential, const Grid1D& grid, double mass, double hbar,
                double energy) {
  return make_1d(potential, grid, mass, hbar).count(energy);
}

int count_below(const langer::RadialProblem& problem, const Grid1D& grid, double energy) {
  return make_radial(problem, grid).count(energy);
}

Grid1D auto_grid_1d(const Potential& potential, double energy, double mass, double hbar,
                    int points, double decay) {
  const double k = 2.0 * mass / (hbar * hbar);
  constexpr double kReach = 200.0;
  constexpr double kStep = 1e-2;
  double left = std::numeric_limits<double>::infinity();
  double right = -left;
  for (double x = -kReach; x <= kReach; x += kStep) {
    const double v = potential(x);
    if (std::isfinite(v) && v < energy) {
      left = std::min(left, x);
      right = std::max(right, x);
    }
  }
  if (!(left <= right)) {
    throw DomainError("auto_grid_1d: no classically allowed region at this energy");
  }
  const double step = std::max(1e-4, (right - left) * 1e-3);
  auto extend = [&](double from, double dir) {
    double x = from;
    double action = 0.0;
    while (action < decay && std::abs(x - from) < 1e4) {
      x += dir * step;
      const double excess = potential(x) - energy;
      if (!std::isfinite(excess)) {
        break;
      }
      action += std::sqrt(std::max(0.0, k * excess)) * step;
    }
    return x;
  };
  return {extend(left, -1.0), extend(right, 1.0), points};
}

Grid1D auto_grid_radial(const langer::RadialProblem& problem, double energy, int points,
                        double decay) {
  problem.validate();
  const double k = 2.0 * problem.mass / (problem.hbar * problem.hbar);
  double turn = 0.0;
  for (double r = 1e-8; r < 1e6; r *= 1.01) {
    if (problem.effective_potential(r) < energy) {
      turn = r;
    }
  }
  if (turn == 0.0) {
    throw DomainError("auto_grid_radial: no classically allowed region at this energy");
  }
  const double step = turn * 1e-3;
  double r = turn;
  double action = 0.0;
  while (action < decay && r < 1e6) {
    r += step;
    action += std::sqrt(std::max(0.0, k * (problem.effective_potential(r) - energy))) * step;
  }
  return {0.0, std::max(r, 5.0 * turn), points};
}

}  // namespace morsemap::oracle
