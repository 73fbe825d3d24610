#include "morsemap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morsemap/errors.hpp"
#include "morsemap/langer.hpp"
#include "morsemap/morse.hpp"
#include "morsemap/oracle.hpp"
#include "morsemap/potentials.hpp"

namespace morsemap::cli {

namespace {

using nlohmann::json;

struct HelpRequested {
  std::string text;
};

// One row of any report: an analytic or oracle bound state.
struct Record {
  std::string family;
  int dim = 1;
  int n = 0;
  std::optional<int> l;
  std::optional<double> beta;
  double s = 0.0;
  double energy = 0.0;
  std::string provenance = "analytic";
};

json to_json(const Record& rec, const RunConfig& cfg) {
  json j;
  j["family"] = rec.family;
  j["dim"] = rec.dim;
  j["n"] = rec.n;
  j["l"] = rec.l ? json(*rec.l) : json(nullptr);
  j["beta"] = rec.beta ? json(*rec.beta) : json(nullptr);
  j["S"] = rec.s;
  j["energy"] = rec.energy;
  j["units"] = {{"hbar", cfg.hbar}, {"mass", cfg.mass}};
  j["provenance"] = rec.provenance;
  return j;
}

std::string csv_optional(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_optional(const std::optional<double>& v) { return v ? csv_number(*v) : ""; }

morse::MorseParams morse_params(const RunConfig& cfg) {
  morse::MorseParams p{*cfg.v1, *cfg.v2, cfg.alpha, cfg.mass, cfg.hbar};
  p.validate();
  if (!p.has_well()) {
    throw DomainError("Morse potential has no well: bound states need V1 < 0 and V2 > 0");
  }
  return p;
}

langer::RadialProblem radial_problem(const RunConfig& cfg, int l) {
  if (cfg.system == System::sho) {
    return langer::oscillator_problem(cfg.dim, l, cfg.beta, *cfg.omega, cfg.mass, cfg.hbar);
  }
  return langer::coulomb_problem(cfg.dim, l, cfg.beta, *cfg.z, cfg.mass, cfg.hbar);
}

std::vector<int> l_values(const RunConfig& cfg) {
  std::vector<int> ls;
  const int hi = cfg.l_max ? *cfg.l_max : cfg.l;
  for (int l = cfg.l_max ? 0 : cfg.l; l <= hi; ++l) {
    ls.push_back(l);
  }
  return ls;
}

// Analytic states of the selected system, sorted by (l, n).
std::vector<Record> analytic_states(const RunConfig& cfg) {
  std::vector<Record> out;
  if (cfg.system == System::morse) {
    for (const auto& st : morse::spectrum(morse_params(cfg))) {
      if (cfg.n && st.n != *cfg.n) {
        continue;
      }
      out.push_back({"morse", 1, st.n, std::nullopt, std::nullopt, st.s, st.energy});
    }
    if (cfg.n && out.empty()) {
      throw DomainError("Morse potential has no bound state n = " + std::to_string(*cfg.n));
    }
    return out;
  }
  const int n_max = cfg.n ? *cfg.n : cfg.n_max;
  for (int l : l_values(cfg)) {
    const auto states =
        cfg.system == System::sho
            ? potentials::sho_spectrum(cfg.dim, l, cfg.beta, *cfg.omega, cfg.mass, cfg.hbar, n_max)
            : potentials::coulomb_spectrum(cfg.dim, l, cfg.beta, *cfg.z, cfg.mass, cfg.hbar, n_max);
    for (const auto& st : states) {
      if (cfg.n && st.n != *cfg.n) {
        continue;
      }
      out.push_back({std::string(potentials::to_string(st.family)), st.dim, st.n, st.l,
                     st.beta, st.s, st.energy});
    }
  }
  return out;
}

void write_states(const RunConfig& cfg, const std::vector<Record>& states, std::ostream& out) {
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto& rec : states) {
      arr.push_back(to_json(rec, cfg));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "family,dim,n,l,beta,S,energy,hbar,mass,provenance\n";
  for (const auto& rec : states) {
    out << rec.family << ',' << rec.dim << ',' << rec.n << ',' << csv_optional(rec.l) << ','
        << csv_optional(rec.beta) << ',' << csv_number(rec.s) << ',' << csv_number(rec.energy)
        << ',' << csv_number(cfg.hbar) << ',' << csv_number(cfg.mass) << ',' << rec.provenance
        << '\n';
  }
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  write_states(cfg, analytic_states(cfg), out);
  return kExitOk;
}

int run_wavefunction(const RunConfig& cfg, std::ostream& out) {
  const int n = cfg.n.value_or(0);
  std::function<double(double)> wave;
  double from = 0.0;
  double to = 0.0;
  std::string column = "r";
  if (cfg.system == System::morse) {
    const auto params = morse_params(cfg);
    const auto states = morse::spectrum(params);
    if (n >= static_cast<int>(states.size())) {
      throw DomainError("Morse potential has no bound state n = " + std::to_string(n));
    }
    const auto st = states[n];
    const auto grid = oracle::auto_grid_1d([&](double x) { return params.potential(x); },
                                           st.energy, cfg.mass, cfg.hbar, oracle::kMinGridPoints);
    from = grid.x_min;
    to = grid.x_max;
    column = "x";
    wave = [params, st](double x) { return morse::eigenfunction(params, st, x); };
  } else {
    const auto problem = radial_problem(cfg, cfg.l);
    if (cfg.system == System::sho) {
      const auto st = potentials::sho_spectrum(cfg.dim, cfg.l, cfg.beta, *cfg.omega, cfg.mass,
                                               cfg.hbar, n)[n];
      const double omega = *cfg.omega;
      wave = [=](double r) {
        return potentials::sho_eigenfunction(st, omega, cfg.mass, cfg.hbar, r);
      };
      to = oracle::auto_grid_radial(problem, st.energy, oracle::kMinGridPoints).x_max;
    } else {
      const auto st = potentials::coulomb_spectrum(cfg.dim, cfg.l, cfg.beta, *cfg.z, cfg.mass,
                                                   cfg.hbar, n)[n];
      const double z = *cfg.z;
      wave = [=](double r) {
        return potentials::coulomb_eigenfunction(st, z, cfg.mass, cfg.hbar, r);
      };
      to = oracle::auto_grid_radial(problem, st.energy, oracle::kMinGridPoints).x_max;
    }
  }
  from = cfg.from.value_or(from);
  to = cfg.to.value_or(to);
  if (cfg.system != System::morse && from < 0.0) {
    throw UsageError("wavefunction: radial sampling range must start at r >= 0");
  }
  const std::string value_column = cfg.system == System::morse ? "psi" : "u";
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = from + (to - from) * i / (cfg.samples - 1);
    samples.emplace_back(x, wave(x));
  }
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (auto [x, v] : samples) {
      arr.push_back({{column, x}, {value_column, v}});
    }
    out << arr.dump(2) << '\n';
  } else {
    out << column << ',' << value_column << '\n';
    for (auto [x, v] : samples) {
      out << csv_number(x) << ',' << csv_number(v) << '\n';
    }
  }
  return kExitOk;
}

int run_map(const RunConfig& cfg, std::ostream& out) {
  const auto problem = radial_problem(cfg, cfg.l);
  const auto af = langer::angular_factor(problem.dim, problem.l, problem.beta);
  const int n = cfg.n.value_or(0);
  const double energy = cfg.energy ? *cfg.energy : langer::energy_via_morse(problem, n);
  const auto image = langer::to_morse(problem, energy);
  const auto params = image.params(cfg.mass, cfg.hbar);

  json j;
  j["family"] = cfg.system == System::sho ? "oscillator" : "coulomb";
  j["dim"] = problem.dim;
  j["l"] = problem.l;
  j["beta"] = problem.beta;
  j["energy"] = energy;
  j["L_plus"] = af.l_plus;
  j["L_minus"] = af.l_minus;
  j["S"] = af.s;
  j["origin_exponent"] = langer::origin_exponent(problem);
  j["critical_beta"] = langer::critical_beta(problem.dim);
  j["morse_image"] = {{"lambda", image.lambda}, {"v1", image.v1},     {"v2", image.v2},
                      {"alpha", image.alpha_eff}, {"r0", image.r0}, {"has_well", params.has_well()}};
  json levels = json::array();
  if (params.has_well()) {
    for (const auto& st : morse::spectrum(params)) {
      levels.push_back({{"n", st.n}, {"s", st.s}, {"energy", st.energy}});
    }
  }
  j["morse_spectrum"] = levels;
  j["transformed_energy"] = -std::pow(cfg.hbar * image.lambda * image.alpha_eff * af.s, 2) /
                            (2.0 * cfg.mass);

  if (cfg.format == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    out << "family,dim,l,beta,energy,S,lambda,v1,v2,morse_states\n"
        << j["family"].get<std::string>() << ',' << problem.dim << ',' << problem.l << ','
        << csv_number(problem.beta) << ',' << csv_number(energy) << ',' << csv_number(af.s)
        << ',' << csv_number(image.lambda) << ',' << csv_number(image.v1) << ','
        << csv_number(image.v2) << ',' << levels.size() << '\n';
  }
  return kExitOk;
}

oracle::OracleResult oracle_solve(const RunConfig& cfg, const Record& rec) {
  if (cfg.system == System::morse) {
    const auto params = morse_params(cfg);
    auto potential = [params](double x) { return params.potential(x); };
    const auto grid =
        oracle::auto_grid_1d(potential, rec.energy, cfg.mass, cfg.hbar, cfg.grid_points);
    return oracle::solve_1d(potential, grid, rec.n, cfg.mass, cfg.hbar);
  }
  const auto problem = radial_problem(cfg, *rec.l);
  const auto grid = oracle::auto_grid_radial(problem, rec.energy, cfg.grid_points);
  return oracle::solve_radial(problem, grid, rec.n);
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto states = analytic_states(cfg);
  std::vector<std::future<oracle::OracleResult>> pending;
  pending.reserve(states.size());
  for (const auto& rec : states) {
    pending.push_back(std::async(std::launch::async, oracle_solve, std::cref(cfg), rec));
  }

  bool all_pass = true;
  json comparisons = json::array();
  std::ostringstream csv;
  csv << "family,dim,n,l,beta,S,analytic,oracle,relative_deviation,node_count,"
         "richardson_error_estimate,pass\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& rec = states[i];
    const auto result = pending[i].get();
    const double deviation = std::abs(result.eigenvalue - rec.energy) / std::abs(rec.energy);
    const bool pass = deviation <= cfg.tol && result.node_count == rec.n;
    all_pass = all_pass && pass;

    Record oracle_rec = rec;
    oracle_rec.energy = result.eigenvalue;
    oracle_rec.provenance = "oracle";
    json oj = to_json(oracle_rec, cfg);
    oj["node_count"] = result.node_count;
    oj["richardson_error_estimate"] = result.richardson_error_estimate;
    oj["grid"] = {{"x_min", result.grid.x_min},
                  {"x_max", result.grid.x_max},
                  {"points", result.grid.points}};
    comparisons.push_back({{"analytic", to_json(rec, cfg)},
                           {"oracle", oj},
                           {"relative_deviation", deviation},
                           {"pass", pass}});
    csv << rec.family << ',' << rec.dim << ',' << rec.n << ',' << csv_optional(rec.l) << ','
        << csv_optional(rec.beta) << ',' << csv_number(rec.s) << ',' << csv_number(rec.energy)
        << ',' << csv_number(result.eigenvalue) << ',' << csv_number(deviation) << ','
        << result.node_count << ',' << csv_number(result.richardson_error_estimate) << ','
        << (pass ? "true" : "false") << '\n';
  }

  if (cfg.format == Format::json) {
    json report = {{"tolerance", cfg.tol}, {"passed", all_pass}, {"comparisons", comparisons}};
    out << report.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return all_pass ? kExitOk : kExitPhysics;
}

int run_degeneracy(const RunConfig& cfg, std::ostream& out) {
  if (cfg.levels) {
    const auto levels =
        cfg.system == System::sho
            ? potentials::pure_sho_levels(cfg.dim, *cfg.omega, cfg.mass, cfg.hbar, *cfg.levels)
            : potentials::pure_coulomb_levels(cfg.dim, *cfg.z, cfg.mass, cfg.hbar, *cfg.levels);
    if (cfg.format == Format::json) {
      json arr = json::array();
      for (const auto& lv : levels) {
        arr.push_back({{"N", lv.big_n}, {"energy", lv.energy}, {"degeneracy", lv.degeneracy}});
      }
      out << arr.dump(2) << '\n';
    } else {
      out << "N,energy,degeneracy\n";
      for (const auto& lv : levels) {
        out << lv.big_n << ',' << csv_number(lv.energy) << ',' << lv.degeneracy << '\n';
      }
    }
    return kExitOk;
  }
  const int l_max = cfg.l_max.value_or(cfg.l);
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (int l = 0; l <= l_max; ++l) {
      arr.push_back({{"dim", cfg.dim}, {"l", l}, {"count", potentials::degeneracy(cfg.dim, l).count}});
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "l,count\n";
    for (int l = 0; l <= l_max; ++l) {
      out << l << ',' << potentials::degeneracy(cfg.dim, l).count << '\n';
    }
  }
  return kExitOk;
}

template <typename T>
void apply_env(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return;
  }
  std::istringstream is(raw);
  T value{};
  if (!(is >> value) || !is.eof()) {
    throw UsageError(std::string("invalid value for environment variable ") + name);
  }
  target = value;
}

}  // namespace

RunConfig parse(const std::vector<std::string>& args) {
  RunConfig cfg;
  apply_env(kTolEnv, cfg.tol);
  apply_env(kGridPointsEnv, cfg.grid_points);

  CLI::App app{"Closed-form bound states of the generalized Morse potential and its "
               "D-dimensional singular oscillator / Coulomb images"};
  app.require_subcommand(1);

  const std::map<std::string, System> systems{
      {"morse", System::morse}, {"sho", System::sho}, {"coulomb", System::coulomb}};
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

  struct Sub {
    CLI::App* app;
    Command command;
  };
  std::vector<Sub> subs = {
      {app.add_subcommand("spectrum", "analytic bound-state energies"), Command::spectrum},
      {app.add_subcommand("wavefunction", "sample a normalized eigenfunction"),
       Command::wavefunction},
      {app.add_subcommand("map", "inspect the Langer image of a radial problem"), Command::map},
      {app.add_subcommand("verify", "compare analytic energies with the Numerov oracle"),
       Command::verify},
      {app.add_subcommand("degeneracy", "hyperspherical degeneracy tables"), Command::degeneracy},
  };
  for (auto& sub : subs) {
    CLI::App* s = sub.app;
    s->add_option("--system", cfg.system, "morse | sho | coulomb")
        ->transform(CLI::CheckedTransformer(systems, CLI::ignore_case));
    s->add_option("--format", cfg.format, "json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    s->add_option("--v1", cfg.v1, "Morse V1 (coefficient of e^-alpha x)");
    s->add_option("--v2", cfg.v2, "Morse V2 (coefficient of e^-2 alpha x)");
    s->add_option("--alpha", cfg.alpha, "Morse inverse length");
    s->add_option("--dim", cfg.dim, "spatial dimension D");
    s->add_option("--l", cfg.l, "angular quantum number");
    s->add_option("--lmax", cfg.l_max, "run l = 0..lmax");
    s->add_option("--beta", cfg.beta, "inverse-square coupling");
    s->add_option("--omega", cfg.omega, "oscillator frequency");
    s->add_option("--z", cfg.z, "Coulomb coupling (negative for attraction)");
    s->add_option("--mass", cfg.mass, "particle mass");
    s->add_option("--hbar", cfg.hbar, "reduced Planck constant");
    s->add_option("--n", cfg.n, "single radial quantum number");
    s->add_option("--nmax", cfg.n_max, "highest n for the infinite towers");
    s->add_option("--levels", cfg.levels, "pure-case level table up to N");
    s->add_option("--energy", cfg.energy, "trial energy for map");
    s->add_option("--from", cfg.from, "sampling range start");
    s->add_option("--to", cfg.to, "sampling range end");
    s->add_option("--samples", cfg.samples, "number of samples");
    s->add_option("--tol", cfg.tol, "relative tolerance for verify");
    s->add_option("--grid-points", cfg.grid_points, "oracle grid points");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& sub : subs) {
    if (sub.app->parsed()) {
      cfg.command = sub.command;
    }
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) {
      throw UsageError(what);
    }
  };
  need(cfg.dim >= 2, "--dim must be at least 2");
  need(cfg.l >= 0, "--l must be non-negative");
  need(!cfg.l_max || *cfg.l_max >= 0, "--lmax must be non-negative");
  need(!cfg.n || *cfg.n >= 0, "--n must be non-negative");
  need(cfg.n_max >= 0, "--nmax must be non-negative");
  need(cfg.samples >= 2, "--samples must be at least 2");
  need(cfg.tol > 0.0, "--tol must be positive");
  need(cfg.grid_points >= oracle::kMinGridPoints, "--grid-points must be at least 1000");
  need(cfg.mass > 0.0 && cfg.hbar > 0.0, "--mass and --hbar must be positive");

  const bool needs_system = cfg.command != Command::degeneracy || cfg.levels.has_value();
  if (!needs_system) {
    return;
  }
  if (cfg.command == Command::map || cfg.command == Command::degeneracy) {
    need(cfg.system != System::morse, "this command needs --system sho or coulomb");
  }
  switch (cfg.system) {
    case System::morse:
      need(cfg.v1.has_value() && cfg.v2.has_value(), "--system morse requires --v1 and --v2");
      break;
    case System::sho:
      need(cfg.omega.has_value(), "--system sho requires --omega");
      break;
    case System::coulomb:
      need(cfg.z.has_value(), "--system coulomb requires --z");
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::spectrum:
      return run_spectrum(cfg, out);
    case Command::wavefunction:
      return run_wavefunction(cfg, out);
    case Command::map:
      return run_map(cfg, out);
    case Command::verify:
      return run_verify(cfg, out);
    case Command::degeneracy:
      return run_degeneracy(cfg, out);
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse(args);
    validate(cfg);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  try {
    std::ostringstream buffer;
    const int status = run(cfg, buffer);
    out << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PhysicsError& e) {
    err << "physics error: " << e.what() << '\n';
    return kExitPhysics;
  }
}

}  // namespace morsemap::cli
