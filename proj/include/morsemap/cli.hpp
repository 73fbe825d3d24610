#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace morsemap::cli {

enum class Command { spectrum, wavefunction, map, verify, degeneracy };
enum class System { morse, sho, coulomb };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitPhysics = 1;
inline constexpr int kExitUsage = 2;

/// Environment overrides for the verify defaults.
inline constexpr const char* kTolEnv = "MORSEMAP_TOL";
inline constexpr const char* kGridPointsEnv = "MORSEMAP_GRID_POINTS";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::spectrum;
  System system = System::morse;
  Format format = Format::json;

  // Morse
  std::optional<double> v1;
  std::optional<double> v2;
  double alpha = 1.0;

  // Radial families
  int dim = 3;
  int l = 0;
  std::optional<int> l_max;
  double beta = 0.0;
  std::optional<double> omega;
  std::optional<double> z;

  double mass = 1.0;
  double hbar = 1.0;

  std::optional<int> n;  ///< single state; otherwise 0..n_max
  int n_max = 4;
  std::optional<int> levels;  ///< degeneracy: pure-case level table up to N

  // map
  std::optional<double> energy;

  // wavefunction sampling
  std::optional<double> from;
  std::optional<double> to;
  int samples = 201;

  // verify
  double tol = 1e-6;
  int grid_points = 20000;
};

/// Parses command-line arguments (argv[0] is the program name). Reads the
/// environment overrides before flags so flags win. Throws UsageError.
RunConfig parse(const std::vector<std::string>& args);

/// Checks flag combinations; throws UsageError.
void validate(const RunConfig& config);

/// Runs a validated config and writes the report to `out`.
/// Returns kExitOk, or kExitPhysics when `verify` finds a state outside the
/// tolerance. Physics failures propagate as PhysicsError.
int run(const RunConfig& config, std::ostream& out);

/// parse + validate + run with the 0/1/2 exit-code contract; diagnostics
/// go to `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morsemap::cli
