#include "morsemap/langer.hpp"

#include <cmath>
#include <sstream>

#include "morsemap/errors.hpp"

namespace morsemap::langer {

void RadialProblem::validate() const {
  if (dim < 2) {
    throw DomainError("radial problem: dimension must be at least 2");
  }
  if (l < 0) {
    throw DomainError("radial problem: l must be non-negative");
  }
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw DomainError("radial problem: mass and hbar must be positive");
  }
  if (delta != 2 && delta != -1 && delta != 0 && delta != -2) {
    throw DomainError("radial problem: delta must be one of 2, -1, 0, -2");
  }
}

double RadialProblem::potential(double r) const {
  return z * std::pow(r, delta) + hbar * hbar * beta / (2.0 * mass * r * r);
}

double RadialProblem::effective_potential(double r) const {
  const double big_l = l + 0.5 * (dim - 3);
  return potential(r) + big_l * (big_l + 1.0) * hbar * hbar / (2.0 * mass * r * r);
}

RadialProblem oscillator_problem(int dim, int l, double beta, double omega,
                                 double mass, double hbar) {
  return {dim, l, beta, 2, 0.5 * mass * omega * omega, mass, hbar};
}

RadialProblem coulomb_problem(int dim, int l, double beta, double z, double mass,
                              double hbar) {
  return {dim, l, beta, -1, z, mass, hbar};
}

double critical_beta(int dim) {
  const double d = dim - 2.0;
  return -d * d / 4.0;
}

AngularFactor angular_factor(int dim, int l, double beta) {
  if (dim < 2) {
    throw DomainError("angular_factor: dimension must be at least 2");
  }
  if (l < 0) {
    throw DomainError("angular_factor: l must be non-negative");
  }
  AngularFactor af;
  af.l_plus = l + 0.5 * (dim - 3);
  af.l_minus = -l - 0.5 * (dim - 1);
  const double shifted = af.l_plus + 0.5;
  const double s_sq = beta + shifted * shifted;
  if (!(s_sq > 0.0)) {
    std::ostringstream msg;
    msg << "coupling at or below critical value -(D-2)^2/4: beta + (L+1/2)^2 = "
        << s_sq << " <= 0 (D=" << dim << ", l=" << l << ", beta=" << beta << ")";
    throw CriticalCouplingError(msg.str());
  }
  af.s = std::sqrt(s_sq);
  return af;
}

double origin_exponent(const RadialProblem& problem) {
  return 0.5 + angular_factor(problem.dim, problem.l, problem.beta).s;
}

MorseImage to_morse(const RadialProblem& problem, double energy) {
  problem.validate();
  MorseImage image;
  switch (problem.delta) {
    case 2:
      image.lambda = 0.5;
      image.v1 = -energy / 4.0;
      image.v2 = problem.z / 4.0;
      break;
    case -1:
      image.lambda = 1.0;
      image.v1 = problem.z;
      image.v2 = -energy;
      break;
    default: {
      std::ostringstream msg;
      msg << "delta = " << problem.delta
          << " is a pure inverse-square potential: its Morse image has V1 = 0 or V2 = 0,"
             " so there is no bound-state solution";
      throw UnsupportedDeltaError(msg.str());
    }
  }
  return image;
}

double energy_via_morse(const RadialProblem& problem, int n) {
  if (n < 0) {
    throw DomainError("energy_via_morse: n must be non-negative");
  }
  const auto af = angular_factor(problem.dim, problem.l, problem.beta);
  // The image's quantization n + s + 1/2 = rhs(eps), with s = lambda S fixed
  // by the transformed energy -(hbar lambda alpha S)^2 / (2m).
  if (problem.delta == 2) {
    if (!(problem.z > 0.0)) {
      throw DomainError("oscillator needs omega^2 > 0 for bound states");
    }
    const auto unit = to_morse(problem, 1.0);
    const double target = n + 0.5 + unit.lambda * af.s;
    // rhs is linear in the trial energy for this family.
    return target / morse::quantization_rhs(unit.params(problem.mass, problem.hbar));
  }
  if (problem.delta == -1) {
    if (!(problem.z < 0.0)) {
      throw DomainError("Coulomb problem needs Z < 0 for bound states");
    }
    const auto unit = to_morse(problem, -1.0);
    const double target = n + 0.5 + unit.lambda * af.s;
    // rhs scales as |eps|^(-1/2) for this family.
    const double ratio = morse::quantization_rhs(unit.params(problem.mass, problem.hbar)) / target;
    return -ratio * ratio;
  }
  to_morse(problem, 0.0);  // throws UnsupportedDeltaError
  return 0.0;
}

}  // namespace morsemap::langer
