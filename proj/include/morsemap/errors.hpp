#pragma once

#include <stdexcept>
#include <string>

namespace morsemap {

/// Base class for failures that come from the physics of the problem
/// (no well, coupling past the fall-to-centre limit, ...), as opposed to
/// programming or usage mistakes.
class PhysicsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public PhysicsError {
public:
  using PhysicsError::PhysicsError;
};

/// beta + (L + 1/2)^2 <= 0: the particle falls to the centre.
class CriticalCouplingError : public PhysicsError {
public:
  using PhysicsError::PhysicsError;
};

/// Exponent of the r^delta term has no Morse image.
class UnsupportedDeltaError : public PhysicsError {
public:
  using PhysicsError::PhysicsError;
};

/// Node counts at the bracket ends do not straddle the requested state.
class BracketError : public PhysicsError {
public:
  using PhysicsError::PhysicsError;
};

class ConvergenceError : public PhysicsError {
public:
  using PhysicsError::PhysicsError;
};

}  // namespace morsemap
