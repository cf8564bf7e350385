#ifndef FINLOC_ERRORS_HPP
#define FINLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finloc {

// Two roots: InputError means the caller handed us something malformed
// (CLI exit code 1); IntegrityError means a mathematical invariant that must
// hold for every valid input did not (CLI exit code 2).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidElement : public InputError {
public:
  using InputError::InputError;
};

class NotALattice : public InputError {
public:
  using InputError::InputError;
};

class NotAntisymmetric : public InputError {
public:
  using InputError::InputError;
};

class NotDistributive : public InputError {
public:
  NotDistributive(std::size_t a, std::size_t b, std::size_t c,
                  const std::string &what)
      : InputError(what), a(a), b(b), c(c) {}
  // Witness: a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c).
  std::size_t a, b, c;
};

class NotATopology : public InputError {
public:
  using InputError::InputError;
};

class CyclicPoset : public InputError {
public:
  using InputError::InputError;
};

class TooLarge : public InputError {
public:
  using InputError::InputError;
};

class NotASublocale : public InputError {
public:
  using InputError::InputError;
};

class NotPrime : public InputError {
public:
  using InputError::InputError;
};

class NotDense : public InputError {
public:
  using InputError::InputError;
};

class EmptyList : public InputError {
public:
  using InputError::InputError;
};

/// Two sublocales (or a sublocale and a frame) from different Frame
/// instances were combined.
class FrameMismatch : public InputError {
public:
  using InputError::InputError;
};

class MalformedJson : public InputError {
public:
  using InputError::InputError;
};

class UnknownKind : public InputError {
public:
  using InputError::InputError;
};

/// An enumeration oracle could not find the unique extremum a theorem
/// promises.
class OracleFailure : public IntegrityError {
public:
  using IntegrityError::IntegrityError;
};

} // namespace finloc

#endif
