#pragma once

#include <stdexcept>
#include <string>

namespace antipode {

/// Malformed input: bad text formats, wrong dimensions, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (dependent basis, indefinite Gram, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No antipodal set exists within the requested cap.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The enumeration produced more vectors than its configured cap.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antipode
