#pragma once

#include <stdexcept>

namespace roughlat {

/// Base class of all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown labels, duplicate elements, parse failures.
struct input_error : error {
  using error::error;
};

/// A universe or lattice exceeds a configured size cap.
struct capacity_error : error {
  using error::error;
};

/// An operation was invoked outside its stated hypothesis.
struct precondition_error : error {
  using error::error;
};

/// Two computations that must agree did not. This never indicates bad
/// input; it indicates a bug in the library itself.
struct defect_error : error {
  using error::error;
};

}  // namespace roughlat
