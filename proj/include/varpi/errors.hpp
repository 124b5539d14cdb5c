#pragma once

#include <stdexcept>
#include <string>

namespace varpi {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rank or digit outside its admissible range.
class range_error : public error {
 public:
  using error::error;
};

/// An order n outside the domain of an operation, or two operands of different order.
class order_error : public error {
 public:
  using error::error;
};

/// A value that breaks a type invariant (duplicate symbols, digit out of radix, ...).
class invariant_error : public error {
 public:
  using error::error;
};

/// An orbit level k outside 0..n-2.
class level_error : public error {
 public:
  using error::error;
};

/// Asked for the successor of the last rank.
class no_successor_error : public error {
 public:
  using error::error;
};

/// A request that would materialize more than the configured cap.
class resource_error : public error {
 public:
  using error::error;
};

/// The graph does not admit the requested structure.
class structural_error : public error {
 public:
  using error::error;
};

/// Unknown output format or malformed textual input.
class format_error : public error {
 public:
  using error::error;
};

}  // namespace varpi
