#pragma once

#include <stdexcept>
#include <string>

namespace qhe {

/// Physical or numerical parameter outside its allowed domain.
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Composed cycle map is (numerically) the identity; no unique steady state.
struct DegenerateCycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form routine called for a configuration outside its regime.
struct RegimeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Internal probability bookkeeping drifted further than rounding allows.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Counting-field exponent budget exceeded.
struct CountingFieldRange : std::range_error {
  using std::range_error::range_error;
};

struct NonPrimitiveMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimit : std::length_error {
  using std::length_error::length_error;
};

/// Division by a vanishing heat flow.
struct DivisionGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BisectionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhe
