#pragma once
#include <stdexcept>
#include <string>

namespace qbax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unknown generator, mismatched algebra, malformed presentation.
struct ConfigError : Error {
  using Error::Error;
};

/// A map was applied to a generator it does not cover.
struct PartialMapError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

/// Successive quadrature refinements disagree.
struct AccuracyError : Error {
  using Error::Error;
};

struct SizeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qbax
