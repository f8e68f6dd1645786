#pragma once

#include <stdexcept>
#include <string>

namespace repscheme {

/// Input could not be parsed. Carries 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(std::string msg, int line_, int column_)
      : std::runtime_error(std::move(msg)), line(line_), column(column_) {}
};

/// A mathematical precondition or invariant failed (relator violation,
/// isotropic axis, inconsistent identification, ...). `object` names the
/// offending relator/edge/point so error paths never degrade silently.
struct ValidationError : std::runtime_error {
  std::string object;
  ValidationError(std::string msg, std::string object_)
      : std::runtime_error(std::move(msg)), object(std::move(object_)) {}
};

}  // namespace repscheme
