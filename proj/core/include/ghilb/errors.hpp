#pragma once

#include <stdexcept>
#include <string>

namespace ghilb {

// Bad user input (group spec syntax, determinant condition, r = 1 analysis).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A verified invariant failed. This always indicates a bug or an input class
// the pipeline does not support; it is never swallowed.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

class TilingError : public ConsistencyError {
 public:
  explicit TilingError(const std::string& what) : ConsistencyError(what) {}
};

}  // namespace ghilb
