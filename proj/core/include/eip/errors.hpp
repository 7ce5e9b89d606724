#pragma once

#include <stdexcept>
#include <string>

namespace eip {

// Bad user input: malformed files, dimension mismatches, preconditions.
// CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeds an enforced resource budget. CLI exit code 2.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; signals a bug, not bad input.
// CLI exit code 3.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void invariant(bool cond, const char* msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace eip
