#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symqaoa {

/// Malformed textual input (edge lists, angle lists).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured resource bound (cone width,
/// statevector size, brute-force domain). Carries the offending qubit
/// subset when one exists.
class ResourceGuardError : public std::runtime_error {
 public:
  ResourceGuardError(const std::string& what, std::vector<int> support,
                     int width, int limit)
      : std::runtime_error(what),
        support_(std::move(support)),
        width_(width),
        limit_(limit) {}

  const std::vector<int>& support() const { return support_; }
  int width() const { return width_; }
  int limit() const { return limit_; }

 private:
  std::vector<int> support_;
  int width_ = 0;
  int limit_ = 0;
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// All correlations vanished, so no variable can be meaningfully eliminated.
class DegenerateCorrelationsError : public std::runtime_error {
 public:
  explicit DegenerateCorrelationsError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace symqaoa
