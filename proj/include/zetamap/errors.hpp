#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetamap {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested too close to the pole of zeta at s = 1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// arg zeta requested at a point where |zeta| is numerically zero, so the
// argument carries no usable information.
class IllConditionedArgError : public std::runtime_error {
 public:
  IllConditionedArgError(double t, double modulus);
  double t() const noexcept { return t_; }
  double modulus() const noexcept { return modulus_; }

 private:
  double t_;
  double modulus_;
};

// The damped map left the W0 branch domain. Carries the offending step;
// iterate() is -1 when the failure happened outside iterate_map.
class MapDomainError : public std::runtime_error {
 public:
  MapDomainError(std::int64_t n, double t_prev, double delta, int iterate);
  std::int64_t n() const noexcept { return n_; }
  double t_prev() const noexcept { return t_prev_; }
  double delta() const noexcept { return delta_; }
  int iterate() const noexcept { return iterate_; }

 private:
  std::int64_t n_;
  double t_prev_;
  double delta_;
  int iterate_;
};

// Malformed zero-table file. line() is 1-based; 0 for whole-file conditions
// such as an empty table.
class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::string path, int line, const std::string& what);
  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

// first_bifurcation_delta scanned its whole range without the fixed point
// losing stability.
class BifurcationNotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetamap
