#include "zetamap/errors.hpp"

#include <cstdio>

namespace zetamap {
namespace {

std::string ill_conditioned_msg(double t, double modulus) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "arg zeta ill-conditioned at t = %.17g: |zeta| = %.3g sits on a zero", t,
                modulus);
  return buf;
}

std::string map_domain_msg(std::int64_t n, double t_prev, double delta, int iterate) {
  char buf[224];
  if (iterate >= 0) {
    std::snprintf(buf, sizeof(buf),
                  "map step left the W0 branch domain at iterate %d: n = %lld, "
                  "t_prev = %.17g, delta = %.17g",
                  iterate, static_cast<long long>(n), t_prev, delta);
  } else {
    std::snprintf(buf, sizeof(buf),
                  "map step left the W0 branch domain: n = %lld, t_prev = %.17g, "
                  "delta = %.17g",
                  static_cast<long long>(n), t_prev, delta);
  }
  return buf;
}

std::string parse_msg(const std::string& path, int line, const std::string& what) {
  char buf[512];
  if (line > 0) {
    std::snprintf(buf, sizeof(buf), "%s:%d: %s", path.c_str(), line, what.c_str());
  } else {
    std::snprintf(buf, sizeof(buf), "%s: %s", path.c_str(), what.c_str());
  }
  return buf;
}

}  // namespace

IllConditionedArgError::IllConditionedArgError(double t, double modulus)
    : std::runtime_error(ill_conditioned_msg(t, modulus)), t_(t), modulus_(modulus) {}

MapDomainError::MapDomainError(std::int64_t n, double t_prev, double delta, int iterate)
    : std::runtime_error(map_domain_msg(n, t_prev, delta, iterate)),
      n_(n),
      t_prev_(t_prev),
      delta_(delta),
      iterate_(iterate) {}

TableParseError::TableParseError(std::string path, int line, const std::string& what)
    : std::runtime_error(parse_msg(path, line, what)), path_(std::move(path)), line_(line) {}

}  // namespace zetamap
