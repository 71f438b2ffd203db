#pragma once

#include <cstdint>
#include <vector>

namespace zetamap {

// First `count` zeros of zeta on the critical line, found independently of
// the damped map: Hardy Z sign-change scan with bisection refinement. Index
// completeness is validated between consecutive zeros by a parity check of
// the counting function against theta and the principal argument, with
// automatic rescans of any suspicious gap. Throws std::runtime_error if the
// scan cannot be validated.
std::vector<double> find_zeros(std::int64_t count);

}  // namespace zetamap
