#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetamap/zeros.hpp"

namespace zetamap {

// Ordered reference zeros ingested from a plain-text table. values are
// strictly increasing and 1-indexed by position; first_index is the zero
// index of values[0] (1 unless the file's index column says otherwise).
struct ZeroTable {
  std::vector<double> values;
  std::string source_label;
  std::optional<double> precision_hint;
  std::int64_t first_index = 1;
};

// Parses lines of either "t" or "n t" whitespace- or comma-separated
// decimals. Blank lines and lines starting with '#' are skipped, as is a
// single leading non-numeric header line. Indexed files must carry
// consecutive ascending indices; values must come out strictly increasing.
ZeroTable load_zero_table(const std::filesystem::path& path);

struct ComparisonStats {
  std::int64_t count = 0;
  double max_abs_diff = 0.0;
  double rms_diff = 0.0;
  std::vector<double> per_n_diff;  // computed - reference, in input order
};

// Diffs each computed zero against the reference entry with the same index.
// Throws DomainError when an index falls outside the reference range.
ComparisonStats compare_zeros(std::span<const ZeroEstimate> computed,
                              const ZeroTable& reference);

}  // namespace zetamap
