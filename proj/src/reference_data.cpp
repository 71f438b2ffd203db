#include "zetamap/reference_data.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zetamap/errors.hpp"

namespace zetamap {
namespace {

bool parse_fields(const std::string& line, double* a, double* b, int* n_fields) {
  std::string cleaned = line;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string tok1, tok2, extra;
  in >> tok1;
  in >> tok2;
  in >> extra;
  if (!extra.empty()) return false;
  char* end = nullptr;
  *a = std::strtod(tok1.c_str(), &end);
  if (end != tok1.c_str() + tok1.size() || tok1.empty()) return false;
  if (tok2.empty()) {
    *n_fields = 1;
    return true;
  }
  *b = std::strtod(tok2.c_str(), &end);
  if (end != tok2.c_str() + tok2.size()) return false;
  *n_fields = 2;
  return true;
}

}  // namespace

ZeroTable load_zero_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw TableParseError(path.string(), 0, "cannot open file");
  }

  ZeroTable table;
  table.source_label = path.filename().string();

  std::string line;
  int line_no = 0;
  int columns = 0;  // 0 until the first data line fixes the format
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    double a = 0.0;
    double b = 0.0;
    int n_fields = 0;
    if (!parse_fields(line, &a, &b, &n_fields)) {
      if (header_allowed) {  // tolerate one leading header line
        header_allowed = false;
        continue;
      }
      throw TableParseError(path.string(), line_no, "unparsable line");
    }
    header_allowed = false;

    if (columns == 0) {
      columns = n_fields;
    } else if (columns != n_fields) {
      throw TableParseError(path.string(), line_no, "inconsistent column count");
    }

    double value = a;
    if (columns == 2) {
      if (a != std::floor(a) || a < 1.0) {
        throw TableParseError(path.string(), line_no, "index column must be a positive integer");
      }
      const auto index = static_cast<std::int64_t>(a);
      if (table.values.empty()) {
        table.first_index = index;
      } else if (index != table.first_index + static_cast<std::int64_t>(table.values.size())) {
        throw TableParseError(path.string(), line_no, "index column must be consecutive");
      }
      value = b;
    }
    if (!table.values.empty() && value <= table.values.back()) {
      throw TableParseError(path.string(), line_no, "values must be strictly increasing");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw TableParseError(path.string(), line_no, "values must be positive and finite");
    }
    table.values.push_back(value);
  }
  if (table.values.empty()) {
    throw TableParseError(path.string(), 0, "no zero values found");
  }
  return table;
}

ComparisonStats compare_zeros(std::span<const ZeroEstimate> computed,
                              const ZeroTable& reference) {
  ComparisonStats stats;
  stats.per_n_diff.reserve(computed.size());
  double sum_sq = 0.0;
  for (const ZeroEstimate& z : computed) {
    const std::int64_t offset = z.n - reference.first_index;
    if (offset < 0 || offset >= static_cast<std::int64_t>(reference.values.size())) {
      throw DomainError("compare_zeros: computed index outside the reference range");
    }
    const double diff = z.t - reference.values[static_cast<std::size_t>(offset)];
    stats.per_n_diff.push_back(diff);
    stats.max_abs_diff = std::max(stats.max_abs_diff, std::abs(diff));
    sum_sq += diff * diff;
  }
  stats.count = static_cast<std::int64_t>(stats.per_n_diff.size());
  stats.rms_diff = stats.count > 0 ? std::sqrt(sum_sq / static_cast<double>(stats.count)) : 0.0;
  return stats;
}

}  // namespace zetamap
