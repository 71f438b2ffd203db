#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "zetamap/errors.hpp"
#include "zetamap/reference_data.hpp"
#include "zetamap/zeros.hpp"

using namespace zetamap;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("bare and indexed formats load identically") {
  const auto bare = write_temp("zm_bare.txt", "14.134725142\n21.022039639\n");
  const ZeroTable a = load_zero_table(bare);
  REQUIRE(a.values.size() == 2);
  CHECK(a.values[0] == 14.134725142);
  CHECK(a.values[1] == 21.022039639);
  CHECK(a.first_index == 1);

  const auto indexed = write_temp("zm_indexed.txt", "1 14.134725142\n2 21.022039639\n");
  const ZeroTable b = load_zero_table(indexed);
  CHECK(b.values == a.values);

  const auto offset = write_temp("zm_offset.txt", "5 100.0\n6 101.5\n");
  const ZeroTable c = load_zero_table(offset);
  CHECK(c.first_index == 5);
}

TEST_CASE("comments, blank lines, headers and commas are tolerated") {
  const auto path = write_temp("zm_noise.txt",
                               "# a comment\n"
                               "\n"
                               "n,t_hat\n"
                               "1,14.134725142\n"
                               "2,21.022039639\n");
  const ZeroTable table = load_zero_table(path);
  REQUIRE(table.values.size() == 2);
  CHECK(table.values[0] == 14.134725142);
}

TEST_CASE("malformed tables report the offending line") {
  const auto decreasing = write_temp("zm_dec.txt", "21.0\n14.1\n");
  try {
    load_zero_table(decreasing);
    FAIL("expected TableParseError");
  } catch (const TableParseError& e) {
    CHECK(e.line() == 2);
  }

  const auto garbage = write_temp("zm_garbage.txt", "14.1\nnot a number\n");
  try {
    load_zero_table(garbage);
    FAIL("expected TableParseError");
  } catch (const TableParseError& e) {
    CHECK(e.line() == 2);
  }

  const auto gap = write_temp("zm_gap.txt", "1 14.1\n3 25.0\n");
  CHECK_THROWS_AS(load_zero_table(gap), TableParseError);

  const auto mixed = write_temp("zm_mixed.txt", "14.1\n2 21.0\n");
  CHECK_THROWS_AS(load_zero_table(mixed), TableParseError);

  const auto empty = write_temp("zm_empty.txt", "# nothing here\n");
  CHECK_THROWS_AS(load_zero_table(empty), TableParseError);

  CHECK_THROWS_AS(load_zero_table("/nonexistent/zeros.txt"), TableParseError);
}

TEST_CASE("compare_zeros aggregates per-index differences") {
  ZeroTable reference;
  reference.values = {10.0, 20.0, 30.0, 40.0};

  std::vector<ZeroEstimate> computed;
  for (int i = 0; i < 4; ++i) {
    ZeroEstimate z;
    z.n = i + 1;
    z.t = reference.values[static_cast<std::size_t>(i)];
    computed.push_back(z);
  }
  const ComparisonStats same = compare_zeros(computed, reference);
  CHECK(same.max_abs_diff == 0.0);
  CHECK(same.rms_diff == 0.0);
  CHECK(same.count == 4);

  computed[1].t += 0.25;
  computed[3].t -= 0.5;
  const ComparisonStats stats = compare_zeros(computed, reference);
  CHECK(stats.max_abs_diff == 0.5);
  CHECK(stats.per_n_diff[1] == 0.25);
  CHECK(stats.per_n_diff[3] == -0.5);
  CHECK(stats.rms_diff == doctest::Approx(std::sqrt((0.0625 + 0.25) / 4.0)));

  ZeroEstimate outside;
  outside.n = 5;
  outside.t = 50.0;
  computed.push_back(outside);
  CHECK_THROWS_AS(compare_zeros(computed, reference), DomainError);
}

TEST_CASE("compare_zeros is antisymmetric under swapping the roles") {
  ZeroTable left;
  left.values = {14.13, 21.02, 25.01};
  ZeroTable right;
  right.values = {14.10, 21.20, 24.99};

  auto as_estimates = [](const ZeroTable& table) {
    std::vector<ZeroEstimate> out;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      ZeroEstimate z;
      z.n = static_cast<std::int64_t>(i) + 1;
      z.t = table.values[i];
      z.method = ZeroMethod::reference_table;
      out.push_back(z);
    }
    return out;
  };

  const ComparisonStats ab = compare_zeros(as_estimates(left), right);
  const ComparisonStats ba = compare_zeros(as_estimates(right), left);
  REQUIRE(ab.per_n_diff.size() == ba.per_n_diff.size());
  for (std::size_t i = 0; i < ab.per_n_diff.size(); ++i) {
    CHECK(ab.per_n_diff[i] == -ba.per_n_diff[i]);
  }
  CHECK(ab.max_abs_diff == ba.max_abs_diff);
}

TEST_CASE("respects index offsets when comparing sub-ranges") {
  ZeroTable reference;
  reference.values = {10.0, 20.0, 30.0, 40.0, 50.0};

  std::vector<ZeroEstimate> computed;
  ZeroEstimate z;
  z.n = 4;
  z.t = 40.125;
  computed.push_back(z);
  const ComparisonStats stats = compare_zeros(computed, reference);
  CHECK(stats.per_n_diff[0] == 0.125);
}
