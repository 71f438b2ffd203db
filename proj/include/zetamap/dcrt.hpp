#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zetamap {

enum class ZeroSource { reference_table, damped_map, closed_form_estimate, perturbed };

// Raw cosine-transform partial sums X(k) = sum_n cos(log r t_n) cos(log k t_n)
// over a set of zero ordinates. No normalization is applied.
struct Spectrum {
  std::int64_t r = 0;
  std::vector<std::int64_t> k_values;  // strictly increasing
  std::vector<double> x_values;        // same length
  std::int64_t n_zeros = 0;            // partial-sum length
  ZeroSource zero_source = ZeroSource::reference_table;
};

Spectrum dcrt_spectrum(std::span<const double> zeros, std::int64_t r,
                       std::vector<std::int64_t> k_values,
                       ZeroSource source = ZeroSource::reference_table);

// All k whose |X(k)| exceeds ratio times the lower median of |X| over the
// spectrum, sorted by descending |X(k)|. Requires at least 20 k-points.
std::vector<std::pair<std::int64_t, double>> detect_peaks(const Spectrum& spectrum,
                                                          double ratio);

// Scans k in [2, min(k_max, r - 1)] and returns, ascending, the detected
// peaks that exactly divide r. Empty means factorization failed at this zero
// count.
std::vector<std::int64_t> factor_via_dcrt(std::int64_t r, std::span<const double> zeros,
                                          std::int64_t k_max, double ratio);

// zeros shifted by i.i.d. uniform noise on [-epsilon, epsilon]; deterministic
// in seed (splitmix64 stream, independent of the platform RNG).
std::vector<double> perturb_zeros(std::span<const double> zeros, double epsilon,
                                  std::uint64_t seed);

}  // namespace zetamap
