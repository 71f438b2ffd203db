#include "zetamap/dcrt.hpp"

#include <algorithm>
#include <cmath>

#include "zetamap/errors.hpp"

namespace zetamap {
namespace {

// Lower median of the magnitudes: the order statistic at (n-1)/2. Keeps the
// threshold meaningful for very short spectra.
double lower_median_abs(const std::vector<double>& values) {
  std::vector<double> mags(values.size());
  std::transform(values.begin(), values.end(), mags.begin(),
                 [](double v) { return std::abs(v); });
  const auto mid = mags.begin() + static_cast<std::ptrdiff_t>((mags.size() - 1) / 2);
  std::nth_element(mags.begin(), mid, mags.end());
  return *mid;
}

std::vector<std::pair<std::int64_t, double>> peaks_over_median(const Spectrum& spectrum,
                                                               double ratio) {
  if (!(ratio > 1.0)) throw DomainError("detect_peaks: requires ratio > 1");
  const double threshold = ratio * lower_median_abs(spectrum.x_values);
  std::vector<std::pair<std::int64_t, double>> peaks;
  for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
    if (std::abs(spectrum.x_values[i]) > threshold) {
      peaks.emplace_back(spectrum.k_values[i], spectrum.x_values[i]);
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.second) != std::abs(b.second)) {
      return std::abs(a.second) > std::abs(b.second);
    }
    return a.first < b.first;
  });
  return peaks;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Spectrum dcrt_spectrum(std::span<const double> zeros, std::int64_t r,
                       std::vector<std::int64_t> k_values, ZeroSource source) {
  if (zeros.empty()) throw DomainError("dcrt_spectrum: empty zero list");
  for (double t : zeros) {
    if (!(t > 0.0)) throw DomainError("dcrt_spectrum: nonpositive zero value");
  }
  if (r < 1) throw DomainError("dcrt_spectrum: requires r >= 1");
  if (k_values.empty()) throw DomainError("dcrt_spectrum: empty k list");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1 || (i > 0 && k_values[i] <= k_values[i - 1])) {
      throw DomainError("dcrt_spectrum: k values must be >= 1 and strictly increasing");
    }
  }

  const double log_r = std::log(static_cast<double>(r));
  std::vector<double> r_factors(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    r_factors[i] = std::cos(log_r * zeros[i]);
  }

  Spectrum spectrum;
  spectrum.r = r;
  spectrum.n_zeros = static_cast<std::int64_t>(zeros.size());
  spectrum.zero_source = source;
  spectrum.x_values.reserve(k_values.size());
  for (std::int64_t k : k_values) {
    const double log_k = std::log(static_cast<double>(k));
    double sum = 0.0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      sum += r_factors[i] * std::cos(log_k * zeros[i]);
    }
    spectrum.x_values.push_back(sum);
  }
  spectrum.k_values = std::move(k_values);
  return spectrum;
}

std::vector<std::pair<std::int64_t, double>> detect_peaks(const Spectrum& spectrum,
                                                          double ratio) {
  if (spectrum.k_values.size() < 20) {
    throw DomainError("detect_peaks: needs at least 20 k-points");
  }
  return peaks_over_median(spectrum, ratio);
}

std::vector<std::int64_t> factor_via_dcrt(std::int64_t r, std::span<const double> zeros,
                                          std::int64_t k_max, double ratio) {
  if (r < 2) throw DomainError("factor_via_dcrt: requires r >= 2");
  if (k_max < 2) throw DomainError("factor_via_dcrt: requires k_max >= 2");
  const std::int64_t k_hi = std::min(k_max, r - 1);
  if (k_hi < 2) return {};

  std::vector<std::int64_t> ks;
  ks.reserve(static_cast<std::size_t>(k_hi - 1));
  for (std::int64_t k = 2; k <= k_hi; ++k) ks.push_back(k);

  const Spectrum spectrum = dcrt_spectrum(zeros, r, std::move(ks));
  std::vector<std::int64_t> divisors;
  for (const auto& [k, x] : peaks_over_median(spectrum, ratio)) {
    if (r % k == 0) divisors.push_back(k);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<double> perturb_zeros(std::span<const double> zeros, double epsilon,
                                  std::uint64_t seed) {
  if (zeros.empty()) throw DomainError("perturb_zeros: empty zero list");
  if (!(epsilon > 0.0)) throw DomainError("perturb_zeros: requires epsilon > 0");
  std::uint64_t state = seed;
  std::vector<double> out(zeros.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    out[i] = zeros[i] + (2.0 * u - 1.0) * epsilon;
  }
  return out;
}

}  // namespace zetamap
