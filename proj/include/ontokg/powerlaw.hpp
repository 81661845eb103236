#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace ontokg {

// Hurwitz zeta sum_{k>=0} (q+k)^-s for s > 1, q >= 1 (Euler-Maclaurin).
double hurwitz_zeta(double s, double q);

// Normalized log-likelihood ratio (positive favors the first model) and
// two-sided p-value under the Vuong normal approximation.
struct ModelComparison {
  double r = 0.0;
  double p = 1.0;
};

ModelComparison vuong_test(std::span<const double> ll_first, std::span<const double> ll_second);

struct PowerLawFit {
  double alpha = 0.0;
  std::uint32_t x_min = 1;
  double ks = 0.0;
  std::size_t n_tail = 0;
  bool continuity_correction = true;
  std::map<std::string, ModelComparison> comparisons;  // "exponential", "lognormal"
};

// Discrete maximum-likelihood fit alpha = 1 + n / sum ln(x_i / (x_min - 1/2)).
// When x_min is absent it is chosen by minimizing the KS distance between the
// empirical and fitted tail over the distinct observed degrees up to the 90th
// percentile. DegenerateTailError when the tail holds < 2 distinct values.
// `continuity_correction=false` switches the denominator to ln(x_i / x_min),
// the continuous-form estimator (exactly scale-invariant).
PowerLawFit fit_power_law(std::span<const std::uint32_t> sample,
                          std::optional<std::uint32_t> x_min = std::nullopt,
                          bool continuity_correction = true);

// Fits discrete exponential and discrete log-normal alternatives on the same
// tail and fills fit.comparisons with the Vuong verdicts; sign and p are
// reported even when inconclusive.
void compare_distributions(std::span<const std::uint32_t> sample, PowerLawFit& fit);

}  // namespace ontokg
