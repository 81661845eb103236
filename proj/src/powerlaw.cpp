#include "ontokg/powerlaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "ontokg/errors.hpp"

namespace ontokg {

namespace {

struct UniqueCounts {
  std::vector<std::uint32_t> values;  // ascending
  std::vector<std::size_t> counts;
  std::size_t total = 0;
};

UniqueCounts unique_counts(std::span<const std::uint32_t> sample, std::uint32_t minimum) {
  std::vector<std::uint32_t> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  UniqueCounts out;
  for (std::uint32_t v : sorted) {
    if (v < minimum) continue;
    if (!out.values.empty() && out.values.back() == v) {
      ++out.counts.back();
    } else {
      out.values.push_back(v);
      out.counts.push_back(1);
    }
    ++out.total;
  }
  return out;
}

double mle_alpha(const UniqueCounts& tail, std::uint32_t x_min, bool continuity_correction) {
  const double base = continuity_correction ? x_min - 0.5 : static_cast<double>(x_min);
  double denom = 0.0;
  for (std::size_t i = 0; i < tail.values.size(); ++i)
    denom += tail.counts[i] * std::log(tail.values[i] / base);
  return 1.0 + tail.total / denom;
}

// Fitted tail CDF at integer x: P(X <= x) = 1 - zeta(alpha, x+1)/zeta(alpha, x_min).
double ks_distance(const UniqueCounts& tail, double alpha, std::uint32_t x_min) {
  const double z_min = hurwitz_zeta(alpha, x_min);
  double d = 0.0;
  std::size_t cum = 0;
  for (std::size_t i = 0; i < tail.values.size(); ++i) {
    const double s_prev = static_cast<double>(cum) / tail.total;
    cum += tail.counts[i];
    const double s_here = static_cast<double>(cum) / tail.total;
    const double f_here = 1.0 - hurwitz_zeta(alpha, tail.values[i] + 1.0) / z_min;
    // F just below this support point, where S still sits at its previous step.
    const double f_below = 1.0 - hurwitz_zeta(alpha, static_cast<double>(tail.values[i])) / z_min;
    d = std::max(d, std::abs(s_here - f_here));
    d = std::max(d, std::abs(s_prev - f_below));
  }
  return d;
}

// Truncated discrete log-normal over [x_min, x_max]: p(x) proportional to
// exp(-(ln x - mu)^2 / (2 sigma^2)) / x, normalized by summation. The head is
// summed exactly; past kHead the summand is smooth and slowly varying, so the
// remainder uses the closed-form Gaussian integral under the midpoint rule
// (substituting u = ln t turns the weight into a plain normal density).
double lognormal_log_z(double mu, double sigma, std::uint32_t x_min, std::uint32_t x_max) {
  constexpr std::uint64_t kHead = 20000;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const std::uint64_t head_end = std::min<std::uint64_t>(x_max, x_min + kHead);
  double z = 0.0;
  for (std::uint64_t k = x_min; k <= head_end; ++k) {
    const double lk = std::log(static_cast<double>(k));
    z += std::exp(-(lk - mu) * (lk - mu) * inv2s2) / k;
  }
  if (head_end < x_max) {
    auto phi = [&](double t) {
      return 0.5 * std::erfc(-(std::log(t) - mu) / (sigma * std::sqrt(2.0)));
    };
    z += sigma * std::sqrt(2.0 * 3.14159265358979323846) *
         (phi(static_cast<double>(x_max) + 0.5) - phi(static_cast<double>(head_end) + 0.5));
  }
  return std::log(z);
}

double lognormal_loglik(const UniqueCounts& tail, double mu, double sigma, std::uint32_t x_min,
                        std::uint32_t x_max) {
  const double log_z = lognormal_log_z(mu, sigma, x_min, x_max);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  double ll = 0.0;
  for (std::size_t i = 0; i < tail.values.size(); ++i) {
    const double lv = std::log(static_cast<double>(tail.values[i]));
    ll += tail.counts[i] * (-(lv - mu) * (lv - mu) * inv2s2 - lv - log_z);
  }
  return ll;
}

// Small Nelder-Mead for the 2-parameter log-normal fit.
template <typename F>
std::array<double, 2> nelder_mead2(F objective, std::array<double, 2> start) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  std::array<std::array<double, 2>, 3> simplex = {
      start, {start[0] + 0.5, start[1]}, {start[0], start[1] + 0.5}};
  std::array<double, 3> value;
  for (int i = 0; i < 3; ++i) value[i] = objective(simplex[i]);
  for (int iter = 0; iter < 500; ++iter) {
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return value[a] < value[b]; });
    const auto& best = simplex[order[0]];
    const auto& worst = simplex[order[2]];
    if (std::abs(value[order[2]] - value[order[0]]) < 1e-12) break;
    std::array<double, 2> centroid = {(simplex[order[0]][0] + simplex[order[1]][0]) / 2,
                                      (simplex[order[0]][1] + simplex[order[1]][1]) / 2};
    auto point = [&](double t) {
      return std::array<double, 2>{centroid[0] + t * (worst[0] - centroid[0]),
                                   centroid[1] + t * (worst[1] - centroid[1])};
    };
    auto reflected = point(-kReflect);
    double fr = objective(reflected);
    if (fr < value[order[0]]) {
      auto expanded = point(-kExpand);
      double fe = objective(expanded);
      if (fe < fr) {
        simplex[order[2]] = expanded;
        value[order[2]] = fe;
      } else {
        simplex[order[2]] = reflected;
        value[order[2]] = fr;
      }
    } else if (fr < value[order[1]]) {
      simplex[order[2]] = reflected;
      value[order[2]] = fr;
    } else {
      auto contracted = point(kContract);
      double fc = objective(contracted);
      if (fc < value[order[2]]) {
        simplex[order[2]] = contracted;
        value[order[2]] = fc;
      } else {
        for (int i : {order[1], order[2]}) {
          for (int d = 0; d < 2; ++d)
            simplex[i][d] = best[d] + kShrink * (simplex[i][d] - best[d]);
          value[i] = objective(simplex[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (value[i] < value[best]) best = i;
  return simplex[best];
}

ModelComparison vuong_from_diffs(const std::vector<double>& diffs,
                                 const std::vector<std::size_t>& counts, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) sum += counts[i] * diffs[i];
  const double mean = sum / n;
  double var = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i)
    var += counts[i] * (diffs[i] - mean) * (diffs[i] - mean);
  var /= n;
  const double sigma = std::sqrt(var);
  ModelComparison cmp;
  if (sigma < 1e-12) {
    if (std::abs(sum) < 1e-9) return {0.0, 1.0};
    cmp.r = sum > 0 ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
    cmp.p = 0.0;
    return cmp;
  }
  cmp.r = sum / (sigma * std::sqrt(static_cast<double>(n)));
  cmp.p = std::erfc(std::abs(cmp.r) / std::sqrt(2.0));
  return cmp;
}

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (s <= 1.0) throw Error("hurwitz_zeta requires s > 1");
  if (q < 1.0) throw Error("hurwitz_zeta requires q >= 1");
  // Direct terms until q+N is comfortably large, then Euler-Maclaurin tail.
  const double target = 25.0;
  const std::size_t n_direct = q >= target ? 0 : static_cast<std::size_t>(target - q) + 1;
  double sum = 0.0;
  for (std::size_t k = 0; k < n_direct; ++k) sum += std::pow(q + k, -s);
  const double a = q + n_direct;
  sum += std::pow(a, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(a, -s);
  // Bernoulli corrections B2/2!, B4/4!, B6/6!, B8/8!.
  const double a1 = std::pow(a, -s - 1.0);
  const double a3 = std::pow(a, -s - 3.0);
  const double a5 = std::pow(a, -s - 5.0);
  const double a7 = std::pow(a, -s - 7.0);
  double rising = s;
  sum += rising / 12.0 * a1;
  rising *= (s + 1.0) * (s + 2.0);
  sum -= rising / 720.0 * a3;
  rising *= (s + 3.0) * (s + 4.0);
  sum += rising / 30240.0 * a5;
  rising *= (s + 5.0) * (s + 6.0);
  sum -= rising / 1209600.0 * a7;
  return sum;
}

ModelComparison vuong_test(std::span<const double> ll_first, std::span<const double> ll_second) {
  if (ll_first.size() != ll_second.size() || ll_first.empty())
    throw Error("vuong_test requires two equal-length non-empty likelihood vectors");
  std::vector<double> diffs(ll_first.size());
  std::vector<std::size_t> counts(ll_first.size(), 1);
  for (std::size_t i = 0; i < diffs.size(); ++i) diffs[i] = ll_first[i] - ll_second[i];
  return vuong_from_diffs(diffs, counts, diffs.size());
}

PowerLawFit fit_power_law(std::span<const std::uint32_t> sample,
                          std::optional<std::uint32_t> x_min, bool continuity_correction) {
  if (sample.empty()) throw EmptySampleError();
  if (x_min && *x_min < 1) throw Error("x_min must be at least 1");

  PowerLawFit fit;
  fit.continuity_correction = continuity_correction;

  if (x_min) {
    UniqueCounts tail = unique_counts(sample, *x_min);
    if (tail.values.size() < 2) throw DegenerateTailError();
    fit.x_min = *x_min;
    fit.alpha = mle_alpha(tail, *x_min, continuity_correction);
    fit.ks = ks_distance(tail, fit.alpha, *x_min);
    fit.n_tail = tail.total;
    return fit;
  }

  // Candidate cutoffs: distinct observed degrees up to the 90th percentile.
  std::vector<std::uint32_t> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const std::uint32_t p90 = sorted[(sorted.size() - 1) * 9 / 10];
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v : sorted)
    if (v >= 1 && v <= p90 && (candidates.empty() || candidates.back() != v))
      candidates.push_back(v);

  bool found = false;
  for (std::uint32_t candidate : candidates) {
    UniqueCounts tail = unique_counts(sample, candidate);
    if (tail.values.size() < 2) continue;
    const double alpha = mle_alpha(tail, candidate, continuity_correction);
    const double ks = ks_distance(tail, alpha, candidate);
    if (!found || ks < fit.ks) {
      found = true;
      fit.alpha = alpha;
      fit.x_min = candidate;
      fit.ks = ks;
      fit.n_tail = tail.total;
    }
  }
  if (!found) throw DegenerateTailError();
  return fit;
}

void compare_distributions(std::span<const std::uint32_t> sample, PowerLawFit& fit) {
  UniqueCounts tail = unique_counts(sample, fit.x_min);
  if (tail.values.size() < 2) throw DegenerateTailError();
  const std::uint32_t x_min = fit.x_min;
  const std::uint32_t x_max = tail.values.back();
  const std::size_t n = tail.total;

  std::vector<double> ll_pl(tail.values.size());
  const double log_zeta = std::log(hurwitz_zeta(fit.alpha, x_min));
  for (std::size_t i = 0; i < tail.values.size(); ++i)
    ll_pl[i] = -fit.alpha * std::log(static_cast<double>(tail.values[i])) - log_zeta;

  // Discrete exponential (geometric on x_min, x_min+1, ...): closed-form MLE.
  double mean_excess = 0.0;
  for (std::size_t i = 0; i < tail.values.size(); ++i)
    mean_excess += tail.counts[i] * static_cast<double>(tail.values[i] - x_min);
  mean_excess /= n;
  const double q_hat = mean_excess / (1.0 + mean_excess);
  std::vector<double> diffs(tail.values.size());
  if (q_hat <= 0.0) {
    // All mass at x_min; the geometric degenerates. Treat its likelihood as
    // point mass: matches only at x_min.
    for (std::size_t i = 0; i < tail.values.size(); ++i)
      diffs[i] = ll_pl[i] - (tail.values[i] == x_min ? 0.0
                                                     : -std::numeric_limits<double>::infinity());
    fit.comparisons["exponential"] = vuong_from_diffs(diffs, tail.counts, n);
  } else {
    const double log_q = std::log(q_hat), log_1mq = std::log(1.0 - q_hat);
    for (std::size_t i = 0; i < tail.values.size(); ++i) {
      const double ll_exp = log_1mq + (tail.values[i] - x_min) * log_q;
      diffs[i] = ll_pl[i] - ll_exp;
    }
    fit.comparisons["exponential"] = vuong_from_diffs(diffs, tail.counts, n);
  }

  // Discrete log-normal, fitted on ln(x) with the same truncation.
  double mu0 = 0.0;
  for (std::size_t i = 0; i < tail.values.size(); ++i)
    mu0 += tail.counts[i] * std::log(static_cast<double>(tail.values[i]));
  mu0 /= n;
  double var0 = 0.0;
  for (std::size_t i = 0; i < tail.values.size(); ++i) {
    const double d = std::log(static_cast<double>(tail.values[i])) - mu0;
    var0 += tail.counts[i] * d * d;
  }
  var0 /= n;
  const double s0 = std::log(std::max(std::sqrt(var0), 1e-3));
  auto objective = [&](std::array<double, 2> p) {
    const double sigma = std::exp(std::clamp(p[1], -12.0, 12.0));
    return -lognormal_loglik(tail, p[0], sigma, x_min, x_max);
  };
  const auto best = nelder_mead2(objective, {mu0, s0});
  const double mu = best[0];
  const double sigma = std::exp(std::clamp(best[1], -12.0, 12.0));
  const double log_z = lognormal_log_z(mu, sigma, x_min, x_max);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  for (std::size_t i = 0; i < tail.values.size(); ++i) {
    const double lv = std::log(static_cast<double>(tail.values[i]));
    const double ll_ln = -(lv - mu) * (lv - mu) * inv2s2 - lv - log_z;
    diffs[i] = ll_pl[i] - ll_ln;
  }
  fit.comparisons["lognormal"] = vuong_from_diffs(diffs, tail.counts, n);
}

}  // namespace ontokg
