#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "ibd/errors.hpp"

namespace ibd {

/// Tolerance accepted on total probability mass of user-supplied data.
inline constexpr double kNormalizationTol = 1e-9;
/// Below this threshold an entropy (or conditional entropy) counts as zero.
inline constexpr double kZeroEntropyTol = 1e-12;
/// Entries above this negative threshold are clamped to zero instead of
/// rejected.
inline constexpr double kNegativeMassTol = -1e-12;
/// Absolute slack allowed on inequality checks; covers roundoff only.
inline constexpr double kInequalityTol = 1e-9;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

/// Uniform double in the open interval (0,1), built directly from engine
/// output so results do not depend on the standard library's distribution
/// implementations.
inline double unit_uniform(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
}

inline double min_alpha_weight(double alpha) { return std::min(alpha, 1.0 - alpha); }
inline double max_alpha_weight(double alpha) { return std::max(alpha, 1.0 - alpha); }

/// Entropy in nats of the distribution (q, (1-q)/(n-1), ..., (1-q)/(n-1)).
inline double spiked_uniform_entropy(double q, std::size_t n) {
  double h = 0.0;
  if (q > 0.0) h -= q * std::log(q);
  const double rest = 1.0 - q;
  if (n > 1 && rest > 0.0) h -= rest * std::log(rest / static_cast<double>(n - 1));
  return h;
}

/// Probability vector over n categories whose entropy equals `target` nats.
/// Solves for the spike mass by bisection; the map q -> H is strictly
/// decreasing on [1/n, 1].
inline std::vector<double> probs_with_entropy(double target, std::size_t n) {
  if (n < 1) throw InvalidArgumentError("probs_with_entropy: need at least one category");
  const double h_max = std::log(static_cast<double>(n));
  if (target < 0.0 || target > h_max + 1e-15) {
    throw InvalidArgumentError("probs_with_entropy: target outside [0, ln n]");
  }
  double lo = 1.0 / static_cast<double>(n);  // entropy ln n
  double hi = 1.0;                           // entropy 0
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (spiked_uniform_entropy(mid, n) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double q = 0.5 * (lo + hi);
  std::vector<double> probs(n, n > 1 ? (1.0 - q) / static_cast<double>(n - 1) : 0.0);
  probs[0] = q;
  return probs;
}

/// Inverse of the binary entropy function on (0, 1/2]; bisection to ~1e-16.
inline double invert_binary_entropy(double target) {
  return probs_with_entropy(target, 2)[1];  // the smaller atom
}

}  // namespace ibd
