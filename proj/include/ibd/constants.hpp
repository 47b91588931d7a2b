#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "ibd/divergence.hpp"
#include "ibd/errors.hpp"
#include "ibd/math.hpp"

namespace ibd {

/// Closed entropy interval [c1, c2] in nats with 0 < c1 <= c2.
struct ThetaInterval {
  double c1;
  double c2;

  ThetaInterval(double lo, double hi) : c1(lo), c2(hi) {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
      throw InvalidThetaError("ThetaInterval requires 0 < c1 <= c2 < inf");
    }
  }

  double ratio() const { return c2 / c1; }
};

/// Lower-bound constants for the two-sided comparability of a divergence
/// with the information distance: k1 * D_I <= IB <= k2 * D_I.
///
/// k1_a holds when the marginal entropies *and* the mutual information lie
/// in the interval; k1_b and k1_c need only the marginal entropies there.
/// Constants are absent where no finite positive value exists for the
/// requested kind, interval and alpha.
struct BoundConstants {
  std::optional<double> k1_a;
  std::optional<double> k1_b;
  std::optional<double> k1_c;
  double k2 = 1.0;
};

namespace detail {

inline std::optional<double> positive_or_absent(double v) {
  if (v > 0.0) return v;
  return std::nullopt;
}

}  // namespace detail

/// Table of comparability constants for the four mean-complexity kinds.
/// Pass no interval for the bounds that hold on all of the entropy range
/// (the arithmetic kind, and the root kind's global k1_c).
inline BoundConstants comparability_constants(ComplexityKind kind, double alpha,
                                              std::optional<ThetaInterval> theta) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw InvalidSpecError("comparability constants require alpha in [0,1)");
  }
  const double a_min = min_alpha_weight(alpha);
  BoundConstants out;
  switch (kind) {
    case ComplexityKind::kArithmeticMean:
      // Interval-free: the weights act directly on the conditionals.
      out.k1_a = detail::positive_or_absent(a_min);
      out.k1_b = detail::positive_or_absent(1.0 - alpha);
      return out;
    case ComplexityKind::kRootMean: {
      if (!theta) {
        out.k1_c = detail::positive_or_absent((1.0 - alpha) * (1.0 - alpha));
        return out;
      }
      const double rho = theta->ratio();
      out.k1_a = detail::positive_or_absent(a_min / std::sqrt(rho));
      if (alpha > 0.0 && rho < 1.0 / (alpha * alpha)) {
        out.k1_b = detail::positive_or_absent(1.0 - alpha * std::sqrt(rho));
      } else if (alpha == 0.0) {
        out.k1_b = 1.0;
      }
      const double shrink = 1.0 + 1.0 / std::sqrt(rho);
      out.k1_c = detail::positive_or_absent((1.0 - alpha) * (1.0 - alpha / (shrink * shrink)));
      return out;
    }
    case ComplexityKind::kGeometricMean: {
      if (!theta) return out;
      const double rho = theta->ratio();
      out.k1_a = detail::positive_or_absent(a_min / rho);
      if (alpha > 0.0 && rho < 1.0 / alpha) {
        out.k1_b = detail::positive_or_absent(1.0 - alpha * rho);
      } else if (alpha == 0.0) {
        out.k1_b = 1.0;
      }
      // The exponent pairs with the weight on the larger entropy: with
      // C = m^a * M^(1-a), the gap M - C integrates a * u^(a-1) over
      // [m, M], which yields (rho^(1-a) - 1)/(rho - 1).
      if (rho > 1.0) {
        out.k1_c = detail::positive_or_absent((std::pow(rho, 1.0 - alpha) - 1.0) / (rho - 1.0));
      } else {
        out.k1_c = detail::positive_or_absent(1.0 - alpha);  // limit of the quotient as rho -> 1
      }
      return out;
    }
    case ComplexityKind::kHarmonicMean: {
      if (!theta) return out;
      const double rho = theta->ratio();
      out.k1_a = detail::positive_or_absent(a_min / (rho * rho));
      if (alpha > 0.0 && rho < 1.0 / std::sqrt(alpha)) {
        out.k1_b = detail::positive_or_absent(1.0 - alpha * rho * rho);
      } else if (alpha == 0.0) {
        out.k1_b = 1.0;
      }
      if (alpha < 1.0) {
        out.k1_c = detail::positive_or_absent(1.0 / (1.0 + alpha * rho / (1.0 - alpha)));
      }
      return out;
    }
    default:
      throw UnsupportedKindError("comparability constants exist for the mean kinds only");
  }
}

/// Relaxed-triangle factor c with d(X,Y) <= c * (d(X,Z) + d(Y,Z)).
/// Raw arithmetic: 1 for alpha <= 1/2, alpha/(1-alpha) above. Normalized
/// arithmetic: 1/(1-alpha). Root: 1/(alpha^2+(1-alpha)^2) raw below 1/2,
/// otherwise 1/(1-alpha)^2. Harmonic: normalized only, 1/min(alpha,1-alpha).
inline double relaxed_triangle_constant(ComplexityKind kind, double alpha, bool normalized) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw InvalidSpecError("relaxed triangle constant requires alpha in [0,1)");
  }
  switch (kind) {
    case ComplexityKind::kJointEntropy:
    case ComplexityKind::kMaxEntropy:
      return 1.0;
    case ComplexityKind::kArithmeticMean:
      if (normalized) return 1.0 / (1.0 - alpha);
      return alpha <= 0.5 ? 1.0 : alpha / (1.0 - alpha);
    case ComplexityKind::kRootMean:
      if (!normalized && alpha <= 0.5) {
        return 1.0 / (alpha * alpha + (1.0 - alpha) * (1.0 - alpha));
      }
      return 1.0 / ((1.0 - alpha) * (1.0 - alpha));
    case ComplexityKind::kHarmonicMean:
      if (!normalized) {
        throw UnsupportedKindError("no global triangle factor is known for the raw harmonic kind");
      }
      if (alpha <= 0.0) return 1.0;  // degenerates to the information distance
      return 1.0 / min_alpha_weight(alpha);
    default:
      throw UnsupportedKindError("no global triangle factor is known for this kind");
  }
}

/// Constants of the redundancy bound
///   |IB(Y,X1) - IB(Y,X2)|   <= (1 + kappa1) * D_I(X1,X2)
///   |NIB(Y,X1) - NIB(Y,X2)| <= (1 + kappa1)/kappa2 * d_I(X1,X2)
/// valid when H(X1) and H(X2) lie in [gamma1 * H(Y), gamma2 * H(Y)].
struct RedundancyConstants {
  double kappa1 = 0.0;
  double kappa2 = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double gamma12 = 1.0;  // min(gamma1, 1/gamma2)
};

inline RedundancyConstants redundancy_constants(ComplexityKind kind, double alpha, double gamma1,
                                                double gamma2) {
  if (!(gamma1 > 0.0) || !(gamma2 >= gamma1) || !std::isfinite(gamma2)) {
    throw InvalidGammaError("redundancy constants require 0 < gamma1 <= gamma2 < inf");
  }
  RedundancyConstants rc;
  rc.gamma1 = gamma1;
  rc.gamma2 = gamma2;
  rc.gamma12 = std::min(gamma1, 1.0 / gamma2);
  const double a_max = max_alpha_weight(alpha);
  const double a_min = min_alpha_weight(alpha);
  switch (kind) {
    case ComplexityKind::kArithmeticMean:
      rc.kappa1 = a_max;
      rc.kappa2 = (1.0 - alpha) + alpha * rc.gamma12;
      return rc;
    case ComplexityKind::kRootMean:
      rc.kappa1 = a_max * a_max + alpha * (1.0 - alpha) / std::sqrt(gamma1);
      rc.kappa2 = std::pow((1.0 - alpha) + alpha * std::sqrt(rc.gamma12), 2.0);
      return rc;
    case ComplexityKind::kGeometricMean: {
      double k1 = std::max((1.0 - alpha) / std::pow(gamma1, alpha),
                           alpha / std::pow(gamma1, 1.0 - alpha));
      if (gamma1 <= 1.0) k1 = std::max(k1, 1.0);
      rc.kappa1 = k1;
      rc.kappa2 = std::pow(rc.gamma12, alpha);
      return rc;
    }
    case ComplexityKind::kHarmonicMean: {
      if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidSpecError("harmonic redundancy constants require alpha in (0,1)");
      }
      const double denom = 1.0 + rc.gamma12;
      rc.kappa1 = (a_max / (a_min * a_min)) / (denom * denom);
      rc.kappa2 = 1.0 / (alpha / rc.gamma12 + (1.0 - alpha));
      return rc;
    }
    default:
      throw UnsupportedKindError("redundancy constants exist for the mean kinds only");
  }
}

}  // namespace ibd
