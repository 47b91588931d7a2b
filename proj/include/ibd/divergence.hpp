#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ibd/distribution.hpp"
#include "ibd/errors.hpp"
#include "ibd/math.hpp"

namespace ibd {

/// Family of symmetric complexity terms. Every term is an upper bound on
/// the mutual information; the mean kinds interpolate between the smaller
/// and larger marginal entropy with weight alpha on the smaller one.
enum class ComplexityKind {
  kJointEntropy,     // H(X,Y)
  kMaxEntropy,       // max(H(X), H(Y))
  kMinEntropy,       // min(H(X), H(Y)); not a divergence
  kArithmeticMean,   // a*m + (1-a)*M
  kRootMean,         // (a*sqrt(m) + (1-a)*sqrt(M))^2
  kGeometricMean,    // m^a * M^(1-a)
  kHarmonicMean,     // (a/m + (1-a)/M)^-1
  kGeneralizedMean,  // g^-1(a*g(m) + (1-a)*g(M)) for user-supplied monotone g
  kConvex,           // weighted combination of child complexities
};

struct ComplexitySpec {
  ComplexityKind kind = ComplexityKind::kMaxEntropy;
  double alpha = 0.5;

  // kGeneralizedMean only.
  std::function<double(double)> g;
  std::function<double(double)> g_inverse;

  // kConvex only. With normalized_children the combined complexity is the
  // weighted harmonic mean of the children (so the normalized divergence is
  // the weighted sum of the child normalized divergences); otherwise it is
  // the plain weighted sum of child complexities.
  std::vector<double> weights;
  std::vector<ComplexitySpec> children;
  bool normalized_children = false;

  static ComplexitySpec joint_entropy() { return make(ComplexityKind::kJointEntropy, 0.0); }
  static ComplexitySpec max_entropy() { return make(ComplexityKind::kMaxEntropy, 0.0); }
  static ComplexitySpec min_entropy() { return make(ComplexityKind::kMinEntropy, 1.0); }
  static ComplexitySpec arithmetic_mean(double alpha) {
    return make(ComplexityKind::kArithmeticMean, alpha);
  }
  static ComplexitySpec root_mean(double alpha) { return make(ComplexityKind::kRootMean, alpha); }
  static ComplexitySpec geometric_mean(double alpha) {
    return make(ComplexityKind::kGeometricMean, alpha);
  }
  static ComplexitySpec harmonic_mean(double alpha) {
    return make(ComplexityKind::kHarmonicMean, alpha);
  }

  static ComplexitySpec generalized_mean(std::function<double(double)> g,
                                         std::function<double(double)> g_inverse, double alpha) {
    ComplexitySpec spec;
    spec.kind = ComplexityKind::kGeneralizedMean;
    spec.alpha = alpha;
    spec.g = std::move(g);
    spec.g_inverse = std::move(g_inverse);
    spec.validate();
    return spec;
  }

  static ComplexitySpec convex_mix(std::vector<double> weights,
                                   std::vector<ComplexitySpec> children,
                                   bool normalized_children) {
    ComplexitySpec spec;
    spec.kind = ComplexityKind::kConvex;
    spec.weights = std::move(weights);
    spec.children = std::move(children);
    spec.normalized_children = normalized_children;
    spec.validate();
    return spec;
  }

  void validate() const {
    switch (kind) {
      case ComplexityKind::kJointEntropy:
      case ComplexityKind::kMaxEntropy:
      case ComplexityKind::kMinEntropy:
        return;
      case ComplexityKind::kArithmeticMean:
      case ComplexityKind::kRootMean:
      case ComplexityKind::kGeometricMean:
      case ComplexityKind::kHarmonicMean:
        if (!(alpha >= 0.0 && alpha <= 1.0)) {
          throw InvalidSpecError("alpha must lie in [0,1]");
        }
        return;
      case ComplexityKind::kGeneralizedMean:
        if (!(alpha >= 0.0 && alpha < 1.0)) {
          throw InvalidSpecError("generalized mean requires alpha in [0,1)");
        }
        if (!g || !g_inverse) {
          throw InvalidSpecError("generalized mean requires both g and its inverse");
        }
        return;
      case ComplexityKind::kConvex: {
        if (weights.size() != children.size()) {
          throw WeightMismatchError("convex combination: weight/spec count mismatch");
        }
        if (weights.empty()) throw InvalidSpecError("convex combination: no children");
        CompensatedSum total;
        for (double w : weights) {
          if (w < 0.0) throw InvalidSpecError("convex combination: negative weight");
          total.add(w);
        }
        if (std::abs(total.value() - 1.0) > kZeroEntropyTol) {
          throw InvalidSpecError("convex combination: weights must sum to 1");
        }
        for (const ComplexitySpec& child : children) child.validate();
        return;
      }
    }
    throw InvalidSpecError("unknown complexity kind");
  }

  /// Compact grammar form, e.g. "S:0.5" or "convex:0.3*E+0.7*I".
  std::string display() const {
    auto with_alpha = [this](const char* letter) {
      std::ostringstream out;
      out << letter << ':' << alpha;
      return out.str();
    };
    switch (kind) {
      case ComplexityKind::kJointEntropy: return "E";
      case ComplexityKind::kMaxEntropy: return "I";
      case ComplexityKind::kMinEntropy: return "min";
      case ComplexityKind::kArithmeticMean: return with_alpha("S");
      case ComplexityKind::kRootMean: return with_alpha("R");
      case ComplexityKind::kGeometricMean: return with_alpha("P");
      case ComplexityKind::kHarmonicMean: return with_alpha("D");
      case ComplexityKind::kGeneralizedMean: return with_alpha("gmean");
      case ComplexityKind::kConvex: {
        std::ostringstream out;
        out << (normalized_children ? "nconvex:" : "convex:");
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i > 0) out << '+';
          out << weights[i] << '*' << children[i].display();
        }
        return out.str();
      }
    }
    return "?";
  }

 private:
  static ComplexitySpec make(ComplexityKind kind, double alpha) {
    ComplexitySpec spec;
    spec.kind = kind;
    spec.alpha = alpha;
    spec.validate();
    return spec;
  }
};

/// False when the complexity term has no finite value for this summary
/// (the harmonic mean with positive weight at a vanishing entropy).
inline bool complexity_defined(const ComplexitySpec& spec, const InfoSummary& s) {
  switch (spec.kind) {
    case ComplexityKind::kHarmonicMean:
      return spec.alpha == 0.0 || std::min(s.h_x, s.h_y) > kZeroEntropyTol;
    case ComplexityKind::kConvex:
      for (const ComplexitySpec& child : spec.children) {
        if (!complexity_defined(child, s)) return false;
      }
      return true;
    default:
      return true;
  }
}

/// Mean-family spec from its kind tag.
inline ComplexitySpec mean_spec(ComplexityKind kind, double alpha) {
  switch (kind) {
    case ComplexityKind::kArithmeticMean: return ComplexitySpec::arithmetic_mean(alpha);
    case ComplexityKind::kRootMean: return ComplexitySpec::root_mean(alpha);
    case ComplexityKind::kGeometricMean: return ComplexitySpec::geometric_mean(alpha);
    case ComplexityKind::kHarmonicMean: return ComplexitySpec::harmonic_mean(alpha);
    default: throw InvalidSpecError("mean_spec: not a mean kind");
  }
}

/// True when the complexity term is an upper bound on mutual information
/// that is tight exactly on equivalent pairs. The pure minimum (and any
/// mean degenerated to it by alpha = 1) fails this.
inline bool satisfies_divergence_definition(const ComplexitySpec& spec) {
  switch (spec.kind) {
    case ComplexityKind::kJointEntropy:
    case ComplexityKind::kMaxEntropy:
      return true;
    case ComplexityKind::kMinEntropy:
      return false;
    case ComplexityKind::kArithmeticMean:
    case ComplexityKind::kRootMean:
    case ComplexityKind::kGeometricMean:
    case ComplexityKind::kHarmonicMean:
    case ComplexityKind::kGeneralizedMean:
      return spec.alpha < 1.0;
    case ComplexityKind::kConvex:
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (spec.weights[i] > 0.0 && satisfies_divergence_definition(spec.children[i])) {
          return true;
        }
      }
      return false;
  }
  return false;
}

namespace detail {

/// Probes a user-supplied mean function for strict monotonicity on the
/// entropy span actually in use.
inline void validate_monotone(const ComplexitySpec& spec, double lo, double hi) {
  constexpr int kProbePoints = 17;
  if (hi - lo < kZeroEntropyTol) {
    if (lo <= kZeroEntropyTol) return;  // single zero-width point, nothing to probe
    lo *= 0.9;
    hi *= 1.1;
  }
  int direction = 0;
  double prev = spec.g(lo);
  if (!std::isfinite(prev)) throw InvalidSpecError("generalized mean: g not finite on probe grid");
  for (int i = 1; i < kProbePoints; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (kProbePoints - 1);
    const double v = spec.g(x);
    if (!std::isfinite(v)) {
      throw InvalidSpecError("generalized mean: g not finite on probe grid");
    }
    if (v == prev) throw InvalidSpecError("generalized mean: g not strictly monotone");
    const int d = v > prev ? 1 : -1;
    if (direction == 0) {
      direction = d;
    } else if (d != direction) {
      throw InvalidSpecError("generalized mean: g not strictly monotone");
    }
    prev = v;
  }
}

}  // namespace detail

/// Complexity term of `spec` for a pair with the given entropic summary.
inline double complexity(const ComplexitySpec& spec, const InfoSummary& s) {
  spec.validate();
  const double m = std::min(s.h_x, s.h_y);
  const double big = std::max(s.h_x, s.h_y);
  const double a = spec.alpha;
  switch (spec.kind) {
    case ComplexityKind::kJointEntropy:
      return s.h_joint;
    case ComplexityKind::kMaxEntropy:
      return big;
    case ComplexityKind::kMinEntropy:
      return m;
    case ComplexityKind::kArithmeticMean:
      return a * m + (1.0 - a) * big;
    case ComplexityKind::kRootMean: {
      const double r = a * std::sqrt(m) + (1.0 - a) * std::sqrt(big);
      return r * r;
    }
    case ComplexityKind::kGeometricMean:
      if (a == 0.0) return big;
      if (m <= kZeroEntropyTol) return 0.0;  // continuity limit of m^a * M^(1-a)
      return std::pow(m, a) * std::pow(big, 1.0 - a);
    case ComplexityKind::kHarmonicMean:
      if (a == 0.0) return big;
      if (m <= kZeroEntropyTol) {
        throw DegenerateEntropyError("harmonic-mean complexity undefined at zero entropy");
      }
      return 1.0 / (a / m + (1.0 - a) / big);
    case ComplexityKind::kGeneralizedMean: {
      if (big - m < kZeroEntropyTol) return m;  // mean of equal points
      detail::validate_monotone(spec, m, big);
      return spec.g_inverse(a * spec.g(m) + (1.0 - a) * spec.g(big));
    }
    case ComplexityKind::kConvex: {
      if (spec.normalized_children) {
        CompensatedSum inverse_sum;
        for (std::size_t i = 0; i < spec.children.size(); ++i) {
          const double c = complexity(spec.children[i], s);
          if (c <= kZeroEntropyTol) return 0.0;
          inverse_sum.add(spec.weights[i] / c);
        }
        return 1.0 / inverse_sum.value();
      }
      CompensatedSum sum;
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        sum.add(spec.weights[i] * complexity(spec.children[i], s));
      }
      return sum.value();
    }
  }
  throw InvalidSpecError("unknown complexity kind");
}

/// One divergence evaluation: complexity, information, their difference
/// (the raw divergence) and the normalized form 1 - I/C.
struct DivergenceResult {
  double complexity = 0.0;
  double information = 0.0;
  double ib = 0.0;
  double nib = 0.0;
  bool is_equivalent_pair = false;
  bool degenerate_convention_applied = false;
  bool not_a_divergence = false;
};

// Closed conditional-entropy forms. These are the second evaluation route;
// evaluate() cross-checks against them in debug builds.

/// H(X|Y) + H(Y|X).
inline double entropy_distance(const InfoSummary& s) { return s.h_x_given_y + s.h_y_given_x; }

/// max(H(X|Y), H(Y|X)).
inline double information_distance(const InfoSummary& s) {
  return std::max(s.h_x_given_y, s.h_y_given_x);
}

/// 1 - I/H(X,Y); zero by convention when both entropies vanish.
inline double normalized_entropy_distance(const InfoSummary& s) {
  if (s.h_joint <= kZeroEntropyTol) return 0.0;
  return 1.0 - s.mi / s.h_joint;
}

/// 1 - I/max(H(X), H(Y)); zero by convention when both entropies vanish.
inline double normalized_information_distance(const InfoSummary& s) {
  const double big = std::max(s.h_x, s.h_y);
  if (big <= kZeroEntropyTol) return 0.0;
  return 1.0 - s.mi / big;
}

/// Alternate route for the normalized information distance: the larger of
/// the two conditional-entropy ratios.
inline double normalized_information_distance_ratio_form(const InfoSummary& s) {
  auto ratio = [](double cond, double marg) {
    if (marg <= kZeroEntropyTol) return 0.0;  // constant variable contributes nothing
    return cond / marg;
  };
  if (s.h_x <= kZeroEntropyTol && s.h_y <= kZeroEntropyTol) return 0.0;
  return std::max(ratio(s.h_x_given_y, s.h_x), ratio(s.h_y_given_x, s.h_y));
}

inline double ib_arithmetic_closed_form(const InfoSummary& s, double alpha) {
  const double lo = std::min(s.h_x_given_y, s.h_y_given_x);
  const double hi = std::max(s.h_x_given_y, s.h_y_given_x);
  return alpha * lo + (1.0 - alpha) * hi;
}

inline double nib_harmonic_closed_form(const InfoSummary& s, double alpha) {
  auto ratio = [](double cond, double marg) { return cond / marg; };
  const double rx = ratio(s.h_x_given_y, s.h_x);
  const double ry = ratio(s.h_y_given_x, s.h_y);
  return alpha * std::min(rx, ry) + (1.0 - alpha) * std::max(rx, ry);
}

inline DivergenceResult evaluate(const ComplexitySpec& spec, const InfoSummary& s) {
  DivergenceResult r;
  r.complexity = complexity(spec, s);
  r.information = s.mi;
  r.ib = r.complexity - r.information;
  if (r.complexity > kZeroEntropyTol) {
    r.nib = 1.0 - r.information / r.complexity;
  } else {
    r.nib = 0.0;
    r.degenerate_convention_applied = true;
  }
  r.is_equivalent_pair = is_equivalent(s);
  r.not_a_divergence = !satisfies_divergence_definition(spec);

#ifndef NDEBUG
  // Cross-check against the closed conditional-entropy route where one exists.
  if (satisfies_entropy_identities(s)) {
    switch (spec.kind) {
      case ComplexityKind::kJointEntropy:
        assert(std::abs(r.ib - entropy_distance(s)) <= kInequalityTol);
        break;
      case ComplexityKind::kMaxEntropy:
        assert(std::abs(r.ib - information_distance(s)) <= kInequalityTol);
        break;
      case ComplexityKind::kArithmeticMean:
        assert(std::abs(r.ib - ib_arithmetic_closed_form(s, spec.alpha)) <= kInequalityTol);
        break;
      case ComplexityKind::kHarmonicMean:
        if (std::min(s.h_x, s.h_y) > kZeroEntropyTol) {
          assert(std::abs(r.nib - nib_harmonic_closed_form(s, spec.alpha)) <= kInequalityTol);
        }
        break;
      default:
        break;
    }
  }
#endif
  return r;
}

/// The two ratio criteria built on the half-weight harmonic and arithmetic
/// means of the marginal entropies:
///   mean_of_ratios = (H(X|Y)/H(X) + H(Y|X)/H(Y)) / 2
///   ratio_of_sums  = (H(X|Y) + H(Y|X)) / (H(X) + H(Y))
struct RatioDivergences {
  double mean_of_ratios = 0.0;
  double ratio_of_sums = 0.0;
};

inline RatioDivergences ratio_divergences(const InfoSummary& s) {
  RatioDivergences r;
  if (s.h_x <= kZeroEntropyTol || s.h_y <= kZeroEntropyTol) {
    throw DegenerateEntropyError("ratio divergences undefined for a zero-entropy margin");
  }
  r.mean_of_ratios = 0.5 * (s.h_x_given_y / s.h_x + s.h_y_given_x / s.h_y);
  r.ratio_of_sums = (s.h_x_given_y + s.h_y_given_x) / (s.h_x + s.h_y);
  return r;
}

/// Weighted combination of divergences sharing one summary. With
/// `normalized_children` the normalized result is the weighted sum of the
/// child normalized divergences; otherwise the complexity is the weighted
/// sum of child complexities.
inline DivergenceResult convex_combination(std::span<const double> weights,
                                           std::span<const ComplexitySpec> specs,
                                           const InfoSummary& s, bool normalized_children) {
  if (weights.size() != specs.size()) {
    throw WeightMismatchError("convex_combination: weight/spec count mismatch");
  }
  return evaluate(ComplexitySpec::convex_mix(
                      std::vector<double>(weights.begin(), weights.end()),
                      std::vector<ComplexitySpec>(specs.begin(), specs.end()),
                      normalized_children),
                  s);
}

}  // namespace ibd
