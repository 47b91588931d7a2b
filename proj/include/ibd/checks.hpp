#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ibd/constants.hpp"
#include "ibd/distribution.hpp"
#include "ibd/divergence.hpp"
#include "ibd/io.hpp"
#include "ibd/math.hpp"
#include "ibd/sampling.hpp"

namespace ibd {

/// Outcome of one named property check over many trials. `max_slack` is the
/// largest observed value of (lhs - rhs), so anything above the tolerance is
/// a violation and values near zero are near-tight cases.
struct CheckReport {
  std::string name;
  bool proved = true;  // false: exploratory finding, does not gate exit codes
  long long trials = 0;
  long long violations = 0;
  double max_slack = -std::numeric_limits<double>::infinity();
  std::string note;
  std::vector<Json> witnesses;

  static constexpr std::size_t kMaxWitnesses = 3;

  void observe(double slack, double tol, const std::function<Json()>& witness) {
    ++trials;
    if (slack > max_slack) max_slack = slack;
    if (slack > tol) {
      ++violations;
      if (witnesses.size() < kMaxWitnesses && witness) witnesses.push_back(witness());
    }
  }

  Json to_json() const {
    Json j{{"name", name},
           {"proved", proved},
           {"trials", trials},
           {"violations", violations},
           {"max_slack", std::isfinite(max_slack) ? Json(max_slack) : Json(nullptr)},
           {"witnesses", witnesses}};
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

/// Summaries of the three pairwise marginals of a triple, in the order
/// (X,Y), (X,Z), (Y,Z).
struct TripleSummaries {
  InfoSummary xy;
  InfoSummary xz;
  InfoSummary yz;
  double h_z = 0.0;
};

inline TripleSummaries summarize_triple(const TripleDistribution& t) {
  const PairwiseMarginals pm = pairwise_marginals(t);
  TripleSummaries s{summarize(pm.xy), summarize(pm.xz), summarize(pm.yz), 0.0};
  s.h_z = s.xz.h_y;  // Z marginal entropy, shared by both mixed pairs
  return s;
}

/// Two-sided comparability with the information distance on the provided
/// sample: k1 * D_I <= value <= k2 * D_I, where value is the raw or
/// normalized divergence of `spec` (and D_I its matching raw or normalized
/// information distance).
inline CheckReport check_comparability(const ComplexitySpec& spec,
                                       std::span<const InfoSummary> sample, double k1, double k2,
                                       bool normalized, std::string name, bool proved = true,
                                       double tol = kInequalityTol) {
  CheckReport report;
  report.name = std::move(name);
  report.proved = proved;
  for (const InfoSummary& s : sample) {
    const DivergenceResult r = evaluate(spec, s);
    const double value = normalized ? r.nib : r.ib;
    const double reference =
        normalized ? normalized_information_distance(s) : information_distance(s);
    auto witness = [&] {
      return Json{{"spec", spec.display()},  {"k1", k1},   {"k2", k2},
                  {"value", value},          {"reference", reference},
                  {"h_x", s.h_x},            {"h_y", s.h_y},
                  {"mi", s.mi}};
    };
    report.observe(k1 * reference - value, tol, witness);
    report.observe(value - k2 * reference, tol, witness);
  }
  return report;
}

/// One triangle outcome d(X,Y) <= c * (d(X,Z) + d(Y,Z)) on given summaries.
struct TriangleOutcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return lhs - rhs; }
};

inline TriangleOutcome triangle_outcome(const ComplexitySpec& spec, const InfoSummary& s_xy,
                                        const InfoSummary& s_xz, const InfoSummary& s_yz, double c,
                                        bool normalized) {
  auto value = [&](const InfoSummary& s) {
    const DivergenceResult r = evaluate(spec, s);
    return normalized ? r.nib : r.ib;
  };
  TriangleOutcome out;
  out.lhs = value(s_xy);
  out.rhs = c * (value(s_xz) + value(s_yz));
  return out;
}

/// Evaluates the triangle on all three role rotations of a triple and
/// records each as one trial.
inline void check_triangle(const ComplexitySpec& spec, const TripleDistribution& t, double c,
                           bool normalized, CheckReport& report, double tol = kInequalityTol) {
  const TripleSummaries s = summarize_triple(t);
  if (!complexity_defined(spec, s.xy) || !complexity_defined(spec, s.xz) ||
      !complexity_defined(spec, s.yz)) {
    return;  // degenerate draw, nothing to assert for this spec
  }
  const TriangleOutcome rotations[3] = {
      triangle_outcome(spec, s.xy, s.xz, s.yz, c, normalized),  // (X,Y) through Z
      triangle_outcome(spec, s.xz, s.xy, s.yz, c, normalized),  // (X,Z) through Y
      triangle_outcome(spec, s.yz, s.xy, s.xz, c, normalized),  // (Y,Z) through X
  };
  for (const TriangleOutcome& o : rotations) {
    report.observe(o.slack(), tol, [&] {
      return Json{{"spec", spec.display()}, {"c", c},         {"normalized", normalized},
                  {"lhs", o.lhs},           {"rhs", o.rhs},   {"triple", triple_to_json(t)}};
    });
  }
}

/// Sufficient condition on the complexity term for the raw divergence to
/// satisfy the strict triangle: C(X,Y) <= C(X,Z) + C(Y,Z) - H(Z).
inline bool check_complexity_triangle_condition(const ComplexitySpec& spec,
                                                const TripleDistribution& t,
                                                double tol = kInequalityTol) {
  const TripleSummaries s = summarize_triple(t);
  const double lhs = complexity(spec, s.xy);
  const double rhs = complexity(spec, s.xz) + complexity(spec, s.yz) - s.h_z;
  return lhs <= rhs + tol;
}

/// Redundancy comparison on a triple read as (Y, X1, X2): both the raw and
/// the normalized Lipschitz-style bounds.
struct RedundancyOutcome {
  double raw_lhs = 0.0;
  double raw_rhs = 0.0;
  double norm_lhs = 0.0;
  double norm_rhs = 0.0;
};

/// Throws DomainViolationError when the covariate entropies leave
/// [gamma1 * H(Y), gamma2 * H(Y)].
inline RedundancyOutcome redundancy_outcome(const ComplexitySpec& spec,
                                            const TripleDistribution& t,
                                            const RedundancyConstants& rc) {
  const PairwiseMarginals pm = pairwise_marginals(t);  // axes: (Y, X1, X2)
  const InfoSummary y_x1 = summarize(pm.xy);
  const InfoSummary y_x2 = summarize(pm.xz);
  const InfoSummary x1_x2 = summarize(pm.yz);
  const double h_y = y_x1.h_x;
  for (double h : {y_x1.h_y, y_x2.h_y}) {
    if (h < rc.gamma1 * h_y - kZeroEntropyTol || h > rc.gamma2 * h_y + kZeroEntropyTol) {
      throw DomainViolationError("covariate entropy outside [gamma1*H(Y), gamma2*H(Y)]");
    }
  }
  const DivergenceResult r1 = evaluate(spec, y_x1);
  const DivergenceResult r2 = evaluate(spec, y_x2);
  RedundancyOutcome out;
  out.raw_lhs = std::abs(r1.ib - r2.ib);
  out.raw_rhs = (1.0 + rc.kappa1) * information_distance(x1_x2);
  out.norm_lhs = std::abs(r1.nib - r2.nib);
  out.norm_rhs = (1.0 + rc.kappa1) / rc.kappa2 * normalized_information_distance(x1_x2);
  return out;
}

// ---------------------------------------------------------------------------
// Constructed witnesses: triples whose entropies are tuned so that the
// complexity triangle condition provably fails.
// ---------------------------------------------------------------------------

struct CounterexampleWitness {
  TripleDistribution triple;
  ComplexitySpec spec;
  std::string description;
  double constraint_error = 0.0;  // worst deviation from the required entropy relations
};

namespace detail {

/// Triple with X = Y (shared two-point law `xy_probs`) and Z independent
/// with law `z_probs`.
inline TripleDistribution equal_pair_with_independent_z(const std::vector<double>& xy_probs,
                                                        const std::vector<double>& z_probs) {
  const std::size_t nx = xy_probs.size(), nz = z_probs.size();
  std::vector<double> flat(nx * nx * nz, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t k = 0; k < nz; ++k) {
      flat[(i * nx + i) * nz + k] = xy_probs[i] * z_probs[k];
    }
  }
  return TripleDistribution(index_labels("x", nx), index_labels("y", nx), index_labels("z", nz),
                            std::move(flat));
}

}  // namespace detail

/// Arithmetic mean with alpha > 1/2: equal marginal entropies and
/// H(Z) < min defeat the complexity triangle condition.
inline CounterexampleWitness arithmetic_high_alpha_counterexample(double alpha) {
  if (!(alpha > 0.5 && alpha < 1.0)) {
    throw InvalidArgumentError("witness requires alpha in (1/2, 1)");
  }
  const double h_xy = std::log(2.0);
  const double h_z_target = 0.5 * h_xy;
  CounterexampleWitness w{
      detail::equal_pair_with_independent_z({0.5, 0.5}, probs_with_entropy(h_z_target, 2)),
      ComplexitySpec::arithmetic_mean(alpha),
      "equal marginal entropies with H(Z) below both",
      0.0};
  const TripleSummaries s = summarize_triple(w.triple);
  w.constraint_error = std::max(std::abs(s.xy.h_x - s.xy.h_y),
                                std::abs(s.h_z - h_z_target));
  return w;
}

/// Harmonic mean: Z independent with H(Z) = (1+alpha)/alpha * H(X) makes the
/// condition's right-hand side collapse to zero.
inline CounterexampleWitness harmonic_counterexample(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgumentError("witness requires alpha in (0, 1)");
  }
  const double h_x = std::log(2.0);
  const double h_z_target = (1.0 + alpha) / alpha * h_x;
  const auto n_z = static_cast<std::size_t>(std::ceil(std::exp(h_z_target))) + 1;
  CounterexampleWitness w{
      detail::equal_pair_with_independent_z({0.5, 0.5}, probs_with_entropy(h_z_target, n_z)),
      ComplexitySpec::harmonic_mean(alpha),
      "independent Z with H(Z) = (1+alpha)/alpha * H(X) = (1+alpha)/alpha * H(Y)",
      0.0};
  const TripleSummaries s = summarize_triple(w.triple);
  w.constraint_error =
      std::max(std::abs(s.xy.h_x - s.xy.h_y),
               std::abs(s.h_z - (1.0 + alpha) / alpha * s.xy.h_x));
  return w;
}

/// Geometric mean: Z independent with H(X) = H(Y) = (1/3)^(1/alpha) * H(Z);
/// the condition's right-hand side lands at -H(Z)/3.
inline CounterexampleWitness geometric_counterexample(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgumentError("witness requires alpha in (0, 1)");
  }
  const double h_z = std::log(4.0);
  const double h_x_target = std::pow(1.0 / 3.0, 1.0 / alpha) * h_z;
  const std::vector<double> z_probs(4, 0.25);
  CounterexampleWitness w{
      detail::equal_pair_with_independent_z(probs_with_entropy(h_x_target, 2), z_probs),
      ComplexitySpec::geometric_mean(alpha),
      "independent Z with H(X) = H(Y) = (1/3)^(1/alpha) * H(Z)",
      0.0};
  const TripleSummaries s = summarize_triple(w.triple);
  w.constraint_error =
      std::max(std::abs(s.xy.h_x - s.xy.h_y),
               std::abs(s.xy.h_x - std::pow(1.0 / 3.0, 1.0 / alpha) * s.h_z));
  return w;
}

}  // namespace ibd
