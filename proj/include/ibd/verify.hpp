#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ibd/checks.hpp"
#include "ibd/constants.hpp"
#include "ibd/sampling.hpp"

namespace ibd {

struct VerifyOptions {
  std::uint64_t seed = 1;
  long long trials = 1000;
};

namespace detail {

struct SampledPairs {
  std::vector<JointDistribution> joints;
  std::vector<InfoSummary> summaries;
};

inline SampledPairs sample_mixed_joints(std::uint64_t seed, long long count) {
  SampledPairs out;
  out.joints.reserve(count);
  out.summaries.reserve(count);
  // Cycle through table shapes 2x2 .. 5x5.
  std::vector<DirichletJointSampler> samplers;
  std::size_t shape_index = 0;
  for (std::size_t r = 2; r <= 5; ++r)
    for (std::size_t c = 2; c <= 5; ++c) samplers.emplace_back(seed + 31 * r + c, r, c);
  for (long long i = 0; i < count; ++i) {
    out.joints.push_back(samplers[shape_index].next());
    out.summaries.push_back(summarize(out.joints.back()));
    shape_index = (shape_index + 1) % samplers.size();
  }
  return out;
}

struct FilteredSample {
  std::vector<InfoSummary> summaries;
  long long attempts = 0;
};

template <typename Pred>
FilteredSample sample_summaries_until(std::uint64_t seed, long long quota, long long max_attempts,
                                      Pred pred) {
  FilteredSample out;
  DirichletJointSampler small(seed, 2, 2);
  DirichletJointSampler medium(seed + 1, 3, 3);
  while (static_cast<long long>(out.summaries.size()) < quota && out.attempts < max_attempts) {
    const InfoSummary s =
        summarize((out.attempts % 4 == 3) ? medium.next() : small.next());
    ++out.attempts;
    if (pred(s)) out.summaries.push_back(s);
  }
  return out;
}

inline std::vector<ComplexitySpec> divergence_spec_set() {
  std::vector<ComplexitySpec> specs{ComplexitySpec::joint_entropy(),
                                    ComplexitySpec::max_entropy()};
  for (double a : {0.1, 0.5, 0.9}) {
    specs.push_back(ComplexitySpec::arithmetic_mean(a));
    specs.push_back(ComplexitySpec::root_mean(a));
    specs.push_back(ComplexitySpec::geometric_mean(a));
    specs.push_back(ComplexitySpec::harmonic_mean(a));
  }
  return specs;
}

inline std::vector<InfoSummary> equivalent_pair_summaries() {
  std::vector<InfoSummary> out;
  out.push_back(summarize(JointDistribution({"a", "b"}, {"c", "d"},
                                            std::vector<double>{0.5, 0.0, 0.0, 0.5})));
  out.push_back(summarize(JointDistribution({"a", "b"}, {"c", "d"},
                                            std::vector<double>{0.0, 0.5, 0.5, 0.0})));
  out.push_back(summarize(JointDistribution({"a", "b", "c"}, {"u", "v", "w"},
                                            std::vector<double>{0.2, 0, 0, 0, 0.5, 0, 0, 0, 0.3})));
  out.push_back(summarize(JointDistribution({"a"}, {"b"}, std::vector<double>{1.0})));
  return out;
}

inline JointDistribution product_of_marginals(const JointDistribution& j) {
  const auto px = marginal_x(j);
  const auto py = marginal_y(j);
  std::vector<double> flat;
  flat.reserve(px.size() * py.size());
  for (double a : px)
    for (double b : py) flat.push_back(a * b);
  return JointDistribution(j.labels_x(), j.labels_y(), std::move(flat));
}

inline void check_metric_suite(const ComplexitySpec& spec, bool normalized, const char* name,
                               std::uint64_t seed, long long trials,
                               std::vector<CheckReport>& checks) {
  CheckReport report;
  report.name = name;
  // Zero on equivalent pairs.
  for (const InfoSummary& s : equivalent_pair_summaries()) {
    const DivergenceResult r = evaluate(spec, s);
    report.observe(normalized ? r.nib : r.ib, kInequalityTol, nullptr);
  }
  // Strict triangle over sampled triples, all rotations.
  DirichletTripleSampler small(seed, {2, 2, 2});
  for (long long i = 0; i < trials; ++i) check_triangle(spec, small.next(), 1.0, normalized, report);
  DirichletTripleSampler medium(seed + 1, {3, 3, 3});
  for (long long i = 0; i < trials / 10 + 1; ++i) {
    check_triangle(spec, medium.next(), 1.0, normalized, report);
  }
  checks.push_back(std::move(report));
}

inline void check_relaxed_triangle(const ComplexitySpec& spec, double c, bool normalized,
                                   const std::string& name, bool proved, std::uint64_t seed,
                                   long long trials, std::vector<CheckReport>& checks,
                                   const std::string& note = "") {
  CheckReport report;
  report.name = name;
  report.proved = proved;
  report.note = note;
  DirichletTripleSampler sampler(seed, {2, 2, 2});
  for (long long i = 0; i < trials; ++i) check_triangle(spec, sampler.next(), c, normalized, report);
  checks.push_back(std::move(report));
}

inline const char* kind_slug(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::kArithmeticMean: return "arithmetic";
    case ComplexityKind::kRootMean: return "root";
    case ComplexityKind::kGeometricMean: return "geometric";
    case ComplexityKind::kHarmonicMean: return "harmonic";
    default: return "other";
  }
}

}  // namespace detail

/// Runs every named check over seeded samples. Checks marked `proved`
/// assert inequalities the library treats as laws; the remaining checks are
/// exploratory findings and never gate exit codes.
inline std::vector<CheckReport> run_verification(const VerifyOptions& options) {
  std::vector<CheckReport> checks;
  const long long trials = options.trials;
  const std::uint64_t seed = options.seed;
  const std::array<ComplexityKind, 4> mean_kinds = {
      ComplexityKind::kArithmeticMean, ComplexityKind::kRootMean, ComplexityKind::kGeometricMean,
      ComplexityKind::kHarmonicMean};
  const std::array<double, 3> alpha_probe = {0.1, 0.5, 0.9};

  const detail::SampledPairs pairs = detail::sample_mixed_joints(seed, trials);
  const std::vector<InfoSummary> equivalents = detail::equivalent_pair_summaries();

  // --- entropy identities -------------------------------------------------
  {
    CheckReport r;
    r.name = "entropy-identities";
    for (const InfoSummary& s : pairs.summaries) {
      r.observe(std::abs(s.h_joint - (s.h_x + s.h_y_given_x)), kInequalityTol, nullptr);
      r.observe(std::abs(s.h_joint - (s.h_y + s.h_x_given_y)), kInequalityTol, nullptr);
      r.observe(std::abs(s.mi - (s.h_x + s.h_y - s.h_joint)), kInequalityTol, nullptr);
      r.observe(-s.mi, kInequalityTol, nullptr);
      r.observe(s.mi - std::min(s.h_x, s.h_y), kInequalityTol, nullptr);
    }
    checks.push_back(std::move(r));
  }

  // --- mutual information vanishes exactly on product laws ----------------
  {
    CheckReport r;
    r.name = "mi-zero-iff-product";
    for (long long i = 0; i < trials; i += 10) {
      const JointDistribution& j = pairs.joints[i];
      const JointDistribution prod = detail::product_of_marginals(j);
      r.observe(summarize(prod).mi, kInequalityTol, [&] { return joint_to_json(prod); });
    }
    // Converse at tolerance: tiny information forces the table close to the
    // product of its marginals in L1 (Pinsker direction).
    for (std::size_t i = 0; i < pairs.summaries.size(); ++i) {
      if (pairs.summaries[i].mi > kZeroEntropyTol) continue;
      const JointDistribution& j = pairs.joints[i];
      const JointDistribution prod = detail::product_of_marginals(j);
      double l1 = 0.0;
      for (std::size_t cell = 0; cell < j.flat().size(); ++cell) {
        l1 += std::abs(j.flat()[cell] - prod.flat()[cell]);
      }
      r.observe(l1, 1.5e-6, [&] { return joint_to_json(j); });
    }
    checks.push_back(std::move(r));
  }

  // --- symmetry under role exchange ---------------------------------------
  {
    CheckReport r;
    r.name = "divergence-symmetry";
    const auto specs = detail::divergence_spec_set();
    for (const InfoSummary& s : pairs.summaries) {
      const InfoSummary t = swapped(s);
      for (const ComplexitySpec& spec : specs) {
        if (!complexity_defined(spec, s)) continue;
        const DivergenceResult a = evaluate(spec, s);
        const DivergenceResult b = evaluate(spec, t);
        r.observe(std::abs(a.ib - b.ib), kZeroEntropyTol, nullptr);
        r.observe(std::abs(a.nib - b.nib), kZeroEntropyTol, nullptr);
      }
    }
    checks.push_back(std::move(r));
  }

  // --- nonnegativity and zero-iff-equivalence ------------------------------
  {
    CheckReport r;
    r.name = "nonnegativity-zero-iff-equivalent";
    const auto specs = detail::divergence_spec_set();
    auto examine = [&](const InfoSummary& s, const Json& where) {
      for (const ComplexitySpec& spec : specs) {
        if (!complexity_defined(spec, s)) continue;
        const DivergenceResult d = evaluate(spec, s);
        r.observe(-d.ib, kZeroEntropyTol, [&] { return where; });
        const bool zero = d.ib <= kInequalityTol;
        r.observe(zero == d.is_equivalent_pair ? -1.0 : 1.0, 0.0, [&] {
          return Json{{"spec", spec.display()}, {"ib", d.ib}, {"where", where}};
        });
      }
    };
    for (std::size_t i = 0; i < pairs.summaries.size(); ++i) {
      examine(pairs.summaries[i], Json("sampled table"));
    }
    for (const InfoSummary& s : equivalents) examine(s, Json("constructed equivalent pair"));
    checks.push_back(std::move(r));
  }

  // --- the pure minimum is not a divergence (expected failures) ------------
  {
    CheckReport r;
    r.name = "min-complexity-fails-zero-iff";
    r.proved = false;
    r.note = "demonstrates that the minimum-entropy complexity violates the zero-iff-"
             "equivalence requirement; violations here are the expected demonstrations";
    // X a deterministic but non-injective function of Y.
    const JointDistribution collapse(
        {"x0", "x1"}, {"y0", "y1", "y2"},
        std::vector<double>{1.0 / 3, 1.0 / 3, 0.0, 0.0, 0.0, 1.0 / 3});
    const InfoSummary s = summarize(collapse);
    const DivergenceResult d = evaluate(ComplexitySpec::min_entropy(), s);
    r.observe((d.ib <= kInequalityTol && !d.is_equivalent_pair) ? 1.0 : -1.0, 0.0,
              [&] { return joint_to_json(collapse); });
    checks.push_back(std::move(r));
  }

  // --- complexity ordering chain -------------------------------------------
  {
    CheckReport r;
    r.name = "complexity-ordering-chain";
    for (const InfoSummary& s : pairs.summaries) {
      for (int step = 0; step <= 9; ++step) {
        const double alpha = 0.1 * step;
        const double d = complexity(ComplexitySpec::harmonic_mean(alpha), s);
        const double p = complexity(ComplexitySpec::geometric_mean(alpha), s);
        const double rt = complexity(ComplexitySpec::root_mean(alpha), s);
        const double a = complexity(ComplexitySpec::arithmetic_mean(alpha), s);
        const double i = complexity(ComplexitySpec::max_entropy(), s);
        const double e = complexity(ComplexitySpec::joint_entropy(), s);
        r.observe(d - p, kZeroEntropyTol, nullptr);
        r.observe(p - rt, kZeroEntropyTol, nullptr);
        r.observe(rt - a, kZeroEntropyTol, nullptr);
        r.observe(a - i, kZeroEntropyTol, nullptr);
        r.observe(i - e, kZeroEntropyTol, nullptr);
      }
    }
    checks.push_back(std::move(r));
  }

  // --- increasing-alpha direction (kept as a finding) -----------------------
  {
    CheckReport r;
    r.name = "alpha-direction-increasing";
    r.proved = false;
    r.note = "asserts C(alpha) <= C(alpha') for alpha <= alpha'; observed mean complexities "
             "are non-increasing in alpha, so every strict pair violates; recorded as a "
             "finding rather than silently flipping the assertion";
    for (long long i = 0; i < trials; i += 10) {
      const InfoSummary& s = pairs.summaries[i];
      for (ComplexityKind kind : mean_kinds) {
        for (int step = 0; step < 9; ++step) {
          const double lo = 0.1 * step;
          const double hi = 0.1 * (step + 1);
          const double c_lo = complexity(mean_spec(kind, lo), s);
          const double c_hi = complexity(mean_spec(kind, hi), s);
          r.observe(c_lo - c_hi, kZeroEntropyTol, [&] {
            return Json{{"kind", detail::kind_slug(kind)}, {"alpha", lo},     {"alpha_next", hi},
                        {"c_alpha", c_lo},                 {"c_next", c_hi},  {"h_x", s.h_x},
                        {"h_y", s.h_y}};
          });
        }
      }
    }
    checks.push_back(std::move(r));
  }

  // --- upper bounds of the raw distances -----------------------------------
  {
    CheckReport r;
    r.name = "distance-upper-bounds";
    for (const InfoSummary& s : pairs.summaries) {
      r.observe(entropy_distance(s) - s.h_joint, kZeroEntropyTol, nullptr);
      r.observe(information_distance(s) - std::max(s.h_x, s.h_y), kZeroEntropyTol, nullptr);
    }
    for (long long i = 0; i < trials; i += 10) {
      const InfoSummary s = summarize(detail::product_of_marginals(pairs.joints[i]));
      r.observe(std::abs(entropy_distance(s) - s.h_joint), kZeroEntropyTol, nullptr);
      r.observe(std::abs(information_distance(s) - std::max(s.h_x, s.h_y)), kZeroEntropyTol,
                nullptr);
    }
    checks.push_back(std::move(r));
  }

  // --- normalized divergences live in [0,1] --------------------------------
  {
    CheckReport r;
    r.name = "normalized-unit-range";
    const auto specs = detail::divergence_spec_set();
    for (const InfoSummary& s : pairs.summaries) {
      for (const ComplexitySpec& spec : specs) {
        if (!complexity_defined(spec, s)) continue;
        const double nib = evaluate(spec, s).nib;
        r.observe(-nib, kZeroEntropyTol, nullptr);
        r.observe(nib - 1.0, kZeroEntropyTol, nullptr);
      }
    }
    checks.push_back(std::move(r));
  }

  // --- metric suites --------------------------------------------------------
  detail::check_metric_suite(ComplexitySpec::joint_entropy(), false, "metric-entropy-distance",
                             seed + 101, trials, checks);
  detail::check_metric_suite(ComplexitySpec::max_entropy(), false, "metric-information-distance",
                             seed + 102, trials, checks);
  detail::check_metric_suite(ComplexitySpec::joint_entropy(), true,
                             "metric-normalized-entropy-distance", seed + 103, trials, checks);
  detail::check_metric_suite(ComplexitySpec::max_entropy(), true,
                             "metric-normalized-information-distance", seed + 104, trials, checks);

  // --- triangle inequalities of the mean family ----------------------------
  for (double alpha : {0.1, 0.3, 0.5}) {
    detail::check_relaxed_triangle(ComplexitySpec::arithmetic_mean(alpha), 1.0, false,
                                   "arithmetic-triangle-alpha-" + std::to_string(alpha).substr(0, 4),
                                   true, seed + 110, trials, checks);
  }
  for (double alpha : {0.6, 0.75, 0.9}) {
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kArithmeticMean, alpha),
        relaxed_triangle_constant(ComplexityKind::kArithmeticMean, alpha, false), false,
        "arithmetic-relaxed-triangle-alpha-" + std::to_string(alpha).substr(0, 4), true,
        seed + 111, trials, checks);
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kArithmeticMean, alpha),
        relaxed_triangle_constant(ComplexityKind::kArithmeticMean, alpha, true), true,
        "arithmetic-normalized-relaxed-triangle-alpha-" + std::to_string(alpha).substr(0, 4), true,
        seed + 112, trials, checks);
  }
  for (double alpha : {0.1, 0.3, 0.5, 0.6, 0.75, 0.9}) {
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kRootMean, alpha),
        relaxed_triangle_constant(ComplexityKind::kRootMean, alpha, false), false,
        "root-relaxed-triangle-alpha-" + std::to_string(alpha).substr(0, 4), true, seed + 113,
        trials, checks);
  }
  for (double alpha : {0.25, 0.5, 0.75}) {
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kRootMean, alpha),
        relaxed_triangle_constant(ComplexityKind::kRootMean, alpha, true), true,
        "root-normalized-relaxed-triangle-alpha-" + std::to_string(alpha).substr(0, 4), true,
        seed + 114, trials, checks);
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kHarmonicMean, alpha),
        relaxed_triangle_constant(ComplexityKind::kHarmonicMean, alpha, true), true,
        "harmonic-normalized-relaxed-triangle-alpha-" + std::to_string(alpha).substr(0, 4), true,
        seed + 115, trials, checks);
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kGeometricMean, alpha), 1.0, false,
        "geometric-strict-triangle-search-alpha-" + std::to_string(alpha).substr(0, 4), false,
        seed + 116, trials, checks,
        "no global triangle factor is known for the geometric kind; this searches for strict-"
        "triangle violations and records them as findings");
  }
  for (double alpha : {0.6, 0.75, 0.9}) {
    detail::check_relaxed_triangle(
        mean_spec(ComplexityKind::kArithmeticMean, alpha), 1.0, false,
        "arithmetic-strict-triangle-search-alpha-" + std::to_string(alpha).substr(0, 4), false,
        seed + 117, trials, checks,
        "whether the raw arithmetic divergence with alpha above one half satisfies the strict "
        "triangle is open; violations here are findings, not failures");
  }

  // --- comparability with the information distance -------------------------
  {
    checks.push_back(check_comparability(ComplexitySpec::joint_entropy(), pairs.summaries, 1.0,
                                         2.0, false, "entropy-distance-comparability"));
    checks.push_back(check_comparability(ComplexitySpec::joint_entropy(), pairs.summaries, 1.0,
                                         2.0, true, "normalized-entropy-distance-comparability"));
  }
  {
    CheckReport r;
    r.name = "mean-family-upper-comparability";
    for (ComplexityKind kind : mean_kinds) {
      for (double alpha : alpha_probe) {
        const CheckReport sub = check_comparability(mean_spec(kind, alpha), pairs.summaries, 0.0,
                                                    1.0, false, "upper");
        r.trials += sub.trials;
        r.violations += sub.violations;
        r.max_slack = std::max(r.max_slack, sub.max_slack);
      }
    }
    checks.push_back(std::move(r));
  }

  // --- sandwich bounds on entropy-restricted domains -----------------------
  {
    const ThetaInterval theta(0.3, 1.0);
    auto in_theta = [&](double v) { return v >= theta.c1 && v <= theta.c2; };
    const long long cap = 600 * trials;
    const detail::FilteredSample upsilon = detail::sample_summaries_until(
        seed + 130, trials, cap, [&](const InfoSummary& s) {
          return in_theta(s.h_x) && in_theta(s.h_y) && in_theta(s.mi);
        });
    const detail::FilteredSample gamma2 = detail::sample_summaries_until(
        seed + 131, trials, cap,
        [&](const InfoSummary& s) { return in_theta(s.h_x) && in_theta(s.h_y); });
    for (ComplexityKind kind : mean_kinds) {
      CheckReport r;
      r.name = std::string("comparability-sandwich-") + detail::kind_slug(kind);
      r.note = "interval [0.3,1.0] nats; joint-domain sample kept " +
               std::to_string(upsilon.summaries.size()) + " of " +
               std::to_string(upsilon.attempts) + " draws, marginal-domain sample kept " +
               std::to_string(gamma2.summaries.size()) + " of " +
               std::to_string(gamma2.attempts);
      for (double alpha : alpha_probe) {
        const BoundConstants bc = comparability_constants(kind, alpha, theta);
        const ComplexitySpec spec = mean_spec(kind, alpha);
        auto merge = [&](const CheckReport& sub) {
          r.trials += sub.trials;
          r.violations += sub.violations;
          r.max_slack = std::max(r.max_slack, sub.max_slack);
          for (const Json& w : sub.witnesses) {
            if (r.witnesses.size() < CheckReport::kMaxWitnesses) r.witnesses.push_back(w);
          }
        };
        if (bc.k1_a) {
          merge(check_comparability(spec, upsilon.summaries, *bc.k1_a, bc.k2, false, "a"));
        }
        if (bc.k1_b) {
          merge(check_comparability(spec, gamma2.summaries, *bc.k1_b, bc.k2, false, "b"));
        }
        if (bc.k1_c) {
          merge(check_comparability(spec, gamma2.summaries, *bc.k1_c, bc.k2, false, "c"));
        }
        if (kind == ComplexityKind::kRootMean) {
          // Interval-free fallback constant, valid on every pair.
          const BoundConstants global = comparability_constants(kind, alpha, std::nullopt);
          merge(check_comparability(spec, pairs.summaries, *global.k1_c, 1.0, false, "global"));
        }
        if (kind == ComplexityKind::kArithmeticMean) {
          // The arithmetic constants are interval-free; exercise them unfiltered too.
          merge(check_comparability(spec, pairs.summaries, *bc.k1_a, 1.0, false, "unfiltered-a"));
          merge(check_comparability(spec, pairs.summaries, *bc.k1_b, 1.0, false, "unfiltered-b"));
        }
      }
      checks.push_back(std::move(r));
    }
  }

  // --- complexity-side triangle condition ----------------------------------
  {
    CheckReport r;
    r.name = "complexity-triangle-condition";
    DirichletTripleSampler sampler(seed + 140, {2, 2, 2});
    std::vector<ComplexitySpec> specs{ComplexitySpec::joint_entropy(),
                                      ComplexitySpec::max_entropy(),
                                      ComplexitySpec::arithmetic_mean(0.25),
                                      ComplexitySpec::arithmetic_mean(0.5)};
    for (long long i = 0; i < trials; ++i) {
      const TripleDistribution t = sampler.next();
      const TripleSummaries s = summarize_triple(t);
      for (const ComplexitySpec& spec : specs) {
        const double lhs = complexity(spec, s.xy);
        const double rhs = complexity(spec, s.xz) + complexity(spec, s.yz) - s.h_z;
        r.observe(lhs - rhs, kInequalityTol,
                  [&] { return Json{{"spec", spec.display()}, {"triple", triple_to_json(t)}}; });
      }
    }
    checks.push_back(std::move(r));
  }

  // --- joint-entropy and shared-information bounds on triples ---------------
  {
    CheckReport r;
    r.name = "triple-entropy-bounds";
    DirichletTripleSampler small(seed + 145, {2, 2, 2});
    DirichletTripleSampler medium(seed + 146, {3, 3, 3});
    for (long long i = 0; i < trials; ++i) {
      const TripleDistribution t = (i % 10 == 9) ? medium.next() : small.next();
      const TripleSummaries s = summarize_triple(t);
      auto witness = [&] { return Json{{"triple", triple_to_json(t)}}; };
      r.observe(s.xy.h_joint - (s.xz.h_joint + s.yz.h_joint - s.h_z), kInequalityTol, witness);
      r.observe((s.xz.mi + s.yz.mi - s.h_z) - s.xy.mi, kInequalityTol, witness);
    }
    checks.push_back(std::move(r));
  }

  // --- constructed counterexamples to the triangle condition ---------------
  {
    CheckReport r;
    r.name = "triangle-condition-counterexamples";
    auto reproduce = [&](const CounterexampleWitness& w) {
      r.observe(w.constraint_error, 1e-6, [&] { return triple_to_json(w.triple); });
      const bool violated = !check_complexity_triangle_condition(w.spec, w.triple);
      r.observe(violated ? -1.0 : 1.0, 0.0, [&] {
        return Json{{"spec", w.spec.display()}, {"description", w.description}};
      });
    };
    reproduce(arithmetic_high_alpha_counterexample(0.75));
    reproduce(harmonic_counterexample(0.5));
    reproduce(harmonic_counterexample(0.25));
    reproduce(geometric_counterexample(0.5));
    reproduce(geometric_counterexample(0.25));
    checks.push_back(std::move(r));
  }

  // --- information-difference bound on triples ------------------------------
  {
    CheckReport r;
    r.name = "information-difference-bound";
    DirichletTripleSampler sampler(seed + 150, {2, 2, 2});
    for (long long i = 0; i < trials; ++i) {
      const TripleDistribution t = sampler.next();
      const TripleSummaries s = summarize_triple(t);  // axes (Y, X1, X2)
      const double lhs = std::abs(s.xy.mi - s.xz.mi);
      const double rhs = information_distance(s.yz);
      r.observe(lhs - rhs, kInequalityTol,
                [&] { return Json{{"triple", triple_to_json(t)}}; });
    }
    checks.push_back(std::move(r));
  }

  // --- redundancy bounds -----------------------------------------------------
  {
    const double gamma1 = 0.5, gamma2 = 2.0;
    const long long cap = 40 * trials;
    DirichletTripleSampler sampler(seed + 160, {2, 2, 2});
    std::vector<TripleDistribution> kept;
    long long attempts = 0;
    while (static_cast<long long>(kept.size()) < trials && attempts < cap) {
      TripleDistribution t = sampler.next();
      ++attempts;
      const TripleSummaries s = summarize_triple(t);
      const double h_y = s.xy.h_x;
      const bool ok = s.xy.h_y >= gamma1 * h_y && s.xy.h_y <= gamma2 * h_y &&
                      s.xz.h_y >= gamma1 * h_y && s.xz.h_y <= gamma2 * h_y;
      if (ok) kept.push_back(std::move(t));
    }
    for (ComplexityKind kind : mean_kinds) {
      CheckReport r;
      r.name = std::string("redundancy-bound-") + detail::kind_slug(kind);
      r.note = "entropy-ratio window [0.5, 2.0]; kept " + std::to_string(kept.size()) + " of " +
               std::to_string(attempts) + " sampled triples";
      for (double alpha : alpha_probe) {
        const RedundancyConstants rc = redundancy_constants(kind, alpha, gamma1, gamma2);
        const ComplexitySpec spec = mean_spec(kind, alpha);
        for (const TripleDistribution& t : kept) {
          const RedundancyOutcome o = redundancy_outcome(spec, t, rc);
          auto witness = [&] {
            return Json{{"spec", spec.display()}, {"triple", triple_to_json(t)}};
          };
          r.observe(o.raw_lhs - o.raw_rhs, kInequalityTol, witness);
          r.observe(o.norm_lhs - o.norm_rhs, kInequalityTol, witness);
        }
      }
      checks.push_back(std::move(r));
    }
  }

  return checks;
}

inline bool has_proved_violations(const std::vector<CheckReport>& checks) {
  for (const CheckReport& c : checks) {
    if (c.proved && c.violations > 0) return true;
  }
  return false;
}

inline Json verification_report(const VerifyOptions& options,
                                const std::vector<CheckReport>& checks) {
  Json out;
  out["seed"] = options.seed;
  out["trials"] = options.trials;
  Json list = Json::array();
  long long proved_violations = 0;
  for (const CheckReport& c : checks) {
    list.push_back(c.to_json());
    if (c.proved) proved_violations += c.violations;
  }
  out["checks"] = list;
  out["proved_violations"] = proved_violations;
  return out;
}

}  // namespace ibd
