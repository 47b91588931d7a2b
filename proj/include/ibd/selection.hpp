#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ibd/constants.hpp"
#include "ibd/distribution.hpp"
#include "ibd/divergence.hpp"
#include "ibd/errors.hpp"

namespace ibd {

/// Rectangular table of categorical observations with named columns.
class Dataset {
 public:
  Dataset(std::vector<std::string> columns, std::vector<std::vector<std::string>> rows)
      : columns_(std::move(columns)), rows_(std::move(rows)) {
    if (columns_.empty()) throw InvalidArgumentError("Dataset: no columns");
    if (rows_.empty()) throw InvalidArgumentError("Dataset: no rows");
    std::set<std::string> seen(columns_.begin(), columns_.end());
    if (seen.size() != columns_.size()) {
      throw InvalidArgumentError("Dataset: duplicate column names");
    }
    for (const auto& row : rows_) {
      if (row.size() != columns_.size()) {
        throw InvalidArgumentError("Dataset: ragged row");
      }
    }
  }

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t column_count() const { return columns_.size(); }
  std::size_t row_count() const { return rows_.size(); }
  const std::string& value(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == name) return i;
    }
    throw UnknownColumnError("unknown column '" + name + "'");
  }

  /// Distinct values of one column in first-appearance order.
  std::vector<std::string> column_categories(std::size_t col) const {
    std::vector<std::string> cats;
    std::set<std::string> seen;
    for (const auto& row : rows_) {
      if (seen.insert(row[col]).second) cats.push_back(row[col]);
    }
    return cats;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

namespace detail {

// Joined categories are keyed by the value tuple; the label is the values
// joined with '|' (display only, identity never relies on it).
inline std::string join_label(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += parts[i];
  }
  return out;
}

struct TupleInterner {
  std::map<std::vector<std::string>, std::size_t> index;
  std::vector<std::string> labels;

  std::size_t intern(std::vector<std::string> key) {
    auto [it, inserted] = index.try_emplace(std::move(key), labels.size());
    if (inserted) labels.push_back(join_label(it->first));
    return it->second;
  }
};

}  // namespace detail

/// Empirical joint law of two (possibly joined) column groups; joined
/// groups act as a single product-category variable.
inline JointDistribution empirical_joint(const Dataset& data, std::span<const std::size_t> x_cols,
                                         std::span<const std::size_t> y_cols) {
  if (x_cols.empty() || y_cols.empty()) {
    throw InvalidArgumentError("empirical_joint: empty column group");
  }
  detail::TupleInterner xs, ys;
  std::vector<std::pair<std::size_t, std::size_t>> coded;
  coded.reserve(data.row_count());
  for (std::size_t r = 0; r < data.row_count(); ++r) {
    std::vector<std::string> xv, yv;
    xv.reserve(x_cols.size());
    yv.reserve(y_cols.size());
    for (std::size_t c : x_cols) xv.push_back(data.value(r, c));
    for (std::size_t c : y_cols) yv.push_back(data.value(r, c));
    coded.emplace_back(xs.intern(std::move(xv)), ys.intern(std::move(yv)));
  }
  std::vector<double> counts(xs.labels.size() * ys.labels.size(), 0.0);
  for (const auto& [i, j] : coded) counts[i * ys.labels.size() + j] += 1.0;
  const double n = static_cast<double>(data.row_count());
  for (double& c : counts) c /= n;
  return JointDistribution(xs.labels, ys.labels, std::move(counts));
}

inline JointDistribution empirical_joint(const Dataset& data, const std::string& x,
                                         const std::string& y) {
  const std::size_t xi = data.column_index(x);
  const std::size_t yi = data.column_index(y);
  const std::size_t xs[1] = {xi}, ys[1] = {yi};
  return empirical_joint(data, xs, ys);
}

enum class Chosen { kX1, kX2, kTie };

inline const char* to_string(Chosen c) {
  switch (c) {
    case Chosen::kX1: return "X1";
    case Chosen::kX2: return "X2";
    case Chosen::kTie: return "tie";
  }
  return "?";
}

/// Head-to-head comparison of two candidate predictors of one target.
/// Case 1 means X2 wins (its divergence is strictly smaller), case 2 means
/// X1 is kept. Subcases follow the complexity/information trade-off:
/// case 1: (1) X2 simpler and at least as informative, (2) equally complex
/// and strictly more informative, (3) simpler and less informative with the
/// complexity saving exceeding the information loss, (4) more complex and
/// more informative with the information gain exceeding the complexity
/// cost. Case 2 mirrors these with (1) no gain on either axis, (2) simpler
/// but losing too much information, (3) more informative but too complex.
struct ComparisonVerdict {
  Chosen chosen = Chosen::kTie;
  int case_id = 2;
  int subcase = 1;
  double complexity_delta = 0.0;   // X2 minus X1
  double information_delta = 0.0;  // X2 minus X1
  std::optional<double> complexity_delta_rel;
  std::optional<double> information_delta_rel;
  DivergenceResult x1;
  DivergenceResult x2;
};

namespace detail {

inline void classify_verdict(ComparisonVerdict& v, bool normalized) {
  const double tol = kZeroEntropyTol;
  double dc = v.complexity_delta;
  double di = v.information_delta;
  if (normalized && v.complexity_delta_rel && v.information_delta_rel) {
    dc = *v.complexity_delta_rel;
    di = *v.information_delta_rel;
  }
  const bool dc_zero = std::abs(dc) <= tol;
  if (v.case_id == 1) {
    if (dc < -tol && di >= -tol) {
      v.subcase = 1;
    } else if (dc_zero && di > tol) {
      v.subcase = 2;
    } else if (dc < -tol && di < -tol) {
      v.subcase = 3;
    } else {
      v.subcase = 4;
    }
  } else {
    if (dc >= -tol && di <= tol) {
      v.subcase = 1;
    } else if (dc < -tol) {
      v.subcase = 2;
    } else {
      v.subcase = 3;
    }
  }
}

}  // namespace detail

inline ComparisonVerdict compare_candidates(const ComplexitySpec& spec, const Dataset& data,
                                            const std::string& target, const std::string& x1,
                                            const std::string& x2, bool normalized) {
  const InfoSummary s1 = summarize(empirical_joint(data, target, x1));
  const InfoSummary s2 = summarize(empirical_joint(data, target, x2));
  ComparisonVerdict v;
  v.x1 = evaluate(spec, s1);
  v.x2 = evaluate(spec, s2);
  v.complexity_delta = v.x2.complexity - v.x1.complexity;
  v.information_delta = v.x2.information - v.x1.information;
  if (v.x1.complexity > kZeroEntropyTol) {
    v.complexity_delta_rel = v.complexity_delta / v.x1.complexity;
  }
  if (v.x1.information > kZeroEntropyTol) {
    v.information_delta_rel = v.information_delta / v.x1.information;
  }
  const double value1 = normalized ? v.x1.nib : v.x1.ib;
  const double value2 = normalized ? v.x2.nib : v.x2.ib;
  if (value2 < value1 - kZeroEntropyTol) {
    v.chosen = Chosen::kX2;
    v.case_id = 1;
  } else if (value1 < value2 - kZeroEntropyTol) {
    v.chosen = Chosen::kX1;
    v.case_id = 2;
  } else {
    v.chosen = Chosen::kTie;
    v.case_id = 2;  // keep the incumbent on a tie
  }
  detail::classify_verdict(v, normalized);
  return v;
}

struct SelectionStep {
  std::string column;
  double divergence = 0.0;
  bool accepted = false;
};

struct SelectionTrace {
  std::vector<std::string> selected;
  std::vector<SelectionStep> steps;
  std::string stopping_reason;
};

/// Greedy forward selection: at each step join the best remaining column
/// onto the selected set (as a product category) and keep it if the
/// divergence to the target drops by at least `min_improvement`. Ties break
/// toward the lower column index. The starting reference is the divergence
/// of an uninformative predictor: 1 for normalized runs, and for raw runs
/// the complexity of the pair (target, constant), which the geometric and
/// harmonic kinds collapse to zero.
inline SelectionTrace forward_select(const ComplexitySpec& spec, const Dataset& data,
                                     const std::string& target, std::size_t max_features,
                                     double min_improvement, bool normalized) {
  if (min_improvement < 0.0) {
    throw InvalidArgumentError("forward_select: min_improvement must be nonnegative");
  }
  const std::size_t target_index = data.column_index(target);
  SelectionTrace trace;

  double current;
  if (normalized) {
    current = 1.0;
  } else {
    const std::size_t t[1] = {target_index};
    const InfoSummary s = summarize(empirical_joint(data, t, t));
    InfoSummary empty;  // constant covariate: zero entropy, zero information
    empty.h_x = s.h_x;
    empty.h_joint = s.h_x;
    empty.h_x_given_y = s.h_x;
    try {
      current = evaluate(spec, empty).ib;
    } catch (const DegenerateEntropyError&) {
      current = 0.0;
    }
  }

  std::vector<std::size_t> selected;
  std::vector<std::size_t> remaining;
  for (std::size_t c = 0; c < data.column_count(); ++c) {
    if (c != target_index) remaining.push_back(c);
  }
  if (max_features == 0) {
    trace.stopping_reason = "max_features";
    return trace;
  }

  while (!remaining.empty()) {
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t best_pos = 0;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      std::vector<std::size_t> joined = selected;
      joined.push_back(remaining[pos]);
      std::sort(joined.begin(), joined.end());
      const std::size_t t[1] = {target_index};
      double value;
      try {
        const InfoSummary s = summarize(empirical_joint(data, t, joined));
        const DivergenceResult r = evaluate(spec, s);
        value = normalized ? r.nib : r.ib;
      } catch (const DegenerateEntropyError&) {
        value = std::numeric_limits<double>::infinity();
      }
      if (value < best_value - kZeroEntropyTol) {
        best_value = value;
        best_pos = pos;
      }
    }
    const std::size_t best_col = remaining[best_pos];
    const double improvement = current - best_value;
    if (!(improvement >= min_improvement)) {
      trace.steps.push_back({data.columns()[best_col], best_value, false});
      trace.stopping_reason = "no_candidate_improves";
      return trace;
    }
    trace.steps.push_back({data.columns()[best_col], best_value, true});
    trace.selected.push_back(data.columns()[best_col]);
    selected.push_back(best_col);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
    current = best_value;
    if (current <= kZeroEntropyTol) {
      trace.stopping_reason = "zero_divergence";
      return trace;
    }
    if (trace.selected.size() >= max_features) {
      trace.stopping_reason = "max_features";
      return trace;
    }
  }
  trace.stopping_reason = "all_columns_selected";
  return trace;
}

struct RedundantPair {
  std::string col_a;
  std::string col_b;
  double divergence = 0.0;
  /// Bound on how much swapping the two columns can move the normalized
  /// divergence to a reference target whose entropy equals the larger of
  /// the pair's entropies; absent when no constants apply.
  std::optional<double> impact_bound;
};

namespace detail {

inline std::optional<double> redundancy_impact_bound(const ComplexitySpec& spec,
                                                     const InfoSummary& s, double d_i) {
  const double h_lo = std::min(s.h_x, s.h_y);
  const double h_hi = std::max(s.h_x, s.h_y);
  switch (spec.kind) {
    case ComplexityKind::kMaxEntropy:
      return d_i;  // metric: plain triangle difference bound
    case ComplexityKind::kJointEntropy:
      return 2.0 * d_i;  // entropy distance is within a factor two of d_I
    case ComplexityKind::kArithmeticMean:
    case ComplexityKind::kRootMean:
    case ComplexityKind::kGeometricMean:
    case ComplexityKind::kHarmonicMean: {
      if (h_hi <= kZeroEntropyTol || h_lo <= kZeroEntropyTol) return std::nullopt;
      try {
        const RedundancyConstants rc =
            redundancy_constants(spec.kind, spec.alpha, h_lo / h_hi, 1.0);
        return (1.0 + rc.kappa1) / rc.kappa2 * d_i;
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

/// Scores every unordered column pair by the normalized divergence of
/// `spec` and returns those at or below `threshold`, least divergent first.
inline std::vector<RedundantPair> detect_redundant(const ComplexitySpec& spec, const Dataset& data,
                                                   double threshold) {
  if (threshold < 0.0) {
    throw InvalidArgumentError("detect_redundant: threshold must be nonnegative");
  }
  std::vector<RedundantPair> found;
  for (std::size_t a = 0; a < data.column_count(); ++a) {
    for (std::size_t b = a + 1; b < data.column_count(); ++b) {
      const std::size_t xs[1] = {a}, ys[1] = {b};
      const InfoSummary s = summarize(empirical_joint(data, xs, ys));
      double value;
      try {
        value = evaluate(spec, s).nib;
      } catch (const DegenerateEntropyError&) {
        continue;  // undefined for this spec; cannot score the pair
      }
      if (value <= threshold) {
        RedundantPair pair;
        pair.col_a = data.columns()[a];
        pair.col_b = data.columns()[b];
        pair.divergence = value;
        pair.impact_bound =
            detail::redundancy_impact_bound(spec, s, normalized_information_distance(s));
        found.push_back(std::move(pair));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const RedundantPair& l, const RedundantPair& r) {
                     return l.divergence < r.divergence;
                   });
  return found;
}

struct QuantizationVerdict {
  ComparisonVerdict verdict;
  bool refinement_verified = false;
};

/// Compares a coarse quantization against a finer one. The fine column must
/// determine the coarse one in the data (functional dependency), otherwise
/// NotARefinementError is thrown.
inline QuantizationVerdict compare_quantizations(const ComplexitySpec& spec, const Dataset& data,
                                                 const std::string& target,
                                                 const std::string& coarse,
                                                 const std::string& fine, bool normalized) {
  const std::size_t ci = data.column_index(coarse);
  const std::size_t fi = data.column_index(fine);
  std::map<std::string, std::string> fine_to_coarse;
  for (std::size_t r = 0; r < data.row_count(); ++r) {
    const auto [it, inserted] = fine_to_coarse.try_emplace(data.value(r, fi), data.value(r, ci));
    if (!inserted && it->second != data.value(r, ci)) {
      throw NotARefinementError("column '" + fine + "' does not refine '" + coarse + "'");
    }
  }
  QuantizationVerdict out;
  out.refinement_verified = true;
  out.verdict = compare_candidates(spec, data, target, coarse, fine, normalized);
  return out;
}

}  // namespace ibd
