#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ibd/errors.hpp"
#include "ibd/math.hpp"

namespace ibd {

namespace detail {

/// Validates a probability vector in place: entries in [-1e-12, 0) are
/// clamped to zero, anything lower is rejected, total mass must be 1
/// within 1e-9.
inline void validate_mass(std::span<double> probs, const char* what) {
  for (double& p : probs) {
    if (p < kNegativeMassTol) {
      throw NegativeMassError(std::string(what) + ": negative probability entry");
    }
    if (p < 0.0) p = 0.0;
  }
  const double total = compensated_total(probs);
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw NotNormalizedError(std::string(what) + ": probabilities sum to " +
                             std::to_string(total));
  }
}

inline double clamp_small_negative(double v) {
  return (v < 0.0 && v >= -kZeroEntropyTol) ? 0.0 : v;
}

}  // namespace detail

/// Shannon entropy in nats of a probability vector. 0 * ln 0 counts as 0.
inline double entropy(std::span<const double> probs) {
  std::vector<double> copy(probs.begin(), probs.end());
  detail::validate_mass(copy, "entropy");
  CompensatedSum acc;
  for (double p : copy) {
    if (p > 0.0) acc.add(-p * std::log(p));
  }
  return std::max(0.0, acc.value());
}

/// The six entropic quantities of one pair of categorical vectors, in nats.
struct InfoSummary {
  double h_x = 0.0;
  double h_y = 0.0;
  double h_joint = 0.0;
  double h_x_given_y = 0.0;
  double h_y_given_x = 0.0;
  double mi = 0.0;
};

/// Summary with the roles of X and Y exchanged.
inline InfoSummary swapped(const InfoSummary& s) {
  return InfoSummary{s.h_y, s.h_x, s.h_joint, s.h_y_given_x, s.h_x_given_y, s.mi};
}

/// True when both chain-rule identities and the mutual-information identity
/// hold within `tol`.
inline bool satisfies_entropy_identities(const InfoSummary& s, double tol = kNormalizationTol) {
  return std::abs(s.h_joint - (s.h_x + s.h_y_given_x)) <= tol &&
         std::abs(s.h_joint - (s.h_y + s.h_x_given_y)) <= tol &&
         std::abs(s.mi - (s.h_x + s.h_y - s.h_joint)) <= tol;
}

/// Exact joint law of a pair (X,Y) of categorical variables. Row i is the
/// i-th X category, column j the j-th Y category. Immutable once built.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> labels_x, std::vector<std::string> labels_y,
                    std::vector<double> flat_row_major)
      : labels_x_(std::move(labels_x)),
        labels_y_(std::move(labels_y)),
        probs_(std::move(flat_row_major)) {
    if (labels_x_.empty() || labels_y_.empty()) {
      throw InvalidArgumentError("JointDistribution: need at least one category per axis");
    }
    if (probs_.size() != labels_x_.size() * labels_y_.size()) {
      throw InvalidArgumentError("JointDistribution: probability table shape mismatch");
    }
    detail::validate_mass(probs_, "JointDistribution");
  }

  JointDistribution(std::vector<std::string> labels_x, std::vector<std::string> labels_y,
                    const std::vector<std::vector<double>>& rows)
      : JointDistribution(std::move(labels_x), std::move(labels_y), flatten(rows)) {}

  std::size_t rows() const { return labels_x_.size(); }
  std::size_t cols() const { return labels_y_.size(); }
  double at(std::size_t i, std::size_t j) const { return probs_[i * cols() + j]; }
  std::span<const double> flat() const { return probs_; }
  const std::vector<std::string>& labels_x() const { return labels_x_; }
  const std::vector<std::string>& labels_y() const { return labels_y_; }

 private:
  static std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    if (rows.empty()) throw InvalidArgumentError("JointDistribution: empty table");
    const std::size_t width = rows.front().size();
    for (const auto& row : rows) {
      if (row.size() != width) {
        throw InvalidArgumentError("JointDistribution: ragged probability table");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  std::vector<std::string> labels_x_;
  std::vector<std::string> labels_y_;
  std::vector<double> probs_;
};

/// Exact joint law of a categorical triple (X,Y,Z), stored flat with
/// index ((i * |Y|) + j) * |Z| + k.
class TripleDistribution {
 public:
  TripleDistribution(std::vector<std::string> labels_x, std::vector<std::string> labels_y,
                     std::vector<std::string> labels_z, std::vector<double> flat)
      : labels_x_(std::move(labels_x)),
        labels_y_(std::move(labels_y)),
        labels_z_(std::move(labels_z)),
        probs_(std::move(flat)) {
    if (labels_x_.empty() || labels_y_.empty() || labels_z_.empty()) {
      throw InvalidArgumentError("TripleDistribution: need at least one category per axis");
    }
    if (probs_.size() != labels_x_.size() * labels_y_.size() * labels_z_.size()) {
      throw InvalidArgumentError("TripleDistribution: probability table shape mismatch");
    }
    detail::validate_mass(probs_, "TripleDistribution");
  }

  TripleDistribution(std::vector<std::string> labels_x, std::vector<std::string> labels_y,
                     std::vector<std::string> labels_z,
                     const std::vector<std::vector<std::vector<double>>>& cube)
      : TripleDistribution(std::move(labels_x), std::move(labels_y), std::move(labels_z),
                           flatten(cube)) {}

  std::size_t size_x() const { return labels_x_.size(); }
  std::size_t size_y() const { return labels_y_.size(); }
  std::size_t size_z() const { return labels_z_.size(); }
  double at(std::size_t i, std::size_t j, std::size_t k) const {
    return probs_[(i * size_y() + j) * size_z() + k];
  }
  std::span<const double> flat() const { return probs_; }
  const std::vector<std::string>& labels_x() const { return labels_x_; }
  const std::vector<std::string>& labels_y() const { return labels_y_; }
  const std::vector<std::string>& labels_z() const { return labels_z_; }

  /// Same law with the axes reordered; `order` is a permutation of {0,1,2}.
  TripleDistribution permuted(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t order[3] = {a, b, c};
    const std::vector<std::string>* labels[3] = {&labels_x_, &labels_y_, &labels_z_};
    const std::size_t dims[3] = {size_x(), size_y(), size_z()};
    std::vector<double> flat(probs_.size(), 0.0);
    const std::size_t n1 = dims[order[1]], n2 = dims[order[2]];
    for (std::size_t i = 0; i < size_x(); ++i) {
      for (std::size_t j = 0; j < size_y(); ++j) {
        for (std::size_t k = 0; k < size_z(); ++k) {
          const std::size_t idx[3] = {i, j, k};
          flat[(idx[order[0]] * n1 + idx[order[1]]) * n2 + idx[order[2]]] = at(i, j, k);
        }
      }
    }
    return TripleDistribution(*labels[order[0]], *labels[order[1]], *labels[order[2]],
                              std::move(flat));
  }

 private:
  static std::vector<double> flatten(const std::vector<std::vector<std::vector<double>>>& cube) {
    std::vector<double> flat;
    if (cube.empty()) throw InvalidArgumentError("TripleDistribution: empty table");
    const std::size_t ny = cube.front().size();
    for (const auto& plane : cube) {
      if (plane.size() != ny) throw InvalidArgumentError("TripleDistribution: ragged table");
      const std::size_t nz = plane.front().size();
      for (const auto& row : plane) {
        if (row.size() != nz) throw InvalidArgumentError("TripleDistribution: ragged table");
        flat.insert(flat.end(), row.begin(), row.end());
      }
    }
    return flat;
  }

  std::vector<std::string> labels_x_;
  std::vector<std::string> labels_y_;
  std::vector<std::string> labels_z_;
  std::vector<double> probs_;
};

/// Paired categorical observations, one (x,y) per row.
struct SamplePairs {
  std::vector<std::pair<std::string, std::string>> rows;
};

inline std::vector<double> marginal_x(const JointDistribution& joint) {
  std::vector<double> marg(joint.rows(), 0.0);
  for (std::size_t i = 0; i < joint.rows(); ++i) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < joint.cols(); ++j) acc.add(joint.at(i, j));
    marg[i] = acc.value();
  }
  return marg;
}

inline std::vector<double> marginal_y(const JointDistribution& joint) {
  std::vector<double> marg(joint.cols(), 0.0);
  for (std::size_t j = 0; j < joint.cols(); ++j) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < joint.rows(); ++i) acc.add(joint.at(i, j));
    marg[j] = acc.value();
  }
  return marg;
}

/// All six entropic quantities of a joint law. The mutual information is
/// h_x + h_y - h_joint clamped into [0, min(h_x, h_y)]; conditional
/// entropies are h_joint minus the opposite marginal entropy, with
/// sub-1e-12 negative roundoff clamped to zero.
inline InfoSummary summarize(const JointDistribution& joint) {
  InfoSummary s;
  s.h_x = entropy(marginal_x(joint));
  s.h_y = entropy(marginal_y(joint));
  s.h_joint = entropy(joint.flat());
  s.h_x_given_y = detail::clamp_small_negative(s.h_joint - s.h_y);
  s.h_y_given_x = detail::clamp_small_negative(s.h_joint - s.h_x);
  double mi = detail::clamp_small_negative(s.h_x + s.h_y - s.h_joint);
  const double cap = std::min(s.h_x, s.h_y);
  if (mi > cap && mi <= cap + kZeroEntropyTol) mi = cap;
  s.mi = mi;
  return s;
}

/// True when each vector predicts the other with probability one, i.e.
/// both conditional entropies vanish.
inline bool is_equivalent(const InfoSummary& s) {
  return s.h_x_given_y <= kZeroEntropyTol && s.h_y_given_x <= kZeroEntropyTol;
}

struct PairwiseMarginals {
  JointDistribution xy;
  JointDistribution xz;
  JointDistribution yz;
};

inline PairwiseMarginals pairwise_marginals(const TripleDistribution& t) {
  const std::size_t nx = t.size_x(), ny = t.size_y(), nz = t.size_z();
  std::vector<CompensatedSum> xy(nx * ny), xz(nx * nz), yz(ny * nz);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t k = 0; k < nz; ++k) {
        const double p = t.at(i, j, k);
        xy[i * ny + j].add(p);
        xz[i * nz + k].add(p);
        yz[j * nz + k].add(p);
      }
    }
  }
  auto values = [](const std::vector<CompensatedSum>& sums) {
    std::vector<double> v(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) v[i] = sums[i].value();
    return v;
  };
  return PairwiseMarginals{
      JointDistribution(t.labels_x(), t.labels_y(), values(xy)),
      JointDistribution(t.labels_x(), t.labels_z(), values(xz)),
      JointDistribution(t.labels_y(), t.labels_z(), values(yz)),
  };
}

/// Entropy in nats of the flattened three-way table.
inline double entropy_of_triple(const TripleDistribution& t) { return entropy(t.flat()); }

/// Plug-in (maximum-likelihood) estimate of the joint law. Categories are
/// ordered by first appearance in the data.
inline JointDistribution from_samples(const SamplePairs& data) {
  if (data.rows.empty()) throw EmptySampleError("from_samples: no observations");
  std::vector<std::string> labels_x, labels_y;
  std::unordered_map<std::string, std::size_t> index_x, index_y;
  auto intern = [](const std::string& value, std::vector<std::string>& labels,
                   std::unordered_map<std::string, std::size_t>& index) {
    if (value.empty()) {
      throw InvalidArgumentError("from_samples: empty category name");
    }
    auto [it, inserted] = index.try_emplace(value, labels.size());
    if (inserted) labels.push_back(value);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> coded;
  coded.reserve(data.rows.size());
  for (const auto& [x, y] : data.rows) {
    coded.emplace_back(intern(x, labels_x, index_x), intern(y, labels_y, index_y));
  }
  std::vector<double> counts(labels_x.size() * labels_y.size(), 0.0);
  for (const auto& [i, j] : coded) counts[i * labels_y.size() + j] += 1.0;
  const double n = static_cast<double>(data.rows.size());
  for (double& c : counts) c /= n;
  return JointDistribution(std::move(labels_x), std::move(labels_y), std::move(counts));
}

}  // namespace ibd
