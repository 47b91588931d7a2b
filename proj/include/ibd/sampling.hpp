#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ibd/distribution.hpp"
#include "ibd/math.hpp"

namespace ibd {

inline std::vector<std::string> index_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

namespace detail {

/// Flat-Dirichlet draw over `n` cells: iid unit exponentials, normalized.
inline std::vector<double> dirichlet_flat(std::mt19937_64& gen, std::size_t n) {
  std::vector<double> cells(n);
  CompensatedSum total;
  for (double& c : cells) {
    c = -std::log(unit_uniform(gen));
    total.add(c);
  }
  const double t = total.value();
  for (double& c : cells) c /= t;
  return cells;
}

}  // namespace detail

/// Stream of joint tables drawn uniformly from the probability simplex,
/// deterministic per seed.
class DirichletJointSampler {
 public:
  DirichletJointSampler(std::uint64_t seed, std::size_t rows, std::size_t cols)
      : gen_(seed),
        labels_x_(index_labels("x", rows)),
        labels_y_(index_labels("y", cols)),
        rows_(rows),
        cols_(cols) {}

  JointDistribution next() {
    return JointDistribution(labels_x_, labels_y_, detail::dirichlet_flat(gen_, rows_ * cols_));
  }

 private:
  std::mt19937_64 gen_;
  std::vector<std::string> labels_x_;
  std::vector<std::string> labels_y_;
  std::size_t rows_;
  std::size_t cols_;
};

/// Stream of three-way tables drawn uniformly from the simplex,
/// deterministic per seed.
class DirichletTripleSampler {
 public:
  DirichletTripleSampler(std::uint64_t seed, std::array<std::size_t, 3> shape)
      : gen_(seed),
        labels_x_(index_labels("x", shape[0])),
        labels_y_(index_labels("y", shape[1])),
        labels_z_(index_labels("z", shape[2])),
        shape_(shape) {}

  TripleDistribution next() {
    return TripleDistribution(labels_x_, labels_y_, labels_z_,
                              detail::dirichlet_flat(gen_, shape_[0] * shape_[1] * shape_[2]));
  }

 private:
  std::mt19937_64 gen_;
  std::vector<std::string> labels_x_;
  std::vector<std::string> labels_y_;
  std::vector<std::string> labels_z_;
  std::array<std::size_t, 3> shape_;
};

inline std::vector<TripleDistribution> sample_triples(std::uint64_t seed,
                                                      std::array<std::size_t, 3> shape,
                                                      std::size_t count) {
  DirichletTripleSampler sampler(seed, shape);
  std::vector<TripleDistribution> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

/// Seeded i.i.d. draws from a fixed joint law (inverse-CDF over the cells).
inline SamplePairs draw_pairs(const JointDistribution& joint, std::uint64_t seed,
                              std::size_t count) {
  std::mt19937_64 gen(seed);
  SamplePairs data;
  data.rows.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double u = unit_uniform(gen);
    double cum = 0.0;
    std::size_t cell = joint.flat().size() - 1;
    for (std::size_t idx = 0; idx < joint.flat().size(); ++idx) {
      cum += joint.flat()[idx];
      if (u <= cum) {
        cell = idx;
        break;
      }
    }
    data.rows.emplace_back(joint.labels_x()[cell / joint.cols()],
                           joint.labels_y()[cell % joint.cols()]);
  }
  return data;
}

}  // namespace ibd
