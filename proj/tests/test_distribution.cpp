#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "ibd/distribution.hpp"
#include "ibd/sampling.hpp"

using namespace ibd;

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Independent oracle: plain long-double accumulation, no shared code with
// the implementation path.
double entropy_oracle(const std::vector<double>& probs) {
  long double acc = 0.0L;
  for (double p : probs) {
    if (p > 0.0) acc -= static_cast<long double>(p) * std::log(static_cast<long double>(p));
  }
  return static_cast<double>(acc);
}

// Independent oracle: mutual information in its Kullback-Leibler form,
// sum p(x,y) ln(p(x,y) / (p(x) p(y))).
double mi_kl_oracle(const JointDistribution& joint) {
  long double px[16] = {}, py[16] = {};
  for (std::size_t i = 0; i < joint.rows(); ++i)
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      px[i] += joint.at(i, j);
      py[j] += joint.at(i, j);
    }
  long double acc = 0.0L;
  for (std::size_t i = 0; i < joint.rows(); ++i)
    for (std::size_t j = 0; j < joint.cols(); ++j) {
      const long double p = joint.at(i, j);
      if (p > 0.0L) acc += p * std::log(p / (px[i] * py[j]));
    }
  return static_cast<double>(acc);
}

JointDistribution table_2x2(double p00, double p01, double p10, double p11) {
  return JointDistribution({"a", "b"}, {"c", "d"}, std::vector<double>{p00, p01, p10, p11});
}

}  // namespace

TEST_CASE("entropy matches closed forms and the summation oracle") {
  CHECK(entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(entropy(std::vector<double>{1.0, 0.0}) == 0.0);

  const std::vector<double> p{0.4, 0.35, 0.25};
  const double expected = 1.080527626604172;  // frozen from the oracle below
  CHECK(std::abs(entropy_oracle(p) - expected) < 1e-12);
  CHECK(std::abs(entropy(p) - expected) < 1e-12);
}

TEST_CASE("entropy rejects bad mass") {
  CHECK_THROWS_AS(entropy(std::vector<double>{0.5, 0.6}), NotNormalizedError);
  CHECK_THROWS_AS(entropy(std::vector<double>{1.1, -0.1}), NegativeMassError);
  // Tiny negative roundoff is clamped, not rejected.
  CHECK(entropy(std::vector<double>{1.0, -1e-13}) == 0.0);
}

TEST_CASE("summarize: diagonal, product and dependent tables") {
  const auto diag = table_2x2(0.5, 0.0, 0.0, 0.5);
  InfoSummary s = summarize(diag);
  CHECK(s.h_x == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(s.h_y == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(s.h_joint == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(s.mi == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(s.h_x_given_y == 0.0);
  CHECK(s.h_y_given_x == 0.0);
  CHECK(is_equivalent(s));

  const auto product = table_2x2(0.25, 0.25, 0.25, 0.25);
  s = summarize(product);
  CHECK(s.mi == 0.0);
  CHECK(s.h_joint == doctest::Approx(2 * kLn2).epsilon(1e-12));
  CHECK_FALSE(is_equivalent(s));

  const auto dependent = table_2x2(0.4, 0.1, 0.1, 0.4);
  s = summarize(dependent);
  CHECK(std::abs(s.mi - mi_kl_oracle(dependent)) < 1e-12);
  CHECK(std::abs(s.mi - 0.1927447570217573) < 1e-12);
}

TEST_CASE("marginals") {
  const auto sym = table_2x2(0.4, 0.1, 0.1, 0.4);
  CHECK(marginal_x(sym) == std::vector<double>{0.5, 0.5});

  const JointDistribution point({"a"}, {"b"}, std::vector<double>{1.0});
  CHECK(marginal_x(point) == std::vector<double>{1.0});
  CHECK(marginal_y(point) == std::vector<double>{1.0});

  const auto skew = table_2x2(0.2, 0.3, 0.1, 0.4);
  CHECK(marginal_x(skew) == std::vector<double>{0.5, 0.5});
  auto my = marginal_y(skew);
  CHECK(my[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(my[1] == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("pairwise marginals of a triple") {
  // Three independent uniform bits.
  std::vector<double> flat(8, 0.125);
  const TripleDistribution indep({"0", "1"}, {"0", "1"}, {"0", "1"}, flat);
  auto pm = pairwise_marginals(indep);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(pm.xy.at(i, j) == doctest::Approx(0.25).epsilon(1e-15));
      CHECK(pm.xz.at(i, j) == doctest::Approx(0.25).epsilon(1e-15));
      CHECK(pm.yz.at(i, j) == doctest::Approx(0.25).epsilon(1e-15));
    }

  // X = Y = Z uniform bit.
  std::vector<double> diag(8, 0.0);
  diag[0] = 0.5;  // (0,0,0)
  diag[7] = 0.5;  // (1,1,1)
  const TripleDistribution equal({"0", "1"}, {"0", "1"}, {"0", "1"}, diag);
  pm = pairwise_marginals(equal);
  CHECK(pm.xy.at(0, 0) == doctest::Approx(0.5));
  CHECK(pm.xy.at(0, 1) == doctest::Approx(0.0));
  CHECK(pm.xy.at(1, 1) == doctest::Approx(0.5));

  // Random table, cross-checked against direct axis summation.
  DirichletTripleSampler sampler(7, {2, 2, 2});
  for (int trial = 0; trial < 25; ++trial) {
    const TripleDistribution t = sampler.next();
    pm = pairwise_marginals(t);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        long double xy = 0.0L, xz = 0.0L, yz = 0.0L;
        for (std::size_t k = 0; k < 2; ++k) {
          xy += t.at(i, j, k);
          xz += t.at(i, k, j);
          yz += t.at(k, i, j);
        }
        CHECK(std::abs(pm.xy.at(i, j) - static_cast<double>(xy)) < 1e-15);
        CHECK(std::abs(pm.xz.at(i, j) - static_cast<double>(xz)) < 1e-15);
        CHECK(std::abs(pm.yz.at(i, j) - static_cast<double>(yz)) < 1e-15);
      }
  }
}

TEST_CASE("entropy of a triple") {
  std::vector<double> flat(8, 0.125);
  CHECK(entropy_of_triple(TripleDistribution({"0", "1"}, {"0", "1"}, {"0", "1"}, flat)) ==
        doctest::Approx(3 * kLn2).epsilon(1e-12));

  std::vector<double> diag(8, 0.0);
  diag[0] = diag[7] = 0.5;
  CHECK(entropy_of_triple(TripleDistribution({"0", "1"}, {"0", "1"}, {"0", "1"}, diag)) ==
        doctest::Approx(kLn2).epsilon(1e-12));

  DirichletTripleSampler sampler(11, {2, 2, 2});
  for (int trial = 0; trial < 25; ++trial) {
    const TripleDistribution t = sampler.next();
    std::vector<double> cells(t.flat().begin(), t.flat().end());
    CHECK(entropy_of_triple(t) == entropy(cells));  // flatten-then-entropy, exact
  }
}

TEST_CASE("from_samples") {
  SamplePairs two;
  two.rows = {{"a", "b"}, {"a", "b"}};
  auto j = from_samples(two);
  CHECK(j.rows() == 1);
  CHECK(j.cols() == 1);
  CHECK(j.at(0, 0) == 1.0);
  CHECK(j.labels_x() == std::vector<std::string>{"a"});
  CHECK(j.labels_y() == std::vector<std::string>{"b"});

  SamplePairs four;
  four.rows = {{"a", "b"}, {"a", "c"}, {"d", "b"}, {"d", "c"}};
  j = from_samples(four);
  CHECK(j.rows() == 2);
  CHECK(j.cols() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) CHECK(j.at(i, k) == 0.25);

  CHECK_THROWS_AS(from_samples(SamplePairs{}), EmptySampleError);
  SamplePairs bad;
  bad.rows = {{"", "y"}};
  CHECK_THROWS_AS(from_samples(bad), InvalidArgumentError);
}

TEST_CASE("plug-in estimate converges on a seeded sample") {
  const auto truth = table_2x2(0.4, 0.1, 0.1, 0.4);
  const SamplePairs data = draw_pairs(truth, 12345, 10000);
  const JointDistribution est = from_samples(data);
  double l1 = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) l1 += std::abs(est.at(i, j) - truth.at(i, j));
  CHECK(l1 < 0.05);
}

TEST_CASE("from_samples then summarize is deterministic") {
  const auto truth = table_2x2(0.4, 0.1, 0.1, 0.4);
  const SamplePairs data = draw_pairs(truth, 99, 500);
  const InfoSummary a = summarize(from_samples(data));
  const InfoSummary b = summarize(from_samples(data));
  CHECK(a.h_joint == b.h_joint);
  CHECK(a.mi == b.mi);
}

TEST_CASE("equivalence detection") {
  CHECK(is_equivalent(summarize(table_2x2(0.5, 0.0, 0.0, 0.5))));
  CHECK_FALSE(is_equivalent(summarize(table_2x2(0.25, 0.25, 0.25, 0.25))));

  // Permuted diagonal: a bijection between categories, so both conditional
  // entropies vanish; checked against the direct conditional computation.
  const auto permuted = table_2x2(0.0, 0.5, 0.5, 0.0);
  const InfoSummary s = summarize(permuted);
  CHECK(s.h_x_given_y <= 1e-12);
  CHECK(s.h_y_given_x <= 1e-12);
  CHECK(is_equivalent(s));
}

TEST_CASE("summary identities hold on sampled tables") {
  for (std::size_t rows = 2; rows <= 4; ++rows) {
    DirichletJointSampler sampler(1000 + rows, rows, 5 - rows + 1);
    for (int trial = 0; trial < 200; ++trial) {
      const InfoSummary s = summarize(sampler.next());
      CHECK(satisfies_entropy_identities(s, 1e-9));
      CHECK(s.mi >= 0.0);
      CHECK(s.mi <= std::min(s.h_x, s.h_y) + 1e-9);
      CHECK(s.h_x_given_y >= 0.0);
      CHECK(s.h_y_given_x >= 0.0);
    }
  }
}

TEST_CASE("summaries are invariant under category permutation") {
  std::mt19937_64 shuffler(4242);
  DirichletJointSampler sampler(505, 3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const JointDistribution j = sampler.next();
    std::vector<std::size_t> pr(j.rows()), pc(j.cols());
    std::iota(pr.begin(), pr.end(), 0u);
    std::iota(pc.begin(), pc.end(), 0u);
    std::shuffle(pr.begin(), pr.end(), shuffler);
    std::shuffle(pc.begin(), pc.end(), shuffler);
    std::vector<double> flat(j.flat().size());
    for (std::size_t i = 0; i < j.rows(); ++i)
      for (std::size_t k = 0; k < j.cols(); ++k) flat[i * j.cols() + k] = j.at(pr[i], pc[k]);
    const JointDistribution shuffled(j.labels_x(), j.labels_y(), flat);
    const InfoSummary a = summarize(j);
    const InfoSummary b = summarize(shuffled);
    CHECK(std::abs(a.h_x - b.h_x) <= 1e-12);
    CHECK(std::abs(a.h_y - b.h_y) <= 1e-12);
    CHECK(std::abs(a.h_joint - b.h_joint) <= 1e-12);
    CHECK(std::abs(a.mi - b.mi) <= 1e-12);
  }
}

TEST_CASE("mi vanishes exactly on product tables") {
  DirichletJointSampler sampler(77, 3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const JointDistribution j = sampler.next();
    const auto px = marginal_x(j);
    const auto py = marginal_y(j);
    std::vector<double> flat;
    for (double a : px)
      for (double b : py) flat.push_back(a * b);
    const InfoSummary s = summarize(JointDistribution(j.labels_x(), j.labels_y(), flat));
    CHECK(s.mi <= 1e-9);
  }
}

TEST_CASE("joint entropy and information bounds on sampled triples") {
  DirichletTripleSampler sampler(63, {2, 3, 2});
  for (int trial = 0; trial < 300; ++trial) {
    const TripleDistribution t = sampler.next();
    const PairwiseMarginals pm = pairwise_marginals(t);
    const InfoSummary xy = summarize(pm.xy);
    const InfoSummary xz = summarize(pm.xz);
    const InfoSummary yz = summarize(pm.yz);
    const double h_z = xz.h_y;
    CHECK(xy.h_joint <= xz.h_joint + yz.h_joint - h_z + 1e-9);
    CHECK(xy.mi >= xz.mi + yz.mi - h_z - 1e-9);
  }
}

TEST_CASE("triple distribution axis permutation preserves the law") {
  DirichletTripleSampler sampler(31, {2, 3, 2});
  const TripleDistribution t = sampler.next();
  const TripleDistribution p = t.permuted(2, 0, 1);
  CHECK(p.size_x() == t.size_z());
  CHECK(p.size_y() == t.size_x());
  for (std::size_t i = 0; i < t.size_x(); ++i)
    for (std::size_t j = 0; j < t.size_y(); ++j)
      for (std::size_t k = 0; k < t.size_z(); ++k) CHECK(p.at(k, i, j) == t.at(i, j, k));
  CHECK(entropy_of_triple(p) == doctest::Approx(entropy_of_triple(t)).epsilon(1e-13));
}
