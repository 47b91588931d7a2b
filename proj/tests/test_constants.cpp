#include <doctest.h>

#include <cmath>

#include "ibd/constants.hpp"

using namespace ibd;

TEST_CASE("theta interval validation") {
  CHECK_THROWS_AS(ThetaInterval(0.0, 1.0), InvalidThetaError);
  CHECK_THROWS_AS(ThetaInterval(2.0, 1.0), InvalidThetaError);
  CHECK(ThetaInterval(0.5, 2.0).ratio() == doctest::Approx(4.0));
}

TEST_CASE("comparability constants: arithmetic kind is interval-free") {
  const BoundConstants bc =
      comparability_constants(ComplexityKind::kArithmeticMean, 0.5, std::nullopt);
  REQUIRE(bc.k1_a.has_value());
  REQUIRE(bc.k1_b.has_value());
  CHECK(*bc.k1_a == doctest::Approx(0.5));
  CHECK(*bc.k1_b == doctest::Approx(0.5));
  CHECK_FALSE(bc.k1_c.has_value());
  CHECK(bc.k2 == 1.0);
}

TEST_CASE("comparability constants: root kind") {
  // alpha = 0 collapses every mean onto the maximum entropy, so the global
  // constant is exactly one.
  const BoundConstants at_zero =
      comparability_constants(ComplexityKind::kRootMean, 0.0, ThetaInterval(0.5, 2.0));
  REQUIRE(at_zero.k1_c.has_value());
  CHECK(*at_zero.k1_c == doctest::Approx(1.0));
  const BoundConstants global = comparability_constants(ComplexityKind::kRootMean, 0.0,
                                                        std::nullopt);
  REQUIRE(global.k1_c.has_value());
  CHECK(*global.k1_c == doctest::Approx(1.0));

  const ThetaInterval theta(0.25, 1.0);  // ratio 4
  const BoundConstants bc = comparability_constants(ComplexityKind::kRootMean, 0.4, theta);
  REQUIRE(bc.k1_a.has_value());
  CHECK(*bc.k1_a == doctest::Approx(0.4 / 2.0));  // min weight over sqrt(ratio)
  REQUIRE(bc.k1_b.has_value());                   // 4 < 1/0.16
  CHECK(*bc.k1_b == doctest::Approx(1.0 - 0.4 * 2.0).epsilon(1e-12));
  REQUIRE(bc.k1_c.has_value());
  CHECK(*bc.k1_c == doctest::Approx(0.6 * (1.0 - 0.4 / (1.5 * 1.5))).epsilon(1e-12));

  // Condition fails: ratio 9 >= 1/(0.4^2).
  const BoundConstants no_b =
      comparability_constants(ComplexityKind::kRootMean, 0.4, ThetaInterval(0.25, 2.25));
  CHECK_FALSE(no_b.k1_b.has_value());
}

TEST_CASE("comparability constants: geometric kind") {
  const ThetaInterval theta(0.25, 1.0);  // ratio 4
  const BoundConstants bc = comparability_constants(ComplexityKind::kGeometricMean, 0.5, theta);
  REQUIRE(bc.k1_a.has_value());
  CHECK(*bc.k1_a == doctest::Approx(0.5 / 4.0));
  CHECK_FALSE(bc.k1_b.has_value());  // ratio 4 >= 1/alpha = 2
  REQUIRE(bc.k1_c.has_value());
  CHECK(*bc.k1_c == doctest::Approx((std::pow(4.0, 0.5) - 1.0) / 3.0).epsilon(1e-12));
  CHECK(*bc.k1_c == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const BoundConstants with_b =
      comparability_constants(ComplexityKind::kGeometricMean, 0.2, ThetaInterval(0.5, 1.5));
  REQUIRE(with_b.k1_b.has_value());  // ratio 3 < 1/0.2
  CHECK(*with_b.k1_b == doctest::Approx(1.0 - 0.2 * 3.0).epsilon(1e-12));
}

TEST_CASE("comparability constants: harmonic kind") {
  const ThetaInterval theta(0.5, 1.0);  // ratio 2
  const BoundConstants bc = comparability_constants(ComplexityKind::kHarmonicMean, 0.2, theta);
  REQUIRE(bc.k1_a.has_value());
  CHECK(*bc.k1_a == doctest::Approx(0.2 / 4.0));
  REQUIRE(bc.k1_b.has_value());  // 2 < 1/sqrt(0.2) ~ 2.236
  CHECK(*bc.k1_b == doctest::Approx(1.0 - 0.2 * 4.0).epsilon(1e-12));
  REQUIRE(bc.k1_c.has_value());
  CHECK(*bc.k1_c == doctest::Approx(1.0 / (1.0 + 0.2 * 2.0 / 0.8)).epsilon(1e-12));

  CHECK_THROWS_AS(comparability_constants(ComplexityKind::kJointEntropy, 0.5, std::nullopt),
                  UnsupportedKindError);
  CHECK_THROWS_AS(comparability_constants(ComplexityKind::kArithmeticMean, 1.0, std::nullopt),
                  InvalidSpecError);
}

TEST_CASE("relaxed triangle constants") {
  CHECK(relaxed_triangle_constant(ComplexityKind::kArithmeticMean, 0.75, false) ==
        doctest::Approx(3.0));
  CHECK(relaxed_triangle_constant(ComplexityKind::kArithmeticMean, 0.3, false) == 1.0);
  CHECK(relaxed_triangle_constant(ComplexityKind::kArithmeticMean, 0.75, true) ==
        doctest::Approx(4.0));
  CHECK(relaxed_triangle_constant(ComplexityKind::kRootMean, 0.5, false) == doctest::Approx(2.0));
  CHECK(relaxed_triangle_constant(ComplexityKind::kRootMean, 0.75, false) ==
        doctest::Approx(16.0));
  CHECK(relaxed_triangle_constant(ComplexityKind::kHarmonicMean, 0.25, true) ==
        doctest::Approx(4.0));
  CHECK(relaxed_triangle_constant(ComplexityKind::kJointEntropy, 0.0, false) == 1.0);
  CHECK_THROWS_AS(relaxed_triangle_constant(ComplexityKind::kGeometricMean, 0.5, false),
                  UnsupportedKindError);
  CHECK_THROWS_AS(relaxed_triangle_constant(ComplexityKind::kHarmonicMean, 0.5, false),
                  UnsupportedKindError);
}

TEST_CASE("redundancy constants tables") {
  RedundancyConstants rc = redundancy_constants(ComplexityKind::kArithmeticMean, 0.5, 1.0, 1.0);
  CHECK(rc.kappa1 == doctest::Approx(0.5));
  CHECK(rc.kappa2 == doctest::Approx(1.0));
  CHECK(rc.gamma12 == doctest::Approx(1.0));

  rc = redundancy_constants(ComplexityKind::kGeometricMean, 0.5, 1.0, 1.0);
  CHECK(rc.kappa1 == doctest::Approx(1.0));
  CHECK(rc.kappa2 == doctest::Approx(1.0));

  rc = redundancy_constants(ComplexityKind::kHarmonicMean, 0.5, 1.0, 1.0);
  CHECK(rc.kappa1 == doctest::Approx(0.5));
  CHECK(rc.kappa2 == doctest::Approx(1.0));

  rc = redundancy_constants(ComplexityKind::kRootMean, 0.5, 1.0, 1.0);
  CHECK(rc.kappa1 == doctest::Approx(0.25 + 0.25));
  CHECK(rc.kappa2 == doctest::Approx(1.0));

  // gamma12 uses the tighter of gamma1 and 1/gamma2.
  rc = redundancy_constants(ComplexityKind::kArithmeticMean, 0.5, 0.5, 2.0);
  CHECK(rc.gamma12 == doctest::Approx(0.5));
  CHECK(rc.kappa2 == doctest::Approx(0.5 + 0.5 * 0.5));

  CHECK_THROWS_AS(redundancy_constants(ComplexityKind::kArithmeticMean, 0.5, 0.0, 1.0),
                  InvalidGammaError);
  CHECK_THROWS_AS(redundancy_constants(ComplexityKind::kArithmeticMean, 0.5, 2.0, 1.0),
                  InvalidGammaError);
  CHECK_THROWS_AS(redundancy_constants(ComplexityKind::kJointEntropy, 0.5, 1.0, 1.0),
                  UnsupportedKindError);
}
