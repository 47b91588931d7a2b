#pragma once

#include <stdexcept>
#include <string>

namespace ibd {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability entry is below -1e-12.
class NegativeMassError : public Error {
 public:
  using Error::Error;
};

/// Total probability mass differs from 1 by more than 1e-9.
class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

/// An empirical estimate was requested from zero observations.
class EmptySampleError : public Error {
 public:
  using Error::Error;
};

/// A complexity term has no finite value because an entropy vanished.
class DegenerateEntropyError : public Error {
 public:
  using Error::Error;
};

/// Weight and spec lists of a convex combination have different lengths.
class WeightMismatchError : public Error {
 public:
  using Error::Error;
};

/// A complexity spec violates its own constraints (alpha range, weights,
/// non-monotone mean function, ...).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Entropy interval with c1 <= 0 or c2 < c1.
class InvalidThetaError : public Error {
 public:
  using Error::Error;
};

/// Entropy-ratio bounds with gamma1 <= 0 or gamma2 < gamma1.
class InvalidGammaError : public Error {
 public:
  using Error::Error;
};

/// No constant is known for the requested divergence kind.
class UnsupportedKindError : public Error {
 public:
  using Error::Error;
};

/// A sampled or supplied distribution is outside the domain a bound requires.
class DomainViolationError : public Error {
 public:
  using Error::Error;
};

/// A named dataset column does not exist.
class UnknownColumnError : public Error {
 public:
  using Error::Error;
};

/// The allegedly finer column is not a deterministic refinement of the
/// coarser one in the data at hand.
class NotARefinementError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (CSV, JSON, divergence-spec grammar).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument outside the more specific categories above.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace ibd
