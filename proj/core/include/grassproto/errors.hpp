#pragma once

#include <stdexcept>
#include <string>

namespace grassproto {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input matrix does not have full column rank. Carries the numerical rank.
class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, int rank)
      : Error(what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

/// Ambient dimensions (or other shapes) of two operands do not agree.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Log map requested at the cut locus (a principal angle of pi/2).
class LogUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Tangent vector handed to exp_map is not horizontal at the base point.
class NotHorizontalError : public Error {
 public:
  using Error::Error;
};

/// Operation requires at least one data point.
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Weight vector contains a nonpositive entry or has the wrong length.
class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

/// Operation requires all subspaces to share one dimension and they do not.
class UnequalDimensionsError : public Error {
 public:
  using Error::Error;
};

/// Requested more cluster centers than there are data points.
class TooManyCentersError : public Error {
 public:
  using Error::Error;
};

/// Matrix fails the orthonormal-columns invariant of Subspace.
class NotOrthonormalError : public Error {
 public:
  using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's documented domain.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace grassproto
