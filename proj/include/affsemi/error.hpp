#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "affsemi/point.hpp"

namespace affsemi {

/// Machine-readable error names. The CLI reports these verbatim under "error".
enum class ErrorKind {
  DimensionMismatch,
  Overflow,
  NotNatural,
  ZeroGap,
  NotClosed,
  NotFullCone,
  InfiniteGaps,
  BudgetExceeded,
  OrderNotPredecessorFinite,
  EmptyGapSet,
  InfiniteApery,
  NotInSemigroup,
  BaseMismatch,
  DimensionOne,
  NotMPD,
  NotAGluing,
  EmptyPF,
  BadParams,
  NotMinimal,
  NotPI,
  HypothesisFailed,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// A proposed gap set whose complement is not closed under addition:
/// `gap == left + right` with both summands outside the gap set.
class NotClosedError : public Error {
 public:
  NotClosedError(Point gap, Point left, Point right);

  const Point& gap() const noexcept { return gap_; }
  const Point& left() const noexcept { return left_; }
  const Point& right() const noexcept { return right_; }

 private:
  Point gap_, left_, right_;
};

/// Certificate of infinitely many gaps: `base + t * step` lies outside the
/// semigroup for every t >= 0, where step is a multiple of e_axis.
class InfiniteGapsError : public Error {
 public:
  InfiniteGapsError(std::size_t axis, Point base, Point step);

  std::size_t axis() const noexcept { return axis_; }
  const Point& base() const noexcept { return base_; }
  const Point& step() const noexcept { return step_; }

 private:
  std::size_t axis_;
  Point base_, step_;
};

/// Why a proposed gluing is invalid: one of sNotInS1, sNotInS2,
/// LatticeRankNot1, LatticeGeneratorMismatch.
class NotAGluingError : public Error {
 public:
  NotAGluingError(std::string reason, const std::string& detail);

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// A precondition of a structural check failed; `which` names it.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string which, const std::string& detail);

  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

}  // namespace affsemi
