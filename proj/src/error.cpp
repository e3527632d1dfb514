#include "affsemi/error.hpp"

namespace affsemi {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::ZeroGap: return "ZeroGap";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotFullCone: return "NotFullCone";
    case ErrorKind::InfiniteGaps: return "InfiniteGaps";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OrderNotPredecessorFinite: return "OrderNotPredecessorFinite";
    case ErrorKind::EmptyGapSet: return "EmptyGapSet";
    case ErrorKind::InfiniteApery: return "InfiniteApery";
    case ErrorKind::NotInSemigroup: return "NotInSemigroup";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::DimensionOne: return "DimensionOne";
    case ErrorKind::NotMPD: return "NotMPD";
    case ErrorKind::NotAGluing: return "NotAGluing";
    case ErrorKind::EmptyPF: return "EmptyPF";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotPI: return "NotPI";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
  }
  return "Unknown";
}

NotClosedError::NotClosedError(Point gap, Point left, Point right)
    : Error(ErrorKind::NotClosed,
            "complement is not a monoid: gap " + gap.to_string() + " = " +
                left.to_string() + " + " + right.to_string()),
      gap_(std::move(gap)),
      left_(std::move(left)),
      right_(std::move(right)) {}

InfiniteGapsError::InfiniteGapsError(std::size_t axis, Point base, Point step)
    : Error(ErrorKind::InfiniteGaps,
            "infinitely many gaps: " + base.to_string() + " + t*" + step.to_string() +
                " is outside the semigroup for all t >= 0"),
      axis_(axis),
      base_(std::move(base)),
      step_(std::move(step)) {}

NotAGluingError::NotAGluingError(std::string reason, const std::string& detail)
    : Error(ErrorKind::NotAGluing, reason + ": " + detail), reason_(std::move(reason)) {}

HypothesisError::HypothesisError(std::string which, const std::string& detail)
    : Error(ErrorKind::HypothesisFailed, which + ": " + detail), which_(std::move(which)) {}

}  // namespace affsemi
