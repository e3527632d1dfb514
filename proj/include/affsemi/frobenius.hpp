#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "affsemi/gap_semigroup.hpp"
#include "affsemi/lattice.hpp"

namespace affsemi {

/// Gaps f with f + a in S for every minimal generator a. Sorted by GrLex.
std::vector<Point> pseudo_frobenius(const GapSemigroup& s);

/// max of the gap set under `order`. Throws EmptyGapSet.
Point frobenius_element(const GapSemigroup& s, const TermOrder& order);

/// For a gap x, some f in PF(S) with f - x in S; none for members.
std::optional<Point> cover_witness(const GapSemigroup& s, const Point& x);

/// Gaps g with F - g not in S (points outside N^d are not in S). Sorted by GrLex.
std::vector<Point> omega(const GapSemigroup& s, const TermOrder& order);

struct FrobeniusReport {
  std::vector<Point> pf;
  std::size_t betti_type = 0;
  Point frobenius;
  /// PF \ {F}
  std::vector<Point> pf_prime;
  /// Ω \ S
  std::vector<Point> omega_extra;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool almost_symmetric = false;
  bool irreducible = false;
  /// Every f in pf_prime satisfies f <= F coordinatewise.
  bool pf_prime_below_frobenius = false;
};

FrobeniusReport classify(const GapSemigroup& s, const TermOrder& order);

/// Ap(S, E) = {b in S : b - a not in S for all a in E}. Sorted by GrLex.
/// Finite iff E holds a positive multiple of every unit vector; otherwise
/// throws InfiniteApery. Throws NotInSemigroup unless E is inside S \ {0}.
std::vector<Point> apery(const GapSemigroup& s, const std::vector<Point>& elements);

/// The relative ideal generated by `generators` over `base`: the union of g + S.
class RelativeIdeal {
 public:
  RelativeIdeal(std::shared_ptr<const GapSemigroup> base, std::vector<Point> generators);

  const GapSemigroup& base() const noexcept { return *base_; }
  const std::shared_ptr<const GapSemigroup>& base_ptr() const noexcept { return base_; }
  const std::vector<Point>& generators() const noexcept { return generators_; }
  bool contains(const Point& p) const;

 private:
  std::shared_ptr<const GapSemigroup> base_;
  std::vector<Point> generators_;
};

/// S itself, generated by 0.
RelativeIdeal whole_ideal(std::shared_ptr<const GapSemigroup> base);
/// S \ {0}, generated by the minimal generators.
RelativeIdeal maximal_ideal(std::shared_ptr<const GapSemigroup> base);

/// z + J ⊆ I. Throws BaseMismatch when the ideals live over different monoids.
bool ideal_difference_member(const RelativeIdeal& i, const RelativeIdeal& j, const Point& z);

/// (S - S*) \ S. Sorted by GrLex.
std::vector<Point> pf_via_ideal(const GapSemigroup& s);

struct CardinalityIdentity {
  /// |H(S) \ PF'(S)|
  std::size_t lhs;
  /// |{g in S : g <= F}|
  std::size_t rhs;
};

CardinalityIdentity cardinality_identity(const GapSemigroup& s, const TermOrder& order);

}  // namespace affsemi
