#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "affsemi/lattice.hpp"
#include "affsemi/point.hpp"

namespace affsemi {

/// Work limits for the exact algorithms. Exceeding one raises BudgetExceeded.
struct Budget {
  /// Apéry elements explored while computing gap sets.
  std::size_t max_apery = 100'000;
  /// Cells of a dense membership table.
  std::size_t max_cells = 100'000'000;
  /// Generator multisets enumerated by slice_decomposition.
  std::size_t max_multisets = 1'000'000;
};

/// A finitely generated submonoid of N^d given by generators. The generator
/// list is kept sorted and free of duplicates; it need not be minimal unless
/// the value came from minimalize().
class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t dimension, std::vector<Point> generators);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Point>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  friend bool operator==(const AffineSemigroup&, const AffineSemigroup&) = default;

 private:
  std::size_t dimension_;
  std::vector<Point> generators_;
};

/// Dense membership table over the box [0, extent] built by the descent
/// recurrence p in S iff p = 0 or p - g in S for some generator g.
/// Immutable after construction, so concurrent reads are safe.
class MembershipTable {
 public:
  MembershipTable(std::span<const Point> generators, Point extent,
                  std::size_t max_cells = Budget{}.max_cells);

  const Point& extent() const noexcept { return box_.hi(); }
  /// p lies in the table's box (negative points count as covered: they are never members).
  bool covers(const Point& p) const;
  /// Throws std::out_of_range for a natural point beyond the extent.
  bool contains(const Point& p) const;

 private:
  BoxIndexer box_;
  std::vector<std::uint8_t> cells_;
};

/// Membership oracle that regrows its table on demand. Not thread-safe; give
/// each thread its own oracle, or pre-size a MembershipTable.
class MembershipOracle {
 public:
  explicit MembershipOracle(const AffineSemigroup& semigroup, std::size_t max_cells = Budget{}.max_cells);

  bool contains(const Point& p);
  /// Makes the table cover [0, hi] so later queries inside it do not rebuild.
  void reserve(const Point& hi);
  const MembershipTable& table() const noexcept { return table_; }

 private:
  std::vector<Point> generators_;
  std::size_t max_cells_;
  MembershipTable table_;
};

bool is_member(const AffineSemigroup& semigroup, const Point& p);

/// The unique minimal generating system of the monoid generated by `generators`.
AffineSemigroup minimalize(std::size_t dimension, std::vector<Point> generators);
inline AffineSemigroup minimalize(const AffineSemigroup& s) { return minimalize(s.dimension(), s.generators()); }

struct Multiplicity {
  /// Coordinatewise infimum of S \ {0}.
  Point infimum;
  /// infimum itself is a nonzero member.
  bool attained;
};

Multiplicity multiplicity(const AffineSemigroup& semigroup);

/// S ∩ {x_axis = level} as a union of translates shift + F, where F is the
/// face semigroup generated by the generators with x_axis = 0. Points of the
/// face drop coordinate `axis`.
struct SliceDecomposition {
  std::size_t axis;
  Coord level;
  std::vector<Point> face_generators;
  std::vector<Point> shifts;
};

SliceDecomposition slice_decomposition(const AffineSemigroup& semigroup, std::size_t axis, Coord level,
                                       std::size_t max_multisets = Budget{}.max_multisets);

/// Drops coordinate `axis`.
Point project_out(const Point& p, std::size_t axis);

}  // namespace affsemi
