#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "affsemi/affine_semigroup.hpp"
#include "affsemi/lattice.hpp"
#include "affsemi/point.hpp"

namespace affsemi {

/// A full-cone C-semigroup S = N^d \ H stored by its finite gap set H.
///
/// The conductor c has c_i = 1 + max{h_i : h in H} (0 without gaps); any point
/// with some coordinate >= c_i is a member.
class GapSemigroup {
 public:
  /// Validates that N^d \ gaps is closed under addition.
  static GapSemigroup from_gaps(std::size_t dimension, std::vector<Point> gaps);
  /// Exact gap set of a full-cone affine semigroup.
  static GapSemigroup from_generators(const AffineSemigroup& semigroup, const Budget& budget = {});

  std::size_t dimension() const noexcept { return dimension_; }
  /// Sorted by GrLex.
  const std::vector<Point>& gaps() const noexcept { return gaps_; }
  const Point& conductor() const noexcept { return conductor_; }
  /// Minimal generators, sorted by GrLex.
  const std::vector<Point>& hilbert_basis() const noexcept { return hilbert_basis_; }
  std::size_t genus() const noexcept { return gaps_.size(); }
  std::size_t embedding_dimension() const noexcept { return hilbert_basis_.size(); }

  bool contains(const Point& p) const;
  /// p is in N^d and not a member.
  bool is_gap(const Point& p) const;

  AffineSemigroup as_affine() const { return AffineSemigroup(dimension_, hilbert_basis_); }

  friend bool operator==(const GapSemigroup& a, const GapSemigroup& b) {
    return a.dimension_ == b.dimension_ && a.gaps_ == b.gaps_;
  }

 private:
  GapSemigroup(std::size_t dimension, std::vector<Point> gaps);

  void validate_closure() const;
  void compute_hilbert_basis();

  std::size_t dimension_;
  std::vector<Point> gaps_;
  Point conductor_;
  BoxIndexer gap_box_;
  std::vector<std::uint8_t> gap_bits_;
  std::vector<Point> hilbert_basis_;
};

/// Apéry set of a full-cone affine semigroup with respect to its axis rays
/// m_i e_i (m_i the smallest axis-i generator multiple).
struct AxisApery {
  std::vector<Point> rays;
  /// Sorted by GrLex.
  std::vector<Point> elements;
};

/// Throws NotFullCone when some axis has no generator on it.
AxisApery axis_apery(const AffineSemigroup& semigroup, const Budget& budget = {});

/// {m_i e_i}: the smallest generator on each axis. Throws NotFullCone.
std::vector<Point> axis_rays(const AffineSemigroup& semigroup);

}  // namespace affsemi
