#pragma once

#include <cstddef>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

#include "affsemi/point.hpp"

namespace affsemi {

// ---------------------------------------------------------------------------
// Term orders

enum class OrderKind { Lex, GrLex };

/// A monomial order on N^d. `perm[0]` is the most significant coordinate
/// for the lexicographic comparison (and the GrLex tie-break).
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<std::size_t> perm);

  static TermOrder lex(std::size_t dimension);
  static TermOrder grlex(std::size_t dimension);

  OrderKind kind() const noexcept { return kind_; }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  std::size_t dimension() const noexcept { return perm_.size(); }

  /// Every point has finitely many predecessors. Lex only qualifies in d = 1.
  bool predecessor_finite() const noexcept {
    return kind_ == OrderKind::GrLex || perm_.size() <= 1;
  }

 private:
  OrderKind kind_;
  std::vector<std::size_t> perm_;
};

std::strong_ordering order_cmp(const TermOrder& order, const Point& p, const Point& q);

/// Comparator adaptor for std::sort and friends.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Point& p, const Point& q) const {
    return order_cmp(*order, p, q) == std::strong_ordering::less;
  }
};

/// Sorts by GrLex with the identity permutation; used for every emitted list.
void sort_grlex(std::vector<Point>& points);

/// The maximum of a nonempty point set under `order`.
const Point& order_max(const TermOrder& order, std::span<const Point> points);

/// {q in N^d : q < p} in increasing order of degree, then lex.
/// Throws OrderNotPredecessorFinite for Lex with d >= 2.
void for_each_preceding(const TermOrder& order, const Point& p,
                        const std::function<void(const Point&)>& visit);
std::vector<Point> enumerate_preceding(const TermOrder& order, const Point& p);

// ---------------------------------------------------------------------------
// Boxes

/// Row-major indexing of the box [lo, hi]: the last coordinate varies fastest,
/// so the enumeration order is lexicographic.
class BoxIndexer {
 public:
  BoxIndexer(Point lo, Point hi);
  /// Box [0, hi].
  explicit BoxIndexer(const Point& hi);

  const Point& lo() const noexcept { return lo_; }
  const Point& hi() const noexcept { return hi_; }
  std::size_t volume() const noexcept { return volume_; }
  bool empty() const noexcept { return volume_ == 0; }

  bool contains(const Point& p) const;
  std::size_t index(const Point& p) const;
  Point point(std::size_t index) const;
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

 private:
  Point lo_, hi_;
  std::vector<std::size_t> strides_;
  std::size_t volume_ = 0;
};

/// Forward range over the lattice points of [lo, hi] in lexicographic order.
class BoxRange {
 public:
  class iterator {
   public:
    using value_type = Point;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const BoxRange* range, bool done);

    const Point& operator*() const { return current_; }
    const Point* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

   private:
    const BoxRange* range_ = nullptr;
    Point current_;
    bool done_ = true;
  };

  BoxRange(Point lo, Point hi);

  iterator begin() const { return iterator(this, empty_); }
  iterator end() const { return iterator(this, true); }
  const Point& lo() const noexcept { return lo_; }
  const Point& hi() const noexcept { return hi_; }

 private:
  Point lo_, hi_;
  bool empty_;
};

/// All points of [lo, hi], lexicographic.
std::vector<Point> enumerate_box(const Point& lo, const Point& hi);

// ---------------------------------------------------------------------------
// Integer lattices

/// A subgroup of Z^d stored as a row-style Hermite normal form basis:
/// pivots strictly increase by row, pivots are positive, and entries above a
/// pivot are reduced into [0, pivot).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<Point>& basis() const noexcept { return basis_; }

  bool contains(const Point& p) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  friend IntegerLattice lattice_from(std::size_t dimension, std::span<const Point> vectors);

  std::size_t dimension_;
  std::vector<Point> basis_;
};

/// Hermite normal form of the row lattice of `rows` (zero rows dropped).
std::vector<Point> hermite_normal_form(std::vector<Point> rows);

IntegerLattice lattice_from(std::size_t dimension, std::span<const Point> vectors);
inline bool lattice_member(const IntegerLattice& lattice, const Point& p) { return lattice.contains(p); }
IntegerLattice lattice_intersect(const IntegerLattice& a, const IntegerLattice& b);

}  // namespace affsemi
