#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace affsemi {

using Coord = std::int64_t;

/// An integer lattice vector. Arithmetic is checked: overflow and dimension
/// mismatches throw affsemi::Error instead of wrapping.
///
/// The defaulted ordering is lexicographic; it only serves as a container key.
/// Use a TermOrder when the ordering means something.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dimension) : coords_(dimension, 0) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const Coord> coords() const noexcept { return coords_; }

  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept;
  /// All coordinates nonnegative.
  bool is_natural() const noexcept;
  /// Coordinate sum.
  Coord degree() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);

  friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
  friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
  friend Point operator*(Coord k, const Point& p);

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// The i-th standard basis vector of Z^d.
Point unit_vector(std::size_t dimension, std::size_t axis);

/// Coordinatewise partial order: every p_i <= q_i.
bool partial_leq(const Point& p, const Point& q);

/// Coordinatewise minimum and maximum.
Point meet(const Point& p, const Point& q);
Point join(const Point& p, const Point& q);

/// If p is k * e_i for some k > 0, returns i; otherwise dimension().
std::size_t axis_of(const Point& p) noexcept;

void require_same_dimension(const Point& p, const Point& q);

Coord checked_add(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

}  // namespace affsemi
