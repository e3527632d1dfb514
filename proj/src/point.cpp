#include "affsemi/point.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "affsemi/error.hpp"

namespace affsemi {

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return out;
}

Coord checked_mul(Coord a, Coord b) {
  Coord out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return out;
}

void require_same_dimension(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: " + p.to_string() + " vs " + q.to_string());
  }
}

bool Point::is_zero() const noexcept {
  return std::ranges::all_of(coords_, [](Coord c) { return c == 0; });
}

bool Point::is_natural() const noexcept {
  return std::ranges::all_of(coords_, [](Coord c) { return c >= 0; });
}

Coord Point::degree() const {
  Coord sum = 0;
  for (Coord c : coords_) sum = checked_add(sum, c);
  return sum;
}

Point& Point::operator+=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = checked_add(coords_[i], other.coords_[i]);
  }
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_dimension(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    Coord out;
    if (__builtin_sub_overflow(coords_[i], other.coords_[i], &out)) {
      throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
    }
    coords_[i] = out;
  }
  return *this;
}

Point operator*(Coord k, const Point& p) {
  Point out = p;
  for (auto& c : out.coords_) c = checked_mul(k, c);
  return out;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Coord c : p.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Point unit_vector(std::size_t dimension, std::size_t axis) {
  Point e(dimension);
  e[axis] = 1;
  return e;
}

bool partial_leq(const Point& p, const Point& q) {
  require_same_dimension(p, q);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return true;
}

Point meet(const Point& p, const Point& q) {
  require_same_dimension(p, q);
  Point out(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) out[i] = std::min(p[i], q[i]);
  return out;
}

Point join(const Point& p, const Point& q) {
  require_same_dimension(p, q);
  Point out(p.dimension());
  for (std::size_t i = 0; i < p.dimension(); ++i) out[i] = std::max(p[i], q[i]);
  return out;
}

std::size_t axis_of(const Point& p) noexcept {
  std::size_t found = p.dimension();
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < 0) return p.dimension();
    if (p[i] > 0) {
      if (found != p.dimension()) return p.dimension();
      found = i;
    }
  }
  return found;
}

}  // namespace affsemi
