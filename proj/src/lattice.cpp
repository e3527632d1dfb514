#include "affsemi/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

void require_dimension(const TermOrder& order, const Point& p) {
  if (p.dimension() != order.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "point " + p.to_string() + " does not match order dimension " +
                    std::to_string(order.dimension()));
  }
}

std::strong_ordering lex_cmp(std::span<const std::size_t> perm, const Point& p, const Point& q) {
  for (std::size_t i : perm) {
    if (p[i] != q[i]) return p[i] <=> q[i];
  }
  return std::strong_ordering::equal;
}

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void subtract_multiple(Point& row, Coord k, const Point& pivot_row) {
  if (k != 0) row -= k * pivot_row;
}

}  // namespace

// ---------------------------------------------------------------------------
// Term orders

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> perm)
    : kind_(kind), perm_(std::move(perm)) {
  std::vector<std::size_t> sorted = perm_;
  std::ranges::sort(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorKind::BadParams, "term order permutation is not a permutation");
  }
}

TermOrder TermOrder::lex(std::size_t dimension) {
  std::vector<std::size_t> perm(dimension);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return TermOrder(OrderKind::Lex, std::move(perm));
}

TermOrder TermOrder::grlex(std::size_t dimension) {
  std::vector<std::size_t> perm(dimension);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return TermOrder(OrderKind::GrLex, std::move(perm));
}

std::strong_ordering order_cmp(const TermOrder& order, const Point& p, const Point& q) {
  require_dimension(order, p);
  require_dimension(order, q);
  if (order.kind() == OrderKind::GrLex) {
    if (auto c = p.degree() <=> q.degree(); c != 0) return c;
  }
  return lex_cmp(order.perm(), p, q);
}

void sort_grlex(std::vector<Point>& points) {
  if (points.empty()) return;
  const TermOrder order = TermOrder::grlex(points.front().dimension());
  std::ranges::sort(points, OrderLess{&order});
}

const Point& order_max(const TermOrder& order, std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyGapSet, "maximum of an empty set");
  return *std::ranges::max_element(points, OrderLess{&order});
}

namespace {

// Compositions of `remaining` into coords [axis, d), last coordinate absorbing the rest.
void compositions(Point& current, std::size_t axis, Coord remaining,
                  const std::function<void(const Point&)>& visit) {
  const std::size_t d = current.dimension();
  if (axis + 1 == d) {
    current[axis] = remaining;
    visit(current);
    return;
  }
  for (Coord c = remaining; c >= 0; --c) {
    current[axis] = c;
    compositions(current, axis + 1, remaining - c, visit);
  }
  current[axis] = 0;
}

}  // namespace

void for_each_preceding(const TermOrder& order, const Point& p,
                        const std::function<void(const Point&)>& visit) {
  require_dimension(order, p);
  if (!p.is_natural()) throw Error(ErrorKind::NotNatural, "point " + p.to_string() + " is not in N^d");
  if (!order.predecessor_finite()) {
    throw Error(ErrorKind::OrderNotPredecessorFinite,
                "lex order in dimension " + std::to_string(order.dimension()) +
                    " has points with infinitely many predecessors");
  }
  const std::size_t d = p.dimension();
  if (d == 0) return;
  if (order.kind() == OrderKind::Lex) {
    for (Coord t = 0; t < p[0]; ++t) visit(Point{t});
    return;
  }
  const Coord top = p.degree();
  Point current(d);
  for (Coord degree = 0; degree < top; ++degree) compositions(current, 0, degree, visit);
  compositions(current, 0, top, [&](const Point& q) {
    if (order_cmp(order, q, p) == std::strong_ordering::less) visit(q);
  });
}

std::vector<Point> enumerate_preceding(const TermOrder& order, const Point& p) {
  std::vector<Point> out;
  for_each_preceding(order, p, [&](const Point& q) { out.push_back(q); });
  return out;
}

// ---------------------------------------------------------------------------
// Boxes

BoxIndexer::BoxIndexer(const Point& hi) : BoxIndexer(Point(hi.dimension()), hi) {}

BoxIndexer::BoxIndexer(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dimension(lo_, hi_);
  const std::size_t d = lo_.dimension();
  strides_.assign(d, 1);
  volume_ = 1;
  for (std::size_t i = d; i-- > 0;) {
    if (hi_[i] < lo_[i]) {
      volume_ = 0;
      return;
    }
    strides_[i] = volume_;
    const auto extent = static_cast<std::size_t>(hi_[i] - lo_[i]) + 1;
    if (__builtin_mul_overflow(volume_, extent, &volume_)) {
      throw Error(ErrorKind::Overflow, "box volume overflows");
    }
  }
}

bool BoxIndexer::contains(const Point& p) const {
  require_same_dimension(p, lo_);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

std::size_t BoxIndexer::index(const Point& p) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    idx += static_cast<std::size_t>(p[i] - lo_[i]) * strides_[i];
  }
  return idx;
}

Point BoxIndexer::point(std::size_t index) const {
  Point p = lo_;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    p[i] += static_cast<Coord>(index / strides_[i]);
    index %= strides_[i];
  }
  return p;
}

BoxRange::BoxRange(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dimension(lo_, hi_);
  empty_ = !partial_leq(lo_, hi_);
}

BoxRange::iterator::iterator(const BoxRange* range, bool done)
    : range_(range), current_(range->lo()), done_(done) {}

BoxRange::iterator& BoxRange::iterator::operator++() {
  const std::size_t d = current_.dimension();
  for (std::size_t i = d; i-- > 0;) {
    if (current_[i] < range_->hi()[i]) {
      ++current_[i];
      return *this;
    }
    current_[i] = range_->lo()[i];
  }
  done_ = true;
  return *this;
}

std::vector<Point> enumerate_box(const Point& lo, const Point& hi) {
  BoxRange range(lo, hi);
  return {range.begin(), range.end()};
}

// ---------------------------------------------------------------------------
// Integer lattices

std::vector<Point> hermite_normal_form(std::vector<Point> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().dimension();
  for (const auto& r : rows) require_same_dimension(r, rows.front());

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` among rows [pivot_row, end).
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        subtract_multiple(rows[i], floor_div(rows[i][col], rows[pivot_row][col]), rows[pivot_row]);
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) rows[pivot_row] = Coord{-1} * rows[pivot_row];
    for (std::size_t k = 0; k < pivot_row; ++k) {
      subtract_multiple(rows[k], floor_div(rows[k][col], rows[pivot_row][col]), rows[pivot_row]);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntegerLattice lattice_from(std::size_t dimension, std::span<const Point> vectors) {
  IntegerLattice out(dimension);
  std::vector<Point> rows;
  for (const auto& v : vectors) {
    if (v.dimension() != dimension) {
      throw Error(ErrorKind::DimensionMismatch, "vector " + v.to_string() + " is not in Z^" + std::to_string(dimension));
    }
    if (!v.is_zero()) rows.push_back(v);
  }
  out.basis_ = hermite_normal_form(std::move(rows));
  return out;
}

bool IntegerLattice::contains(const Point& p) const {
  if (p.dimension() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "point " + p.to_string() + " is not in Z^" + std::to_string(dimension_));
  }
  Point rest = p;
  std::size_t col = 0;
  for (const auto& row : basis_) {
    while (row[col] == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (rest[col] % row[col] != 0) return false;
    subtract_multiple(rest, rest[col] / row[col], row);
    ++col;
  }
  return rest.is_zero();
}

IntegerLattice lattice_intersect(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "lattices live in different dimensions");
  }
  const std::size_t d = a.dimension();
  // Rows [v, v] for v in a and [w, 0] for w in b; the echelon rows with a zero
  // left half span {(0, x) : x in a and -x in b}.
  std::vector<Point> stacked;
  for (const auto& v : a.basis()) {
    Point row(2 * d);
    for (std::size_t i = 0; i < d; ++i) row[i] = row[d + i] = v[i];
    stacked.push_back(std::move(row));
  }
  for (const auto& w : b.basis()) {
    Point row(2 * d);
    for (std::size_t i = 0; i < d; ++i) row[i] = w[i];
    stacked.push_back(std::move(row));
  }
  std::vector<Point> meet_rows;
  for (const auto& row : hermite_normal_form(std::move(stacked))) {
    bool left_zero = true;
    for (std::size_t i = 0; i < d; ++i) left_zero = left_zero && row[i] == 0;
    if (!left_zero) continue;
    Point x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = row[d + i];
    meet_rows.push_back(std::move(x));
  }
  return lattice_from(d, meet_rows);
}

}  // namespace affsemi
