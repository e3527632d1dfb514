#include "affsemi/gap_semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

Point conductor_of(std::size_t d, const std::vector<Point>& gaps) {
  Point c(d);
  for (const auto& g : gaps) {
    for (std::size_t i = 0; i < d; ++i) c[i] = std::max(c[i], g[i] + 1);
  }
  return c;
}

Point minus_one(Point p) {
  for (std::size_t i = 0; i < p.dimension(); ++i) --p[i];
  return p;
}

}  // namespace

GapSemigroup::GapSemigroup(std::size_t dimension, std::vector<Point> gaps)
    : dimension_(dimension),
      gaps_(std::move(gaps)),
      conductor_(conductor_of(dimension, gaps_)),
      gap_box_(minus_one(conductor_)) {
  gap_bits_.assign(gap_box_.volume(), 0);
  for (const auto& g : gaps_) gap_bits_[gap_box_.index(g)] = 1;
}

GapSemigroup GapSemigroup::from_gaps(std::size_t dimension, std::vector<Point> gaps) {
  if (dimension == 0) throw Error(ErrorKind::BadParams, "semigroup dimension must be at least 1");
  for (const auto& g : gaps) {
    if (g.dimension() != dimension) {
      throw Error(ErrorKind::DimensionMismatch, "gap " + g.to_string() + " is not in N^" + std::to_string(dimension));
    }
    if (!g.is_natural()) throw Error(ErrorKind::NotNatural, "gap " + g.to_string() + " has a negative coordinate");
    if (g.is_zero()) throw Error(ErrorKind::ZeroGap, "the origin is always a member");
  }
  sort_grlex(gaps);
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  GapSemigroup out(dimension, std::move(gaps));
  out.validate_closure();
  out.compute_hilbert_basis();
  return out;
}

bool GapSemigroup::contains(const Point& p) const {
  if (p.dimension() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "point " + p.to_string() + " is not in N^" + std::to_string(dimension_));
  }
  if (!p.is_natural()) return false;
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (p[i] >= conductor_[i]) return true;
  }
  return gap_bits_[gap_box_.index(p)] == 0;
}

bool GapSemigroup::is_gap(const Point& p) const { return p.is_natural() && !contains(p); }

void GapSemigroup::validate_closure() const {
  for (const auto& g : gaps_) {
    for (const auto& x : BoxRange(Point(dimension_), g)) {
      if (x.is_zero() || x == g) continue;
      if (contains(x) && contains(g - x)) throw NotClosedError(g, x, g - x);
    }
  }
}

void GapSemigroup::compute_hilbert_basis() {
  hilbert_basis_.clear();
  if (gaps_.empty()) {
    for (std::size_t i = 0; i < dimension_; ++i) hilbert_basis_.push_back(unit_vector(dimension_, i));
    sort_grlex(hilbert_basis_);
    return;
  }
  // Every generator lies in [0, 2c - 1]. A member is decomposable iff removing
  // some lighter generator leaves a member, so scan by degree.
  Point hi = minus_one(2 * conductor_);
  std::vector<Point> candidates;
  for (const auto& p : BoxRange(Point(dimension_), hi)) {
    if (!p.is_zero() && contains(p)) candidates.push_back(p);
  }
  sort_grlex(candidates);
  for (const auto& p : candidates) {
    bool decomposable = false;
    for (const auto& h : hilbert_basis_) {
      if (h.degree() >= p.degree()) break;
      if (partial_leq(h, p) && contains(p - h)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) hilbert_basis_.push_back(p);
  }
}

// ---------------------------------------------------------------------------

std::vector<Point> axis_rays(const AffineSemigroup& semigroup) {
  const std::size_t d = semigroup.dimension();
  std::vector<Point> rays(d);
  for (const auto& g : semigroup.generators()) {
    const std::size_t axis = axis_of(g);
    if (axis == d) continue;
    if (rays[axis].dimension() == 0 || g[axis] < rays[axis][axis]) rays[axis] = g;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (rays[i].dimension() == 0) {
      throw Error(ErrorKind::NotFullCone,
                  "no generator on axis " + std::to_string(i + 1) + ", so the cone is not the full orthant");
    }
  }
  return rays;
}

AxisApery axis_apery(const AffineSemigroup& semigroup, const Budget& budget) {
  AxisApery out{axis_rays(semigroup), {}};
  const auto& rays = out.rays;
  std::vector<Point> steps;
  for (const auto& g : semigroup.generators()) {
    if (std::ranges::find(rays, g) == rays.end()) steps.push_back(g);
  }

  MembershipOracle member(semigroup, budget.max_cells);
  auto in_apery = [&](const Point& b) {
    return std::ranges::none_of(rays, [&](const Point& e) { return member.contains(b - e); });
  };

  // Removing a generator from an Apéry element leaves an Apéry element, so a
  // search from 0 that only expands Apéry elements reaches all of them.
  const Point origin(semigroup.dimension());
  std::unordered_set<Point, PointHash> seen{origin};
  std::deque<Point> frontier{origin};
  while (!frontier.empty()) {
    Point b = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : steps) {
      Point next = b + g;
      if (!seen.insert(next).second) continue;
      if (!in_apery(next)) continue;
      frontier.push_back(next);
    }
    out.elements.push_back(std::move(b));
    if (out.elements.size() > budget.max_apery) {
      throw Error(ErrorKind::BudgetExceeded,
                  "Apery set exceeds the budget of " + std::to_string(budget.max_apery) + " elements");
    }
  }
  sort_grlex(out.elements);
  return out;
}

GapSemigroup GapSemigroup::from_generators(const AffineSemigroup& semigroup, const Budget& budget) {
  const std::size_t d = semigroup.dimension();
  const AxisApery ap = axis_apery(semigroup, budget);
  Point modulus(d);
  for (std::size_t i = 0; i < d; ++i) modulus[i] = ap.rays[i][i];

  // Every member is w + sum k_i m_i e_i for a unique residue class; within the
  // class the members form an up-set whose minimal elements are the Apéry
  // elements. Its complement is finite iff every axis line through the class
  // base meets an Apéry element.
  std::map<Point, std::vector<const Point*>> classes;
  for (const auto& w : ap.elements) {
    Point r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = w[i] % modulus[i];
    classes[r].push_back(&w);
  }
  for (const auto& r : BoxRange(Point(d), minus_one(modulus))) {
    auto it = classes.find(r);
    if (it == classes.end()) {
      throw InfiniteGapsError(d - 1, r, ap.rays[d - 1]);
    }
    for (std::size_t i = 0; i < d; ++i) {
      const bool on_line = std::ranges::any_of(it->second, [&](const Point* w) {
        for (std::size_t j = 0; j < d; ++j) {
          if (j != i && (*w)[j] != r[j]) return false;
        }
        return true;
      });
      if (!on_line) throw InfiniteGapsError(i, r, ap.rays[i]);
    }
  }

  Point bound(d);
  for (const auto& w : ap.elements) bound = join(bound, w);
  std::vector<Point> gaps;
  const bool box_empty = std::ranges::any_of(bound.coords(), [](Coord b) { return b == 0; });
  if (!box_empty) {
    const Point hi = minus_one(bound);
    MembershipTable table(semigroup.generators(), hi, budget.max_cells);
    for (const auto& p : BoxRange(Point(d), hi)) {
      if (!table.contains(p)) gaps.push_back(p);
    }
  }
  return from_gaps(d, std::move(gaps));
}

}  // namespace affsemi
