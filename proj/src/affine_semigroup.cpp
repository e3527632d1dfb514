#include "affsemi/affine_semigroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affsemi/error.hpp"

namespace affsemi {

AffineSemigroup::AffineSemigroup(std::size_t dimension, std::vector<Point> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ == 0) throw Error(ErrorKind::BadParams, "semigroup dimension must be at least 1");
  if (generators_.empty()) throw Error(ErrorKind::BadParams, "semigroup needs at least one generator");
  for (const auto& g : generators_) {
    if (g.dimension() != dimension_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + g.to_string() + " is not in N^" + std::to_string(dimension_));
    }
    if (!g.is_natural()) throw Error(ErrorKind::NotNatural, "generator " + g.to_string() + " has a negative coordinate");
    if (g.is_zero()) throw Error(ErrorKind::BadParams, "the zero vector is not a generator");
  }
  std::ranges::sort(generators_);
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

// ---------------------------------------------------------------------------

MembershipTable::MembershipTable(std::span<const Point> generators, Point extent, std::size_t max_cells)
    : box_(std::move(extent)) {
  if (!box_.hi().is_natural()) throw Error(ErrorKind::NotNatural, "membership table extent must be natural");
  if (box_.volume() > max_cells) {
    throw Error(ErrorKind::BudgetExceeded, "membership table over [0," + box_.hi().to_string() + "] needs " +
                                               std::to_string(box_.volume()) + " cells, budget is " +
                                               std::to_string(max_cells));
  }
  const std::size_t d = box_.hi().dimension();
  struct Step {
    const Point* g;
    std::size_t offset;
  };
  std::vector<Step> steps;
  for (const auto& g : generators) {
    require_same_dimension(g, box_.hi());
    if (!partial_leq(g, box_.hi())) continue;
    steps.push_back({&g, box_.index(g)});
  }

  cells_.assign(box_.volume(), 0);
  if (cells_.empty()) return;
  cells_[0] = 1;
  Point p(d);
  for (std::size_t idx = 1; idx < cells_.size(); ++idx) {
    // advance p to box_.point(idx)
    for (std::size_t i = d; i-- > 0;) {
      if (p[i] < box_.hi()[i]) {
        ++p[i];
        break;
      }
      p[i] = 0;
    }
    for (const auto& step : steps) {
      bool fits = true;
      for (std::size_t i = 0; i < d && fits; ++i) fits = (*step.g)[i] <= p[i];
      if (fits && cells_[idx - step.offset]) {
        cells_[idx] = 1;
        break;
      }
    }
  }
}

bool MembershipTable::covers(const Point& p) const {
  require_same_dimension(p, box_.hi());
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < 0) return true;
    if (p[i] > box_.hi()[i]) return false;
  }
  return true;
}

bool MembershipTable::contains(const Point& p) const {
  if (!p.is_natural()) return false;
  if (!covers(p)) throw std::out_of_range("membership query " + p.to_string() + " beyond table extent");
  return cells_[box_.index(p)] != 0;
}

MembershipOracle::MembershipOracle(const AffineSemigroup& semigroup, std::size_t max_cells)
    : generators_(semigroup.generators()),
      max_cells_(max_cells),
      table_(generators_, Point(semigroup.dimension()), max_cells) {}

void MembershipOracle::reserve(const Point& hi) {
  if (table_.covers(hi)) return;
  const Point& old = table_.extent();
  Point exact = join(old, hi);
  Point grown = exact;
  for (std::size_t i = 0; i < grown.dimension(); ++i) {
    if (hi[i] > old[i]) grown[i] = std::max(hi[i], 2 * old[i] + 1);
  }
  try {
    table_ = MembershipTable(generators_, grown, max_cells_);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    table_ = MembershipTable(generators_, exact, max_cells_);
  }
}

bool MembershipOracle::contains(const Point& p) {
  if (!p.is_natural()) return false;
  reserve(p);
  return table_.contains(p);
}

bool is_member(const AffineSemigroup& semigroup, const Point& p) {
  require_same_dimension(p, Point(semigroup.dimension()));
  if (!p.is_natural()) return false;
  if (p.is_zero()) return true;
  return MembershipTable(semigroup.generators(), p).contains(p);
}

AffineSemigroup minimalize(std::size_t dimension, std::vector<Point> generators) {
  AffineSemigroup all(dimension, std::move(generators));
  std::vector<Point> by_degree = all.generators();
  std::ranges::stable_sort(by_degree, {}, [](const Point& g) { return g.degree(); });
  // A generator is redundant iff it lies in the monoid of strictly lighter ones,
  // and those are already reduced to kept generators.
  std::vector<Point> kept;
  for (const auto& g : by_degree) {
    if (kept.empty() || !MembershipTable(kept, g).contains(g)) kept.push_back(g);
  }
  return AffineSemigroup(dimension, std::move(kept));
}

Multiplicity multiplicity(const AffineSemigroup& semigroup) {
  Point inf = semigroup.generators().front();
  for (const auto& g : semigroup.generators()) inf = meet(inf, g);
  const bool attained = !inf.is_zero() && is_member(semigroup, inf);
  return {std::move(inf), attained};
}

Point project_out(const Point& p, std::size_t axis) {
  std::vector<Coord> coords;
  coords.reserve(p.dimension() - 1);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i != axis) coords.push_back(p[i]);
  }
  return Point(std::move(coords));
}

SliceDecomposition slice_decomposition(const AffineSemigroup& semigroup, std::size_t axis, Coord level,
                                       std::size_t max_multisets) {
  const std::size_t d = semigroup.dimension();
  if (axis >= d) throw Error(ErrorKind::DimensionMismatch, "axis " + std::to_string(axis) + " out of range");
  if (level < 0) throw Error(ErrorKind::BadParams, "slice level must be nonnegative");

  SliceDecomposition out{axis, level, {}, {}};
  std::vector<const Point*> positive;
  for (const auto& g : semigroup.generators()) {
    if (g[axis] == 0) {
      out.face_generators.push_back(project_out(g, axis));
    } else {
      positive.push_back(&g);
    }
  }

  std::set<Point> shifts;
  std::size_t visited = 0;
  Point shift(d - 1);
  // Multisets of positive generators, taken in index order, with axis sum == level.
  auto descend = [&](auto&& self, std::size_t first, Coord remaining) -> void {
    if (++visited > max_multisets) {
      throw Error(ErrorKind::BudgetExceeded, "slice decomposition exceeded " + std::to_string(max_multisets) +
                                                 " generator multisets");
    }
    if (remaining == 0) {
      shifts.insert(shift);
      return;
    }
    for (std::size_t k = first; k < positive.size(); ++k) {
      const Point& g = *positive[k];
      if (g[axis] > remaining) continue;
      const Point face = project_out(g, axis);
      shift += face;
      self(self, k, remaining - g[axis]);
      shift -= face;
    }
  };
  descend(descend, 0, level);
  out.shifts.assign(shifts.begin(), shifts.end());
  return out;
}

}  // namespace affsemi
