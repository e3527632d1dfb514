#include "affsemi/frobenius.hpp"

#include <algorithm>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

void require_gaps(const GapSemigroup& s) {
  if (s.gaps().empty()) throw Error(ErrorKind::EmptyGapSet, "the semigroup has no gaps");
}

bool contains_point(const std::vector<Point>& set, const Point& p) {
  return std::ranges::find(set, p) != set.end();
}

}  // namespace

std::vector<Point> pseudo_frobenius(const GapSemigroup& s) {
  std::vector<Point> out;
  for (const auto& f : s.gaps()) {
    const bool pf = std::ranges::all_of(s.hilbert_basis(), [&](const Point& a) { return s.contains(f + a); });
    if (pf) out.push_back(f);
  }
  return out;
}

Point frobenius_element(const GapSemigroup& s, const TermOrder& order) {
  require_gaps(s);
  return order_max(order, s.gaps());
}

std::optional<Point> cover_witness(const GapSemigroup& s, const Point& x) {
  if (!x.is_natural()) throw Error(ErrorKind::NotNatural, "point " + x.to_string() + " is not in N^d");
  if (s.contains(x)) return std::nullopt;
  for (const auto& f : pseudo_frobenius(s)) {
    if (s.contains(f - x)) return f;
  }
  throw Error(ErrorKind::NotClosed, "gap " + x.to_string() + " has no pseudo-Frobenius cover");
}

std::vector<Point> omega(const GapSemigroup& s, const TermOrder& order) {
  const Point f = frobenius_element(s, order);
  std::vector<Point> out;
  for (const auto& g : s.gaps()) {
    if (!s.contains(f - g)) out.push_back(g);
  }
  return out;
}

FrobeniusReport classify(const GapSemigroup& s, const TermOrder& order) {
  require_gaps(s);
  FrobeniusReport r;
  r.pf = pseudo_frobenius(s);
  r.betti_type = r.pf.size();
  r.frobenius = frobenius_element(s, order);
  for (const auto& f : r.pf) {
    if (f != r.frobenius) r.pf_prime.push_back(f);
  }
  r.omega_extra = omega(s, order);

  r.symmetric = r.pf.size() == 1 && r.pf.front() == r.frobenius;
  const bool even = std::ranges::all_of(r.frobenius.coords(), [](Coord c) { return c % 2 == 0; });
  if (even && r.pf.size() == 2) {
    Point half = r.frobenius;
    for (std::size_t i = 0; i < half.dimension(); ++i) half[i] /= 2;
    r.pseudo_symmetric = r.pf_prime.size() == 1 && r.pf_prime.front() == half;
  }
  r.almost_symmetric = !r.pf_prime.empty() && std::ranges::all_of(r.pf_prime, [&](const Point& g) {
    return contains_point(r.pf_prime, r.frobenius - g);
  });
  r.irreducible = r.symmetric || r.pseudo_symmetric;
  r.pf_prime_below_frobenius =
      std::ranges::all_of(r.pf_prime, [&](const Point& g) { return partial_leq(g, r.frobenius); });
  return r;
}

std::vector<Point> apery(const GapSemigroup& s, const std::vector<Point>& elements) {
  const std::size_t d = s.dimension();
  for (const auto& a : elements) {
    if (a.dimension() != d) {
      throw Error(ErrorKind::DimensionMismatch, "point " + a.to_string() + " is not in N^" + std::to_string(d));
    }
    if (a.is_zero() || !s.contains(a)) {
      throw Error(ErrorKind::NotInSemigroup, "Apery element " + a.to_string() + " is not in S \\ {0}");
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    const bool covered = std::ranges::any_of(elements, [&](const Point& a) { return axis_of(a) == j; });
    if (!covered) {
      throw Error(ErrorKind::InfiniteApery,
                  "no multiple of e_" + std::to_string(j + 1) + " in the set, so the Apery set is infinite");
    }
  }
  // b in Ap forces b_j < a_j + c_j for the axis element a = k e_j.
  Point hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Coord top = 0;
    for (const auto& a : elements) top = std::max(top, a[j]);
    hi[j] = top + s.conductor()[j] - 1;
  }
  std::vector<Point> out;
  for (const auto& b : BoxRange(Point(d), hi)) {
    if (!s.contains(b)) continue;
    if (std::ranges::none_of(elements, [&](const Point& a) { return s.contains(b - a); })) out.push_back(b);
  }
  sort_grlex(out);
  return out;
}

// ---------------------------------------------------------------------------

RelativeIdeal::RelativeIdeal(std::shared_ptr<const GapSemigroup> base, std::vector<Point> generators)
    : base_(std::move(base)), generators_(std::move(generators)) {
  if (!base_) throw Error(ErrorKind::BadParams, "relative ideal needs a base monoid");
  for (const auto& g : generators_) {
    if (g.dimension() != base_->dimension()) {
      throw Error(ErrorKind::DimensionMismatch, "ideal generator " + g.to_string() + " has the wrong dimension");
    }
    if (!g.is_natural()) throw Error(ErrorKind::NotNatural, "ideal generator " + g.to_string() + " is not in N^d");
  }
  sort_grlex(generators_);
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

bool RelativeIdeal::contains(const Point& p) const {
  return std::ranges::any_of(generators_, [&](const Point& g) { return base_->contains(p - g); });
}

RelativeIdeal whole_ideal(std::shared_ptr<const GapSemigroup> base) {
  const std::size_t d = base->dimension();
  return RelativeIdeal(std::move(base), {Point(d)});
}

RelativeIdeal maximal_ideal(std::shared_ptr<const GapSemigroup> base) {
  std::vector<Point> gens = base->hilbert_basis();
  return RelativeIdeal(std::move(base), std::move(gens));
}

bool ideal_difference_member(const RelativeIdeal& i, const RelativeIdeal& j, const Point& z) {
  if (i.base_ptr() != j.base_ptr() && !(i.base() == j.base())) {
    throw Error(ErrorKind::BaseMismatch, "ideals are over different monoids");
  }
  if (!z.is_natural()) return false;
  return std::ranges::all_of(j.generators(), [&](const Point& g) { return i.contains(z + g); });
}

std::vector<Point> pf_via_ideal(const GapSemigroup& s) {
  auto base = std::make_shared<const GapSemigroup>(s);
  const RelativeIdeal whole = whole_ideal(base);
  const RelativeIdeal star = maximal_ideal(base);
  // Members never leave S - S*, so only gaps can survive the set difference.
  std::vector<Point> out;
  for (const auto& g : s.gaps()) {
    if (ideal_difference_member(whole, star, g)) out.push_back(g);
  }
  return out;
}

CardinalityIdentity cardinality_identity(const GapSemigroup& s, const TermOrder& order) {
  const FrobeniusReport r = classify(s, order);
  std::size_t below = 0;
  for (const auto& p : BoxRange(Point(s.dimension()), r.frobenius)) {
    if (s.contains(p)) ++below;
  }
  return {s.genus() - r.pf_prime.size(), below};
}

}  // namespace affsemi
