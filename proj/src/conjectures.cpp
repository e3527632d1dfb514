#include "affsemi/conjectures.hpp"

#include <algorithm>
#include <functional>

#include "affsemi/error.hpp"
#include "affsemi/frobenius.hpp"

namespace affsemi {

WilfReport wilf_report(const GapSemigroup& s, const TermOrder& order) {
  WilfReport r;
  r.frobenius = frobenius_element(s, order);
  r.embedding_dimension = s.embedding_dimension();
  r.genus = s.genus();
  for_each_preceding(order, r.frobenius, [&](const Point& q) {
    if (s.contains(q)) ++r.sporadic;
  });
  r.n_frobenius = r.genus + r.sporadic;
  r.holds = r.sporadic * r.embedding_dimension >= r.n_frobenius + 1;
  return r;
}

namespace {

std::vector<Point> d_set_over(const std::vector<Point>& candidates, const std::vector<Point>& rays,
                              const IntegerLattice& group, const std::function<bool(const Point&)>& member) {
  std::vector<Point> out;
  for (const auto& a : candidates) {
    if (member(a) || !group.contains(a)) continue;
    std::size_t hits = 0;
    for (const auto& ray : rays) {
      if (member(a + 2 * ray)) ++hits;
    }
    if (hits >= 2) out.push_back(a);
  }
  sort_grlex(out);
  return out;
}

void require_dimension_two_or_more(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::DimensionOne, "the Buchsbaum test needs dimension at least 2");
}

}  // namespace

BuchsbaumReport buchsbaum_report(const GapSemigroup& s) {
  require_dimension_two_or_more(s.dimension());
  if (s.gaps().empty()) throw Error(ErrorKind::EmptyGapSet, "the semigroup has no gaps, so it is not MPD");
  BuchsbaumReport r;
  r.extremal_rays = axis_rays(s.as_affine());
  const IntegerLattice group = lattice_from(s.dimension(), s.hilbert_basis());
  // Both shift conditions together force a into N^d, and members are excluded.
  r.d_set = d_set_over(s.gaps(), r.extremal_rays, group, [&](const Point& p) { return s.contains(p); });
  r.pf = pseudo_frobenius(s);
  r.is_buchsbaum = r.d_set == r.pf;
  return r;
}

BuchsbaumReport buchsbaum_report(const AffineSemigroup& s, const Budget& budget) {
  require_dimension_two_or_more(s.dimension());
  try {
    return buchsbaum_report(GapSemigroup::from_generators(s, budget));
  } catch (const InfiniteGapsError&) {
    if (s.dimension() != 2) throw;
  }
  // For a in D and i != j, a + 2a_i and a + 2a_j dominate Apéry elements that a
  // does not, which bounds a by the coordinatewise maximum of Ap(S, rays).
  const AxisApery ap = axis_apery(s, budget);
  Point hi(s.dimension());
  for (const auto& w : ap.elements) hi = join(hi, w);
  MembershipOracle member(s, budget.max_cells);
  member.reserve(hi + 2 * join(ap.rays[0], ap.rays[1]));
  auto in_s = [&](const Point& p) { return member.contains(p); };

  BuchsbaumReport r;
  r.extremal_rays = ap.rays;
  const IntegerLattice group = lattice_from(s.dimension(), s.generators());
  r.d_set = d_set_over(enumerate_box(Point(s.dimension()), hi), r.extremal_rays, group, in_s);
  for (const auto& a : r.d_set) {
    if (std::ranges::all_of(s.generators(), [&](const Point& g) { return in_s(a + g); })) r.pf.push_back(a);
  }
  if (r.pf.empty()) throw Error(ErrorKind::NotMPD, "PF(S) is empty, so S is not an MPD-semigroup");
  r.is_buchsbaum = r.d_set == r.pf;
  return r;
}

}  // namespace affsemi
