#include "affsemi/arf.hpp"

#include <algorithm>
#include <stdexcept>

#include "affsemi/error.hpp"
#include "affsemi/parallel.hpp"

namespace affsemi {

namespace {

// Some x <= y <= z in S with y + z - x = g, where `member` decides S on [0, g].
template <class Member>
bool derived_hit(const Point& g, Member&& member) {
  const Point origin(g.dimension());
  for (const auto& y : BoxRange(origin, g)) {
    if (!member(y)) continue;
    for (const auto& x : BoxRange(origin, y)) {
      if (!member(x)) continue;
      Point z = g + x - y;
      if (partial_leq(y, z) && member(z)) return true;
    }
  }
  return false;
}

}  // namespace

GapSemigroup arf_derived(const GapSemigroup& s, unsigned threads) {
  const auto& gaps = s.gaps();
  std::vector<std::uint8_t> keep(gaps.size(), 0);
  parallel_for(gaps.size(), threads, [&](std::size_t i) {
    keep[i] = !derived_hit(gaps[i], [&](const Point& p) { return s.contains(p); });
  });
  std::vector<Point> remaining;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (keep[i]) remaining.push_back(gaps[i]);
  }
  return GapSemigroup::from_gaps(s.dimension(), std::move(remaining));
}

ArfClosure arf_closure(const GapSemigroup& s, unsigned threads) {
  ArfClosure out{s, 0};
  while (true) {
    GapSemigroup next = arf_derived(out.closure, threads);
    if (next == out.closure) return out;
    if (next.genus() >= out.closure.genus()) {
      throw std::logic_error("derived monoid step changed the monoid without shrinking its gap set");
    }
    out.closure = std::move(next);
    ++out.steps;
  }
}

bool is_arf(const GapSemigroup& s, unsigned threads) { return arf_derived(s, threads) == s; }

// ---------------------------------------------------------------------------

PIMonoid::PIMonoid(Point offset, GapSemigroup base) : offset_(std::move(offset)), base_(std::move(base)) {
  if (offset_.dimension() != base_.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "offset " + offset_.to_string() + " does not match the base dimension");
  }
  if (offset_.is_zero() || !base_.contains(offset_)) {
    throw Error(ErrorKind::NotInSemigroup, "offset " + offset_.to_string() + " must be a nonzero element of the base");
  }
}

bool PIMonoid::contains(const Point& p) const { return p.is_zero() || base_.contains(p - offset_); }

bool is_arf_pi(const PIMonoid& p, unsigned threads) { return is_arf(p.base(), threads); }

PICheck is_pi(const AffineSemigroup& s) {
  const Multiplicity m = multiplicity(s);
  PICheck out{m.infimum, m.attained, std::nullopt};
  if (!m.attained) return out;
  const auto& gens = s.generators();
  Point hi(s.dimension());
  for (const auto& g : gens) hi = join(hi, g);
  const MembershipTable table(gens, 2 * hi);
  bool all = true;
  for (std::size_t i = 0; i < gens.size() && all; ++i) {
    for (std::size_t j = i; j < gens.size() && all; ++j) {
      const Point t = gens[i] + gens[j] - m.infimum;
      all = !t.is_zero() && table.contains(t);
    }
  }
  out.result = all;
  return out;
}

PICheck is_pi(const GapSemigroup& s) { return is_pi(s.as_affine()); }

AffinePIDecomposition pi_decompose(const AffineSemigroup& s) {
  const PICheck check = is_pi(s);
  if (!check.result.value_or(false)) throw Error(ErrorKind::NotPI, "the semigroup is not a PI-monoid");
  std::vector<Point> gens{check.multiplicity};
  for (const auto& g : s.generators()) {
    if (g != check.multiplicity) gens.push_back(g - check.multiplicity);
  }
  return {check.multiplicity, minimalize(s.dimension(), std::move(gens))};
}

PIMonoid pi_decompose(const GapSemigroup& s) {
  const PICheck check = is_pi(s);
  if (!check.result.value_or(false)) throw Error(ErrorKind::NotPI, "the semigroup is not a PI-monoid");
  const Point& m = check.multiplicity;
  // m + q >= c coordinatewise somewhere once q >= c, so the box [0, c] suffices.
  std::vector<Point> base_gaps;
  for (const auto& q : BoxRange(Point(s.dimension()), s.conductor())) {
    if (!q.is_zero() && !s.contains(m + q)) base_gaps.push_back(q);
  }
  return PIMonoid(m, GapSemigroup::from_gaps(s.dimension(), std::move(base_gaps)));
}

// ---------------------------------------------------------------------------

void require_chain_hypotheses(const Point& a, const std::vector<Point>& gens) {
  if (a.is_zero() || !a.is_natural()) throw Error(ErrorKind::BadParams, "shift a must be a nonzero point of N^d");
  for (const auto& g : gens) {
    require_same_dimension(a, g);
    if (g.is_zero() || !g.is_natural()) throw Error(ErrorKind::BadParams, "chain elements must be nonzero points of N^d");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!partial_leq(gens[i], gens[j]) && !partial_leq(gens[j], gens[i])) {
        throw HypothesisError("NotAChain", gens[i].to_string() + " and " + gens[j].to_string() + " are incomparable");
      }
    }
  }
  for (const auto& l : gens) {
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        if (!partial_leq(l, x + y)) {
          throw HypothesisError("SumDomination", l.to_string() + " is not below " + x.to_string() + " + " + y.to_string());
        }
      }
    }
  }
}

namespace {

std::vector<Point> with_shift(const Point& a, const std::vector<Point>& gens, bool shifted) {
  std::vector<Point> out{a};
  for (const auto& g : gens) out.push_back(shifted ? a + g : g);
  return out;
}

}  // namespace

bool check_shifted_power_containment(const Point& a, const std::vector<Point>& gens, std::size_t k,
                                     const Point& window) {
  require_chain_hypotheses(a, gens);
  require_same_dimension(a, window);
  const std::size_t d = a.dimension();
  const ArfClosure target =
      arf_closure(GapSemigroup::from_generators(AffineSemigroup(d, with_shift(a, gens, true))));

  const std::vector<Point> base = with_shift(a, gens, false);
  const MembershipTable start(base, window);
  const BoxIndexer box(window);
  std::vector<std::uint8_t> current(box.volume());
  for (std::size_t i = 0; i < box.volume(); ++i) current[i] = start.contains(box.point(i));
  for (std::size_t step = 0; step < k; ++step) {
    auto member = [&](const Point& p) { return current[box.index(p)] != 0; };
    std::vector<std::uint8_t> next = current;
    for (std::size_t i = 0; i < box.volume(); ++i) {
      if (!next[i]) next[i] = derived_hit(box.point(i), member);
    }
    current = std::move(next);
  }
  for (std::size_t i = 0; i < box.volume(); ++i) {
    if (current[i] && !target.closure.contains(a + box.point(i))) return false;
  }
  return true;
}

bool check_shifted_power_containment(const Point& a, const std::vector<Point>& gens, std::size_t k) {
  require_chain_hypotheses(a, gens);
  Coord top = 0;
  for (Coord c : a.coords()) top = std::max(top, c);
  for (const auto& g : gens) {
    for (Coord c : g.coords()) top = std::max(top, c);
  }
  Point window(a.dimension());
  for (std::size_t i = 0; i < window.dimension(); ++i) window[i] = checked_mul(4, top);
  return check_shifted_power_containment(a, gens, k, window);
}

bool check_shifted_closure_identity(const Point& a, const std::vector<Point>& gens) {
  require_chain_hypotheses(a, gens);
  const std::size_t d = a.dimension();
  const GapSemigroup left =
      arf_closure(GapSemigroup::from_generators(AffineSemigroup(d, with_shift(a, gens, true)))).closure;
  const GapSemigroup inner =
      arf_closure(GapSemigroup::from_generators(AffineSemigroup(d, with_shift(a, gens, false)))).closure;
  const PIMonoid right(a, inner);
  // Past both conductors every point is in both sides.
  const Point hi = join(left.conductor(), a + inner.conductor());
  for (const auto& p : BoxRange(Point(d), hi)) {
    if (left.contains(p) != right.contains(p)) return false;
  }
  return true;
}

}  // namespace affsemi
