#include "affsemi/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "affsemi/error.hpp"
#include "affsemi/frobenius.hpp"
#include "affsemi/gap_semigroup.hpp"
#include "affsemi/lattice.hpp"
#include "affsemi/parallel.hpp"

namespace affsemi {

AffineSemigroup glue(const GluingSpec& spec) {
  const std::size_t d = spec.s1.dimension();
  if (spec.s2.dimension() != d || spec.s.dimension() != d) {
    throw Error(ErrorKind::DimensionMismatch, "gluing inputs live in different dimensions");
  }
  if (!is_member(spec.s1, spec.s)) throw NotAGluingError("sNotInS1", spec.s.to_string() + " is not in S1");
  if (!is_member(spec.s2, spec.s)) throw NotAGluingError("sNotInS2", spec.s.to_string() + " is not in S2");
  const IntegerLattice meet_lattice =
      lattice_intersect(lattice_from(d, spec.s1.generators()), lattice_from(d, spec.s2.generators()));
  if (meet_lattice.rank() != 1) {
    throw NotAGluingError("LatticeRankNot1",
                          "G(S1) ∩ G(S2) has rank " + std::to_string(meet_lattice.rank()));
  }
  const Point& generator = meet_lattice.basis().front();
  if (generator != spec.s && generator != Coord{-1} * spec.s) {
    throw NotAGluingError("LatticeGeneratorMismatch",
                          "G(S1) ∩ G(S2) is generated by " + generator.to_string() + ", not " + spec.s.to_string());
  }
  std::vector<Point> all = spec.s1.generators();
  all.insert(all.end(), spec.s2.generators().begin(), spec.s2.generators().end());
  return minimalize(d, std::move(all));
}

GluedPF glued_pf(const std::vector<Point>& pf1, const std::vector<Point>& pf2, const Point& s) {
  if (pf1.empty()) throw Error(ErrorKind::EmptyPF, "PF(S1) is empty");
  if (pf2.empty()) throw Error(ErrorKind::EmptyPF, "PF(S2) is empty");
  std::set<Point> sums;
  for (const auto& f : pf1) {
    for (const auto& g : pf2) sums.insert(f + g + s);
  }
  GluedPF out{{sums.begin(), sums.end()}, pf1.size() * pf2.size() - sums.size()};
  sort_grlex(out.points);
  return out;
}

// ---------------------------------------------------------------------------

Coord family_power(Coord a, Coord p) {
  if (a < 3 || a % 2 == 0) throw Error(ErrorKind::BadParams, "a must be an odd integer >= 3, got " + std::to_string(a));
  if (p < 1) throw Error(ErrorKind::BadParams, "p must be a positive integer, got " + std::to_string(p));
  Coord power = 1;
  for (Coord i = 0; i < p; ++i) power = checked_mul(power, a);
  return power;
}

std::array<Point, 4> family_sap_generators(Coord a, Coord p) {
  const Coord q = family_power(a, p);
  return {Point{a, 0}, Point{0, q}, Point{a + 2, 2}, Point{2, checked_add(q, 2)}};
}

AffineSemigroup family_sap(Coord a, Coord p) {
  const auto gens = family_sap_generators(a, p);
  return AffineSemigroup(2, {gens.begin(), gens.end()});
}

std::vector<Point> delta_set(Coord a, Coord p) {
  const Coord q = family_power(a, p);
  const Coord top = checked_mul(q, a + 2);
  std::vector<Point> out;
  for (Coord l = 0; l < q - 1; ++l) {
    out.push_back(Point{top - checked_mul(l + 2, a) - 2, checked_mul(q, l + 2) - 2});
  }
  return out;
}

namespace {

bool combination_is(const Point& target, Coord c1, const Point& g1, Coord c2, const Point& g2) {
  return c1 >= 0 && c2 >= 0 && c1 * g1 + c2 * g2 == target;
}

Point bounding_corner(const std::vector<Point>& points, std::size_t d) {
  Point hi(d);
  for (const auto& x : points) hi = join(hi, x);
  return hi;
}

}  // namespace

DeltaVerification verify_delta_pf(Coord a, Coord p, unsigned threads) {
  const auto g = family_sap_generators(a, p);
  const std::vector<Point> gens(g.begin(), g.end());
  const Coord q = family_power(a, p);
  const Coord lead = checked_mul(q / a, a + 2);
  const std::vector<Point> delta = delta_set(a, p);

  std::vector<Point> probes;
  for (const auto& f : delta) {
    for (const auto& x : gens) probes.push_back(f + x);
  }
  const MembershipTable table(gens, bounding_corner(probes, 2));

  DeltaVerification out{a, p, std::vector<DeltaCheck>(delta.size()), 0, false};
  parallel_for(delta.size(), threads, [&](std::size_t l) {
    DeltaCheck& row = out.rows[l];
    const Coord ell = static_cast<Coord>(l);
    row.ell = l;
    row.f = delta[l];
    row.outside = !table.contains(row.f);
    for (std::size_t k = 0; k < 4; ++k) row.shifted_member[k] = table.contains(row.f + gens[k]);
    row.closed_form[0] = combination_is(row.f + g[0], q - ell - 1, g[2], ell, g[3]);
    row.closed_form[1] = combination_is(row.f + g[1], q - ell - 2, g[2], ell + 1, g[3]);
    row.closed_form[2] = combination_is(row.f + g[2], lead - ell - 1, g[0], ell + 2, g[1]);
    row.closed_form[3] = combination_is(row.f + g[3], lead - ell - 2, g[0], ell + 3, g[1]);
    row.passed = row.outside && std::ranges::all_of(row.shifted_member, std::identity{}) &&
                 std::ranges::all_of(row.closed_form, std::identity{});
  });
  out.verified = static_cast<std::size_t>(std::ranges::count_if(out.rows, &DeltaCheck::passed));
  out.passed = out.verified == out.rows.size();
  return out;
}

AperyWindow apery_sap_window(Coord a, Coord p, const Point& window) {
  const auto g = family_sap_generators(a, p);
  const Coord q = family_power(a, p);
  if (window.dimension() != 2 || !window.is_natural()) {
    throw Error(ErrorKind::BadParams, "window must be a point of N^2");
  }
  AperyWindow out;
  for (Coord alpha = 0; alpha < q; ++alpha) {
    for (Coord beta = 0; alpha + beta < q; ++beta) out.formula_side.push_back(alpha * g[2] + beta * g[3]);
  }
  sort_grlex(out.formula_side);

  const std::vector<Point> gens(g.begin(), g.end());
  const MembershipTable table(gens, join(window, bounding_corner(out.formula_side, 2)));
  auto in_apery = [&](const Point& b) {
    return table.contains(b) && !table.contains(b - g[0]) && !table.contains(b - g[1]);
  };
  out.formula_verified = std::ranges::all_of(out.formula_side, in_apery);
  for (const auto& b : BoxRange(Point(2), window)) {
    if (in_apery(b)) out.window_scan.push_back(b);
  }
  sort_grlex(out.window_scan);
  std::vector<Point> inside;
  std::ranges::copy_if(out.formula_side, std::back_inserter(inside),
                       [&](const Point& b) { return partial_leq(b, window); });
  out.consistent = out.formula_verified && inside == out.window_scan;
  return out;
}

FamilyGluing family_saps(Coord a, Coord p, const std::vector<Coord>& numerical_generators) {
  const Coord q = family_power(a, p);
  if (numerical_generators.empty()) throw Error(ErrorKind::BadParams, "no numerical generators given");
  std::vector<Point> numerical;
  Coord mu = 0;
  Coord g = 0;
  for (Coord n : numerical_generators) {
    if (n <= 0) throw Error(ErrorKind::BadParams, "numerical generators must be positive");
    numerical.push_back(Point{n});
    mu = checked_add(mu, n);
    g = std::gcd(g, n);
  }
  if (g != 1) throw Error(ErrorKind::NotMinimal, "numerical generators have gcd " + std::to_string(g));
  const AffineSemigroup s1 = minimalize(1, numerical);
  if (s1.size() != numerical.size()) {
    throw Error(ErrorKind::NotMinimal, "numerical generators are not a minimal generating system");
  }

  const Point ray{a, q};
  std::vector<Point> scaled_family;
  for (const auto& x : family_sap_generators(a, p)) scaled_family.push_back(mu * x);
  std::vector<Point> scaled_numerical;
  for (Coord n : numerical_generators) scaled_numerical.push_back(n * ray);

  FamilyGluing out{glue({AffineSemigroup(2, scaled_family), AffineSemigroup(2, scaled_numerical), mu * ray}),
                   mu * ray, mu, 0, 0, 0, {}};
  out.embedding_dimension = out.semigroup.size();

  const std::vector<Point> pf_numerical = pseudo_frobenius(GapSemigroup::from_generators(s1));
  out.nu = pf_numerical.size();
  out.pf_lower_bound = out.nu * static_cast<std::size_t>(q - 1);

  std::vector<Point> left, right;
  for (const auto& f : delta_set(a, p)) left.push_back(mu * f);
  for (const auto& f : pf_numerical) right.push_back(f[0] * ray);
  const GluedPF glued = glued_pf(left, right, out.s);
  std::vector<Point> probes;
  for (const auto& x : glued.points) {
    for (const auto& gen : out.semigroup.generators()) probes.push_back(x + gen);
  }
  const MembershipTable table(out.semigroup.generators(), bounding_corner(probes, 2));
  for (const auto& x : glued.points) {
    const bool ok = !table.contains(x) && std::ranges::all_of(out.semigroup.generators(), [&](const Point& gen) {
      return table.contains(x + gen);
    });
    out.pf_witnesses.push_back({x, ok});
  }
  return out;
}

AffineSemigroup scale_numerical(const std::vector<Coord>& numerical_generators, const Point& a) {
  if (a.is_zero() || !a.is_natural()) throw Error(ErrorKind::BadParams, "scaling vector must be a nonzero point of N^d");
  std::vector<Point> gens;
  for (Coord n : numerical_generators) {
    if (n <= 0) throw Error(ErrorKind::BadParams, "numerical generators must be positive");
    gens.push_back(n * a);
  }
  return AffineSemigroup(a.dimension(), std::move(gens));
}

}  // namespace affsemi
