#include "affsemi/error.hpp"
#include "affsemi/frobenius.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace affsemi;

namespace {

GapSemigroup gs(const AffineSemigroup& a) { return GapSemigroup::from_generators(a); }

// PF by definition against every nonzero member in a window, not just generators.
std::set<Point> brute_pf(const GapSemigroup& s) {
  std::set<Point> out;
  const Point hi = 2 * s.conductor();
  for (const auto& f : s.gaps()) {
    bool ok = true;
    oracle::each_point(hi, [&](const Point& x) {
      if (!x.is_zero() && s.contains(x) && !s.contains(f + x)) ok = false;
    });
    if (ok) out.insert(f);
  }
  return out;
}

std::vector<GapSemigroup> corpus() {
  std::vector<GapSemigroup> out;
  for (const auto& a : fixtures::two_dimensional_corpus()) out.push_back(gs(a));
  out.push_back(gs(fixtures::numerical({4, 6, 9})));
  out.push_back(gs(fixtures::numerical({3, 5, 7})));
  out.push_back(gs(fixtures::numerical({6, 10, 14, 21})));
  out.push_back(GapSemigroup::from_gaps(2, {{0, 1}}));
  out.push_back(GapSemigroup::from_gaps(2, {{1, 0}, {1, 1}}));
  return out;
}

}  // namespace

TEST_CASE("pseudo-Frobenius sets") {
  CHECK(pseudo_frobenius(gs(fixtures::eleven_gaps())) == std::vector<Point>{{1, 3}, {2, 6}});
  CHECK(pseudo_frobenius(gs(fixtures::betti_two())) == std::vector<Point>{{1, 4}, {2, 8}});
  CHECK(pseudo_frobenius(gs(fixtures::betti_three())) == std::vector<Point>{{1, 3}, {2, 6}, {3, 9}});
  CHECK(pseudo_frobenius(gs(fixtures::numerical({3, 5, 7}))) == std::vector<Point>{{2}, {4}});
  CHECK(pseudo_frobenius(gs(fixtures::numerical({6, 10, 14, 21}))) == std::vector<Point>{{25}, {29}});
  CHECK(pseudo_frobenius(GapSemigroup::from_gaps(2, {})).empty());
  for (const auto& s : corpus()) CHECK(oracle::as_set(pseudo_frobenius(s)) == brute_pf(s));
}

TEST_CASE("numerical pseudo-Frobenius sets match a sieve") {
  for (const auto& gens : std::vector<std::vector<Coord>>{{2, 3}, {3, 4, 5}, {5, 7, 9}, {4, 6, 9}, {7, 11, 13, 17}}) {
    const auto expected = oracle::numerical(gens);
    std::vector<Point> pf;
    for (Coord f : expected.pf) pf.push_back(Point{f});
    CHECK(pseudo_frobenius(gs(fixtures::numerical(gens))) == pf);
    CHECK(frobenius_element(gs(fixtures::numerical(gens)), TermOrder::lex(1)) == Point{expected.frobenius});
  }
}

TEST_CASE("Frobenius elements") {
  const auto o = TermOrder::grlex(2);
  CHECK(frobenius_element(gs(fixtures::betti_two()), o) == Point{2, 8});
  CHECK(frobenius_element(gs(fixtures::betti_three()), o) == Point{3, 9});
  CHECK(frobenius_element(GapSemigroup::from_gaps(2, {{0, 1}}), o) == Point{0, 1});
  CHECK_THROWS_AS(frobenius_element(GapSemigroup::from_gaps(2, {}), o), Error);
  for (const auto& s : corpus()) {
    if (s.gaps().empty()) continue;
    const auto order = TermOrder::grlex(s.dimension());
    const auto f = frobenius_element(s, order);
    const auto pf = pseudo_frobenius(s);
    CHECK(std::ranges::find(pf, f) != pf.end());
  }
}

TEST_CASE("cover witnesses") {
  const auto s = gs(fixtures::eleven_gaps());
  CHECK(cover_witness(s, Point{1, 0}) == Point{1, 3});
  CHECK_FALSE(cover_witness(s, Point{0, 3}).has_value());
  CHECK(cover_witness(s, Point{2, 6}) == Point{2, 6});
  for (const auto& t : corpus()) {
    for (const auto& x : t.gaps()) {
      const auto f = cover_witness(t, x);
      REQUIRE(f.has_value());
      CHECK(t.contains(*f - x));
    }
  }
}

TEST_CASE("omega") {
  const auto o = TermOrder::grlex(2);
  CHECK(omega(gs(fixtures::betti_two()), o) == std::vector<Point>{{1, 4}});
  CHECK(omega(gs(fixtures::betti_three()), o) == std::vector<Point>{{1, 3}, {2, 6}});
  CHECK(omega(GapSemigroup::from_gaps(2, {{0, 1}}), o).empty());

  // Ω is an ideal: adding a generator to an element keeps F - (w + a) outside S
  for (const auto& s : corpus()) {
    if (s.gaps().empty()) continue;
    const auto order = TermOrder::grlex(s.dimension());
    const auto f = frobenius_element(s, order);
    std::vector<Point> sample = omega(s, order);
    oracle::each_point(s.conductor(), [&](const Point& p) {
      if (s.contains(p)) sample.push_back(p);
    });
    for (const auto& w : sample) {
      for (const auto& a : s.hilbert_basis()) CHECK_FALSE(s.contains(f - (w + a)));
    }
  }
}

TEST_CASE("classification") {
  const auto o = TermOrder::grlex(2);
  const auto two = classify(gs(fixtures::betti_two()), o);
  CHECK(two.betti_type == 2);
  CHECK(two.pseudo_symmetric);
  CHECK(two.almost_symmetric);
  CHECK(two.irreducible);
  CHECK_FALSE(two.symmetric);
  CHECK(two.omega_extra == std::vector<Point>{{1, 4}});
  CHECK(two.pf.size() == two.omega_extra.size() + 1);

  const auto three = classify(gs(fixtures::betti_three()), o);
  CHECK(three.betti_type == 3);
  CHECK(three.almost_symmetric);
  CHECK_FALSE(three.irreducible);
  CHECK(three.frobenius == Point{3, 9});

  const auto single = classify(GapSemigroup::from_gaps(2, {{0, 1}}), o);
  CHECK(single.symmetric);
  CHECK_FALSE(single.almost_symmetric);
  CHECK(single.irreducible);

  // odd Frobenius coordinates rule out pseudo-symmetry
  const auto n = classify(gs(fixtures::numerical({3, 5, 7})), TermOrder::lex(1));
  CHECK(n.pf == std::vector<Point>{{2}, {4}});
  CHECK(n.pseudo_symmetric);
  CHECK_FALSE(classify(gs(fixtures::numerical({4, 6, 9})), TermOrder::lex(1)).pseudo_symmetric);
  CHECK_THROWS_AS(classify(GapSemigroup::from_gaps(1, {}), TermOrder::lex(1)), Error);
}

TEST_CASE("classifier consistency") {
  for (const auto& s : corpus()) {
    if (s.gaps().empty()) continue;
    const auto r = classify(s, TermOrder::grlex(s.dimension()));
    if (r.almost_symmetric) {
      CHECK(r.omega_extra == r.pf_prime);
      CHECK(r.pf.size() == r.omega_extra.size() + 1);
    }
    if (r.pf_prime_below_frobenius && r.omega_extra == r.pf_prime && !r.pf_prime.empty()) {
      CHECK(r.almost_symmetric);
    }
    CHECK(r.symmetric == r.omega_extra.empty());
    if (r.pseudo_symmetric) {
      Point half = r.frobenius;
      for (std::size_t i = 0; i < half.dimension(); ++i) half[i] /= 2;
      CHECK(r.omega_extra == std::vector<Point>{half});
    }
  }
}

TEST_CASE("Apery sets") {
  const auto n = gs(fixtures::numerical({4, 6, 9}));
  CHECK(apery(n, {Point{4}}) == std::vector<Point>{{0}, {6}, {9}, {15}});
  const auto expected = oracle::numerical_apery({4, 6, 9}, 4);
  CHECK(apery(n, {Point{4}}).size() == expected.size());

  const auto b = gs(fixtures::buchsbaum());
  try {
    apery(b, {Point{1, 0}, Point{1, 1}});
    FAIL("expected InfiniteApery");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfiniteApery);
  }
  CHECK_THROWS_AS(apery(b, {Point{0, 1}, Point{1, 0}}), Error);
  const auto ap = apery(b, {Point{1, 0}, Point{0, 3}});
  CHECK(ap == std::vector<Point>{{0, 0}, {1, 1}, {1, 2}, {0, 4}, {0, 5}});

  // doubled-bound scan by definition
  for (const auto& s : corpus()) {
    if (s.dimension() != 2) continue;
    std::vector<Point> e;
    for (const auto& g : s.hilbert_basis()) {
      if (axis_of(g) < 2) e.push_back(g);
    }
    e.push_back(s.conductor() + Point{1, 1});
    const auto got = apery(s, e);
    CHECK(got.front() == Point{0, 0});
    std::set<Point> brute;
    Point hi(2);
    for (const auto& a : e) hi = join(hi, a);
    oracle::each_point(2 * (hi + s.conductor()), [&](const Point& p) {
      if (!s.contains(p)) return;
      if (std::ranges::none_of(e, [&](const Point& a) { return s.contains(p - a); })) brute.insert(p);
    });
    CHECK(oracle::as_set(got) == brute);
  }
}

TEST_CASE("ideal differences") {
  const auto s = gs(fixtures::eleven_gaps());
  auto base = std::make_shared<const GapSemigroup>(s);
  const auto whole = whole_ideal(base);
  const auto star = maximal_ideal(base);
  CHECK(ideal_difference_member(whole, star, Point{0, 3}));
  CHECK(ideal_difference_member(whole, star, Point{2, 6}));
  CHECK_FALSE(ideal_difference_member(whole, star, Point{1, 0}));
  CHECK(star.contains(Point{0, 1}));
  CHECK_FALSE(star.contains(Point{0, 0}));

  const auto other = maximal_ideal(std::make_shared<const GapSemigroup>(gs(fixtures::buchsbaum())));
  CHECK_THROWS_AS(ideal_difference_member(whole, other, Point{0, 0}), Error);

  CHECK(pf_via_ideal(s) == std::vector<Point>{{1, 3}, {2, 6}});
  CHECK(pf_via_ideal(gs(fixtures::betti_three())) == std::vector<Point>{{1, 3}, {2, 6}, {3, 9}});
  for (const auto& t : corpus()) CHECK(pf_via_ideal(t) == pseudo_frobenius(t));
}

TEST_CASE("cardinality identity") {
  const auto o = TermOrder::grlex(2);
  const auto three = cardinality_identity(gs(fixtures::betti_three()), o);
  CHECK(three.lhs == 19);
  CHECK(three.rhs == 19);
  const auto two = cardinality_identity(gs(fixtures::betti_two()), o);
  CHECK(two.lhs == 13);
  CHECK(two.rhs == 13);
  const auto one = cardinality_identity(GapSemigroup::from_gaps(2, {{0, 1}}), o);
  CHECK(one.lhs == 1);
  CHECK(one.rhs == 1);
}
