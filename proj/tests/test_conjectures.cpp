#include "affsemi/conjectures.hpp"
#include "affsemi/error.hpp"
#include "affsemi/frobenius.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace affsemi;

namespace {

GapSemigroup gs(const AffineSemigroup& a) { return GapSemigroup::from_generators(a); }

}  // namespace

TEST_CASE("extended Wilf report") {
  const auto o = TermOrder::grlex(2);
  const auto three = wilf_report(gs(fixtures::betti_three()), o);
  CHECK(three.sporadic == 61);
  CHECK(three.genus == 21);
  CHECK(three.n_frobenius == 82);
  CHECK(three.embedding_dimension == 8);
  CHECK(three.sporadic * three.embedding_dimension == 488);
  CHECK(three.holds);

  const auto two = wilf_report(gs(fixtures::betti_two()), o);
  CHECK(two.holds);
  CHECK(two.n_frobenius == two.genus + two.sporadic);

  const auto single = wilf_report(GapSemigroup::from_gaps(2, {{0, 1}}), o);
  CHECK(single.sporadic == 1);

  CHECK_THROWS_AS(wilf_report(gs(fixtures::betti_two()), TermOrder::lex(2)), Error);
  CHECK_THROWS_AS(wilf_report(GapSemigroup::from_gaps(2, {}), o), Error);
}

TEST_CASE("sporadic count by brute force") {
  for (const auto& a : fixtures::two_dimensional_corpus()) {
    const auto s = gs(a);
    const auto o = TermOrder::grlex(2);
    const auto r = wilf_report(s, o);
    const Coord deg = r.frobenius.degree();
    std::size_t count = 0;
    oracle::each_point(Point{deg, deg}, [&](const Point& p) {
      if (s.contains(p) && order_cmp(o, p, r.frobenius) == std::strong_ordering::less) ++count;
    });
    CHECK(r.sporadic == count);
    CHECK(r.n_frobenius == r.genus + r.sporadic);
    const auto c = classify(s, o);
    if (c.almost_symmetric && c.betti_type <= 3) CHECK(r.holds);
    if (c.irreducible) CHECK(r.holds);
  }
}

TEST_CASE("Wilf quantities on numerical semigroups") {
  for (const auto& gens : std::vector<std::vector<Coord>>{{3, 5, 7}, {4, 6, 9}, {5, 7, 9, 11}, {6, 10, 14, 21}, {2, 3}}) {
    const auto r = wilf_report(gs(fixtures::numerical(gens)), TermOrder::lex(1));
    const auto expected = oracle::numerical(gens);
    // 0 is counted among the members below F.
    CHECK(r.n_frobenius == static_cast<std::size_t>(expected.frobenius + 1));
    CHECK(r.holds == (gens != std::vector<Coord>{2, 3}));
    // The classical inequality F + 1 <= e * |{s in S : s < F}| always holds here.
    CHECK(static_cast<std::size_t>(expected.frobenius + 1) <= r.embedding_dimension * r.sporadic);
  }
}

TEST_CASE("Buchsbaum test") {
  const auto b = buchsbaum_report(gs(fixtures::buchsbaum()));
  CHECK(b.d_set == std::vector<Point>{{0, 1}, {0, 2}});
  CHECK(b.pf == b.d_set);
  CHECK(b.is_buchsbaum);
  CHECK(b.extremal_rays == std::vector<Point>{{1, 0}, {0, 3}});

  const auto e = buchsbaum_report(gs(fixtures::eleven_gaps()));
  CHECK(e.pf == std::vector<Point>{{1, 3}, {2, 6}});
  CHECK_FALSE(e.is_buchsbaum);

  CHECK_THROWS_AS(buchsbaum_report(gs(fixtures::numerical({3, 5, 7}))), Error);
  CHECK_THROWS_AS(buchsbaum_report(GapSemigroup::from_gaps(2, {})), Error);
}

TEST_CASE("Buchsbaum set against a double loop") {
  for (const auto& a : fixtures::two_dimensional_corpus()) {
    const auto s = gs(a);
    const auto r = buchsbaum_report(s);
    std::vector<Point> rays;
    for (std::size_t i = 0; i < 2; ++i) {
      Coord m = 0;
      for (Coord k = 1; m == 0; ++k) {
        if (std::ranges::find(s.hilbert_basis(), k * unit_vector(2, i)) != s.hilbert_basis().end()) m = k;
      }
      rays.push_back(m * unit_vector(2, i));
    }
    std::set<Point> d;
    for (const auto& g : s.gaps()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = 0; j < rays.size(); ++j) {
          if (i != j && s.contains(g + 2 * rays[i]) && s.contains(g + 2 * rays[j])) d.insert(g);
        }
      }
    }
    CHECK(oracle::as_set(r.d_set) == d);
    for (const auto& f : r.pf) CHECK(d.count(f) == 1);
  }
}

TEST_CASE("Buchsbaum test on a proper sublattice") {
  // G(S) is the even-sum lattice, so odd points never qualify
  const auto s = AffineSemigroup(2, {{2, 0}, {0, 2}, {3, 1}, {1, 3}});
  CHECK_THROWS_AS(GapSemigroup::from_generators(s), InfiniteGapsError);
  const auto r = buchsbaum_report(s);
  CHECK(r.d_set == std::vector<Point>{{1, 1}});
  CHECK(r.pf == std::vector<Point>{{1, 1}});
  CHECK(r.is_buchsbaum);
  for (const auto& p : r.d_set) CHECK(p.degree() % 2 == 0);

  try {
    buchsbaum_report(AffineSemigroup(2, {{2, 0}, {0, 2}, {1, 1}}));
    FAIL("expected NotMPD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMPD);
  }
  CHECK(buchsbaum_report(fixtures::buchsbaum()).is_buchsbaum);
}
