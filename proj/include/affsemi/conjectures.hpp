#pragma once

#include <cstddef>
#include <vector>

#include "affsemi/affine_semigroup.hpp"
#include "affsemi/gap_semigroup.hpp"
#include "affsemi/lattice.hpp"

namespace affsemi {

struct WilfReport {
  Point frobenius;
  std::size_t embedding_dimension = 0;
  std::size_t genus = 0;
  /// |{g in S : g < F}|
  std::size_t sporadic = 0;
  /// genus + sporadic
  std::size_t n_frobenius = 0;
  /// sporadic * e(S) >= n_frobenius + 1
  bool holds = false;
};

/// Throws EmptyGapSet, or OrderNotPredecessorFinite for Lex in d >= 2.
WilfReport wilf_report(const GapSemigroup& s, const TermOrder& order);

struct BuchsbaumReport {
  std::vector<Point> extremal_rays;
  std::vector<Point> d_set;
  std::vector<Point> pf;
  bool is_buchsbaum = false;
};

/// D = {a in G(S) \ S : a + 2a_i, a + 2a_j in S for some i != j} over the
/// axis rays a_i = m_i e_i, compared against PF(S).
/// Throws DimensionOne or EmptyGapSet.
BuchsbaumReport buchsbaum_report(const GapSemigroup& s);

/// Generator version. Full-cone C-semigroups go through the gap set; in N^2 a
/// semigroup with infinitely many gaps is searched on the box bounded by its
/// axis Apéry set. Throws NotFullCone, DimensionOne, InfiniteGaps (d >= 3), or
/// NotMPD when PF(S) is empty.
BuchsbaumReport buchsbaum_report(const AffineSemigroup& s, const Budget& budget = {});

}  // namespace affsemi
