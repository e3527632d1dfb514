#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "affsemi/affine_semigroup.hpp"
#include "affsemi/point.hpp"

namespace affsemi {

// ---------------------------------------------------------------------------
// Gluing

struct GluingSpec {
  AffineSemigroup s1;
  AffineSemigroup s2;
  Point s;
};

/// Checks s in S1 ∩ S2 and G(S1) ∩ G(S2) = sZ, then returns the minimalized
/// union. Throws NotAGluingError naming the failed condition.
AffineSemigroup glue(const GluingSpec& spec);

struct GluedPF {
  /// {f + g + s}, sorted by GrLex.
  std::vector<Point> points;
  /// |pf1| * |pf2| - |points|
  std::size_t collisions = 0;
};

/// Throws EmptyPF when either side is empty.
GluedPF glued_pf(const std::vector<Point>& pf1, const std::vector<Point>& pf2, const Point& s);

// ---------------------------------------------------------------------------
// The four-generator family <(a,0), (0,a^p), (a+2,2), (2,2+a^p)>

/// a^p, for a odd >= 3 and p >= 1. Throws BadParams otherwise.
Coord family_power(Coord a, Coord p);

AffineSemigroup family_sap(Coord a, Coord p);
/// Generators in the fixed order (a,0), (0,a^p), (a+2,2), (2,2+a^p).
std::array<Point, 4> family_sap_generators(Coord a, Coord p);

/// f_l = (a^p(a+2) - (l+2)a - 2, a^p(l+2) - 2) for 0 <= l < a^p - 1.
std::vector<Point> delta_set(Coord a, Coord p);

struct DeltaCheck {
  std::size_t ell = 0;
  Point f;
  /// f is not in S.
  bool outside = false;
  /// f + g in S for each generator, in family_sap_generators order.
  std::array<bool, 4> shifted_member{};
  /// The explicit representation of f + g as a nonnegative combination holds.
  std::array<bool, 4> closed_form{};
  bool passed = false;
};

struct DeltaVerification {
  Coord a = 0;
  Coord p = 0;
  std::vector<DeltaCheck> rows;
  /// Number of rows that passed, a verified lower bound on the Betti-type.
  std::size_t verified = 0;
  bool passed = false;
};

DeltaVerification verify_delta_pf(Coord a, Coord p, unsigned threads = 1);

struct AperyWindow {
  /// {α(a+2,2) + α'(2,2+a^p) : α + α' < a^p}, sorted by GrLex.
  std::vector<Point> formula_side;
  /// Apéry elements w.r.t. {(a,0),(0,a^p)} inside [0, window], sorted by GrLex.
  std::vector<Point> window_scan;
  /// Every formula element is an Apéry element.
  bool formula_verified = false;
  /// formula_verified and window_scan equals formula_side inside the window.
  bool consistent = false;
};

AperyWindow apery_sap_window(Coord a, Coord p, const Point& window);

struct GluedPFWitness {
  Point point;
  bool verified = false;
};

struct FamilyGluing {
  AffineSemigroup semigroup;
  Point s;
  Coord mu = 0;
  std::size_t nu = 0;
  std::size_t embedding_dimension = 0;
  /// nu * (a^p - 1)
  std::size_t pf_lower_bound = 0;
  /// glued_pf(mu * Δ, (a,a^p) * PF(numerical), s), each checked pointwise.
  std::vector<GluedPFWitness> pf_witnesses;
};

/// <mu S_{a,p}, n_1 (a,a^p), ..., n_s (a,a^p)> with mu = sum n_i, glued by
/// s = mu (a,a^p). Throws BadParams, NotMinimal, or NotAGluing.
FamilyGluing family_saps(Coord a, Coord p, const std::vector<Coord>& numerical_generators);

/// <n_1 a, ..., n_k a>.
AffineSemigroup scale_numerical(const std::vector<Coord>& numerical_generators, const Point& a);

}  // namespace affsemi
