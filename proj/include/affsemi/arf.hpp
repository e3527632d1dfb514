#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "affsemi/affine_semigroup.hpp"
#include "affsemi/gap_semigroup.hpp"

namespace affsemi {

/// S' = {y + z - x : x, y, z in S, x <= y <= z}. Each gap g is searched on
/// [0, g] only, since y + z - x = g with x <= y <= z forces x, y, z <= g.
GapSemigroup arf_derived(const GapSemigroup& s, unsigned threads = 1);

struct ArfClosure {
  GapSemigroup closure;
  /// Number of derived steps that changed the monoid.
  std::size_t steps;
};

/// Iterates arf_derived to its fixpoint.
ArfClosure arf_closure(const GapSemigroup& s, unsigned threads = 1);

bool is_arf(const GapSemigroup& s, unsigned threads = 1);

/// (offset + base) ∪ {0} with offset a nonzero element of base.
class PIMonoid {
 public:
  PIMonoid(Point offset, GapSemigroup base);

  const Point& offset() const noexcept { return offset_; }
  const GapSemigroup& base() const noexcept { return base_; }
  bool contains(const Point& p) const;

 private:
  Point offset_;
  GapSemigroup base_;
};

/// (a + S) ∪ {0} is Arf exactly when S is.
bool is_arf_pi(const PIMonoid& p, unsigned threads = 1);

struct PICheck {
  Point multiplicity;
  bool attained = false;
  /// Absent when the multiplicity is not a nonzero member.
  std::optional<bool> result;
};

/// x + y - m(S) in S* for all x, y in S*, checked on generator pairs.
PICheck is_pi(const AffineSemigroup& s);
PICheck is_pi(const GapSemigroup& s);

/// S = (m + T) ∪ {0} with T = -m + S* generated by m and the g - m.
struct AffinePIDecomposition {
  Point offset;
  AffineSemigroup base;
};

/// Throws NotPI unless is_pi holds.
AffinePIDecomposition pi_decompose(const AffineSemigroup& s);
/// Base gaps are {q != 0 : m + q not in S}. Throws NotPI unless is_pi holds.
PIMonoid pi_decompose(const GapSemigroup& s);

/// Hypotheses shared by the two shifted-chain checks: the gens form a chain
/// under <= and every a_l <= a_i + a_j. Throws HypothesisError.
void require_chain_hypotheses(const Point& a, const std::vector<Point>& gens);

/// a + (S^k ∩ window) ⊆ Arf(<a, a + a_1, ..., a + a_n>) where S = <a, a_1, ..., a_n>
/// and S^k is the k-th derived monoid, computed exactly inside the window.
bool check_shifted_power_containment(const Point& a, const std::vector<Point>& gens, std::size_t k,
                                     const Point& window);
/// Window defaults to 4 times the largest coordinate of a and the a_i, in every coordinate.
bool check_shifted_power_containment(const Point& a, const std::vector<Point>& gens, std::size_t k);

/// Arf(<a, a + a_1, ..., a + a_n>) = (a + Arf(<a, a_1, ..., a_n>)) ∪ {0},
/// compared exactly. Both sides need finite gap sets.
bool check_shifted_closure_identity(const Point& a, const std::vector<Point>& gens);

}  // namespace affsemi
