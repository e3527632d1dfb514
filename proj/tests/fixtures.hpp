#pragma once

#include <vector>

#include "affsemi/affine_semigroup.hpp"
#include "affsemi/gap_semigroup.hpp"

namespace fixtures {

using affsemi::AffineSemigroup;
using affsemi::Point;

// Eleven gaps in two columns, PF = {(1,3),(2,6)}.
inline AffineSemigroup eleven_gaps() {
  return AffineSemigroup(2, {{0, 1}, {3, 0}, {4, 0}, {1, 4}, {5, 0}, {2, 7}});
}

// Gaps {(0,1),(0,2)}, Buchsbaum.
inline AffineSemigroup buchsbaum() {
  return AffineSemigroup(2, {{1, 0}, {1, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
}

// Pseudo-symmetric with PF = {(1,4),(2,8)}.
inline AffineSemigroup betti_two() {
  return AffineSemigroup(2, {{0, 1}, {3, 0}, {4, 0}, {1, 5}, {5, 0}, {2, 9}});
}

// Almost symmetric with PF = {(1,3),(2,6),(3,9)}.
inline AffineSemigroup betti_three() {
  return AffineSemigroup(2, {{0, 1}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {1, 4}, {2, 7}, {3, 10}});
}

// Not Arf; its derived monoid is its Arf closure.
inline AffineSemigroup arf_input() {
  return AffineSemigroup(2, {{0, 1}, {3, 0}, {5, 0}, {1, 3}, {2, 3}});
}

// N^2 minus {(1,0),(1,1)}, an Arf monoid.
inline AffineSemigroup arf_monoid() {
  return AffineSemigroup(2, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
}

// Generated on the ray through (1,2); a PI-monoid.
inline AffineSemigroup pi_ray() {
  return AffineSemigroup(2, {{6, 12}, {8, 16}, {9, 18}, {10, 20}, {11, 22}, {13, 26}});
}

inline AffineSemigroup numerical(std::vector<affsemi::Coord> gens) {
  std::vector<Point> pts;
  for (auto g : gens) pts.push_back(Point{g});
  return AffineSemigroup(1, pts);
}

inline std::vector<AffineSemigroup> two_dimensional_corpus() {
  return {eleven_gaps(), buchsbaum(), betti_two(), betti_three(), arf_input(), arf_monoid()};
}

}  // namespace fixtures
