#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcover/braid.hpp"
#include "tcover/movie.hpp"
#include "tcover/quandle.hpp"

namespace tcover {

struct TriplePoint {
  int sign = 1;
  std::array<std::uint32_t, 3> colors{};

  friend bool operator==(const TriplePoint&, const TriplePoint&) = default;
};

// Element c0 + c1 t + c2 t^2 of Z[t]/(t^3 - 1).
struct GroupRingElement {
  std::array<std::int64_t, 3> c{};

  static GroupRingElement monomial(int exponent);
  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;
};

std::string format_group_ring(const GroupRingElement& x);

// Triple points of every R3 step. Positive windows read the strand colors entering the window,
// negative windows the colors leaving it, at positions min(i,j), min(i,j)+1, min(i,j)+2.
std::vector<TriplePoint> triple_points(const ChartMovie& mv, const Coloring& coloring, const Quandle& q);

// Exponent (x-y)(y-z)z(x+z) mod 3.
int mochizuki_theta(std::uint32_t x, std::uint32_t y, std::uint32_t z);
int boltzmann_weight(const std::vector<TriplePoint>& triples);

// Phi over the 3-element dihedral quandle. Uses slide_movie when no movie is given.
GroupRingElement cocycle_invariant(const BraidWord& a, const BraidWord& b, const ChartMovie* movie = nullptr,
                                   unsigned workers = 0);

// Orientation-reversed mirror image of the chart: (a, b) -> (a^-1, b).
std::pair<BraidWord, BraidWord> mirror_chart(const BraidWord& a, const BraidWord& b);

}  // namespace tcover
