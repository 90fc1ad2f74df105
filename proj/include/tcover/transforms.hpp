#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tcover/braid.hpp"

namespace tcover {

struct ChartData {
  BraidWord a;  // vertical boundary braid
  BraidWord b;  // horizontal boundary braid

  int degree() const { return a.degree(); }
};

using IntMatrix3 = std::array<std::array<long long, 3>, 3>;

// det = +-1, first row (+-1, 0, 0), lower-right 2x2 entries of even sum.
bool h_membership(const IntMatrix3& m);
long long determinant3(const IntMatrix3& m);
IntMatrix3 multiply3(const IntMatrix3& x, const IntMatrix3& y);
IntMatrix3 parse_matrix3(std::string_view text);

// Throws unless a and b commute (ChartData invariant).
ChartData make_chart(const BraidWord& a, const BraidWord& b);

// Quarter rotation: (a, b) -> (b^-1, a).
ChartData rho(const ChartData& c);
// Turning: (a, b) -> (a, b a).
ChartData tau(const ChartData& c);

std::string format_chart(const ChartData& c);
ChartData parse_chart(std::string_view text);

}  // namespace tcover
