#include <doctest.h>

#include "support.hpp"
#include "tcover/braid.hpp"
#include "tcover/cocycle.hpp"
#include "tcover/quandle.hpp"

using namespace tcover;

namespace {

BraidWord thm_a() { return parse_braid("1 2 2 2 3", 4); }
BraidWord thm_b() { return parse_braid("(1 2 3)^4", 4); }

// Crossing rule written out directly on R_3: a * b = 2b - a.
std::pair<int, int> cross(int x, int y) { return {y, ((2 * y - x) % 3 + 3) % 3}; }

// All vectors in R_3^m fixed by both braids, by direct iteration of the crossing rule.
std::vector<Coloring> oracle_colorings(const BraidWord& a, const BraidWord& b) {
  const int m = a.degree();
  auto run = [](const BraidWord& w, std::vector<int> c) {
    for (int l : w.letters()) {
      int i = std::abs(l) - 1;
      if (l > 0) {
        std::tie(c[i], c[i + 1]) = cross(c[i], c[i + 1]);
      } else {
        // Inverse of (x, y) -> (y, x*y): find the preimage by search.
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            if (cross(x, y) == std::make_pair(c[i], c[i + 1])) {
              c[i] = x;
              c[i + 1] = y;
              goto done;
            }
      done:;
      }
    }
    return c;
  };
  std::vector<Coloring> out;
  int total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> c(m);
    for (int i = m - 1, v = code; i >= 0; --i, v /= 3) c[i] = v % 3;
    if (run(a, c) == c && run(b, c) == c) out.emplace_back(c.begin(), c.end());
  }
  return out;
}

}  // namespace

TEST_CASE("dihedral_quandle") {
  auto r3 = dihedral_quandle(3);
  CHECK(r3.op(1, 2) == 0);
  CHECK(r3.op(0, 1) == 2);
  for (std::uint32_t a = 0; a < 3; ++a) CHECK(r3.op(a, a) == a);
  auto r5 = dihedral_quandle(5);
  CHECK(r5.op(1, 3) == 0);
  CHECK(r5.op_inv(r5.op(2, 4), 4) == 2);
  CHECK_THROWS_AS(dihedral_quandle(2), std::invalid_argument);
}

TEST_CASE("quandle axiom checking") {
  CHECK(quandle_axiom_failure(3, dihedral_quandle(3).table()).empty());
  // Trivial quandle x * y = x is a quandle.
  CHECK(quandle_axiom_failure(2, {0, 0, 1, 1}).empty());
  // Not idempotent.
  CHECK_FALSE(quandle_axiom_failure(2, {1, 1, 0, 0}).empty());
  // Right translation by 0 is not a bijection.
  CHECK_FALSE(quandle_axiom_failure(3, {0, 0, 0, 0, 1, 1, 0, 2, 2}).empty());
  CHECK_THROWS_AS(Quandle::from_table(2, {1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("braid_monodromy examples") {
  auto q = dihedral_quandle(3);
  CHECK(braid_monodromy(BraidWord(3), q, {0, 1, 2}) == Coloring{0, 1, 2});
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) CHECK(braid_monodromy(BraidWord(2, {1, 1, 1}), q, {x, y}) == Coloring{x, y});
  std::mt19937 rng(9);
  for (int k = 0; k < 20; ++k) {
    auto beta = support::random_braid(rng, 5, 12);
    CHECK(braid_monodromy(beta, q, {2, 2, 2, 2, 2}) == Coloring{2, 2, 2, 2, 2});
  }
  CHECK(braid_monodromy(BraidWord(2, {1}), q, {0, 1}) == Coloring{1, 2});
  CHECK(braid_monodromy(BraidWord(2, {-1}), q, {1, 2}) == Coloring{0, 1});
  CHECK_THROWS_AS(braid_monodromy(BraidWord(3), q, {0, 1}), std::invalid_argument);
}

TEST_CASE("torus coloring census") {
  auto q = dihedral_quandle(3);
  auto cs = torus_colorings(thm_a(), thm_b(), q);
  CHECK(cs.size() == 9);
  int constant = 0, three = 0;
  for (const auto& c : cs) {
    bool all_same = std::all_of(c.begin(), c.end(), [&](auto v) { return v == c[0]; });
    constant += all_same;
  }
  // Non-constant ones show two colors on the boundary; the third shows up inside the chart.
  for (const auto& c : cs) three += c[0] != c[2];
  CHECK(constant == 3);
  CHECK(three == 6);
  CHECK(cs == oracle_colorings(thm_a(), thm_b()));

  CHECK(torus_colorings(BraidWord(2), BraidWord(2), q).size() == 9);
  CHECK(torus_colorings(BraidWord(2, {1, 1, 1}), BraidWord(2), q).size() == 9);
}

TEST_CASE("torus coloring oracle agreement on random commuting pairs") {
  std::mt19937 rng(13);
  for (int k = 0; k < 40; ++k) {
    auto g = support::random_braid(rng, 4, 5);
    auto a = product(product(g, BraidWord(4, {1, 3})), inverse(g));
    auto b = product(product(g, parse_braid("D^2", 4)), inverse(g));
    CHECK(torus_colorings(a, b, dihedral_quandle(3), 1) == oracle_colorings(a, b));
  }
}

TEST_CASE("torus coloring results do not depend on worker count") {
  auto q = dihedral_quandle(5);
  auto a = BraidWord(5, {1, 3});
  auto b = parse_braid("D^2", 5);
  auto one = torus_colorings(a, b, q, 1);
  CHECK(torus_colorings(a, b, q, 4) == one);
  CHECK(torus_colorings(a, b, q, 7) == one);
}

TEST_CASE("mochizuki_theta") {
  CHECK(mochizuki_theta(2, 1, 2) == 1);
  CHECK(mochizuki_theta(1, 2, 0) == 0);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t z = 0; z < 3; ++z) CHECK(mochizuki_theta(x, x, z) == 0);
}

TEST_CASE("boltzmann_weight") {
  CHECK(boltzmann_weight({}) == 0);
  CHECK(boltzmann_weight({{1, {2, 1, 2}}}) == 1);
  CHECK(boltzmann_weight({{-1, {2, 1, 2}}}) == 2);
  CHECK(boltzmann_weight({{1, {1, 1, 1}}, {-1, {0, 0, 0}}}) == 0);
}

TEST_CASE("group ring arithmetic") {
  auto t = GroupRingElement::monomial(1);
  CHECK((t * t * t) == GroupRingElement::monomial(0));
  CHECK(GroupRingElement::monomial(-1) == GroupRingElement::monomial(2));
  GroupRingElement x{{3, 0, 6}};
  CHECK(format_group_ring(x) == "3 + 6t^2");
  CHECK(format_group_ring(GroupRingElement{{3, 6, 0}}) == "3 + 6t");
  CHECK(format_group_ring(GroupRingElement{}) == "0");
  CHECK((x + t).c == std::array<std::int64_t, 3>{3, 1, 6});
}
