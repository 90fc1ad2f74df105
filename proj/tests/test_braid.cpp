#include <doctest.h>

#include "support.hpp"
#include "tcover/braid.hpp"

using namespace tcover;

namespace {

BraidWord w(int m, std::vector<int> l) { return BraidWord(m, std::move(l)); }

// Independent permutation oracle: positions of strands, one transposition per letter.
std::vector<int> oracle_perm(const BraidWord& u) {
  std::vector<int> where(u.degree());
  for (int i = 0; i < u.degree(); ++i) where[i] = i;  // where[strand] = position
  for (int l : u.letters()) {
    int i = std::abs(l) - 1;
    for (int& p : where) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return where;
}

}  // namespace

TEST_CASE("parse_braid examples") {
  CHECK(parse_braid("1 2 2 2 3", 4) == w(4, {1, 2, 2, 2, 3}));
  CHECK(parse_braid("", 4).empty());
  CHECK(parse_braid("-1 1", 2) == w(2, {-1, 1}));
  CHECK(parse_braid("s1^3 s2^-1", 3) == w(3, {1, 1, 1, -2}));
  CHECK(parse_braid("(1 2 3)^4", 4).size() == 12);
  CHECK(parse_braid("(1 -2)^-2", 3) == w(3, {2, -1, 2, -1}));
  CHECK(parse_braid("D", 4) == w(4, {1, 2, 3, 1, 2, 1}));
  CHECK(parse_braid("D^-1", 3) == w(3, {-1, -2, -1}));
  CHECK(parse_braid("e", 3).empty());
  CHECK_THROWS_AS(parse_braid("4", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("0", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("1 x", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("(1 2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("1)", 4), std::invalid_argument);
}

TEST_CASE("format_braid round trip") {
  auto u = w(5, {1, -3, 2, 4, -4});
  CHECK(format_braid(u) == "1 -3 2 4 -4");
  CHECK(parse_braid(format_braid(u), 5) == u);
}

TEST_CASE("product, inverse, reverse") {
  CHECK(product(w(4, {1}), w(4, {3})) == w(4, {1, 3}));
  CHECK(inverse(w(3, {1, 2})) == w(3, {-2, -1}));
  CHECK(reverse(w(4, {1, 2, 3})) == w(4, {3, 2, 1}));
  CHECK_THROWS_AS(product(w(3, {1}), w(4, {1})), std::invalid_argument);
}

TEST_CASE("permutation examples") {
  CHECK(permutation(BraidWord(4)).is_identity());
  // s1 s2^3 s3: 1 -> 4 -> 3 -> 2 -> 1 (1-based)
  auto p = permutation(w(4, {1, 2, 2, 2, 3}));
  CHECK(p.image == std::vector<int>{3, 0, 1, 2});
  CHECK(p.cycle_count() == 1);
  CHECK(permutation(w(4, {1, 3})).image == std::vector<int>{1, 0, 3, 2});
}

TEST_CASE("permutation agrees with the transposition oracle") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto u = support::random_braid(rng, 6, 25);
    CHECK(permutation(u).image == oracle_perm(u));
  }
}

TEST_CASE("garside_delta") {
  CHECK(garside_delta(4) == w(4, {1, 2, 3, 1, 2, 1}));
  CHECK(garside_delta(2) == w(2, {1}));
  CHECK(garside_delta(3) == w(3, {1, 2, 1}));
  CHECK_THROWS_AS(garside_delta(1), std::invalid_argument);
}

TEST_CASE("normal_form examples") {
  auto nf = normal_form(w(2, {1, -1}));
  CHECK(nf.infimum == 0);
  CHECK(nf.factors.empty());
  CHECK(normal_form(parse_braid("(1 2 3)^4", 4)) == normal_form(parse_braid("D^2", 4)));
  CHECK(normal_form(parse_braid("D^2", 4)).infimum == 2);
  CHECK(normal_form(w(4, {1, 3})) == normal_form(w(4, {3, 1})));
  CHECK(normal_form(parse_braid("D^-3", 5)).infimum == -3);
}

TEST_CASE("normal form serialization round trip") {
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    auto u = support::random_braid(rng, 5, 20);
    auto nf = normal_form(u);
    CHECK(parse_normal_form(format_normal_form(nf)) == nf);
    CHECK(braids_equal(to_word(nf), u));
  }
  CHECK(format_normal_form(normal_form(w(3, {1}))) == "degree 3 inf 0 | 2 1 3");
}

TEST_CASE("braids_equal agrees with the free group action oracle") {
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    int m = 2 + k % 4;
    auto u = support::random_braid(rng, m, 8);
    auto v = support::random_braid(rng, m, 8);
    CHECK(braids_equal(u, v) == support::oracle_equal(u, v));
    auto shuffled = product(u, product(v, inverse(v)));
    CHECK(braids_equal(u, shuffled));
  }
}

TEST_CASE("commute_check examples") {
  CHECK(commute_check(w(4, {1, 3}), parse_braid("D^2", 4)));
  CHECK(commute_check(w(4, {1, 3}), garside_delta(4)));
  CHECK_FALSE(commute_check(w(3, {1}), w(3, {2})));
  CHECK(commute_check(parse_braid("1 2 2 2 3", 4), parse_braid("(1 2 3)^4", 4)));
}

TEST_CASE("iota_embed") {
  auto beta = w(3, {1, -2});
  CHECK(iota_embed(beta, 0, 0) == beta);
  CHECK(iota_embed(w(2, {1, 1}), 2, 0) == w(4, {3, 3}));
  CHECK(iota_embed(w(2, {1}), 1, 1) == w(4, {2}));
  CHECK(iota_embed(beta, 2, 1) == w(6, {3, -4}));
  CHECK_THROWS_AS(iota_embed(beta, -1, 0), std::invalid_argument);
}

TEST_CASE("n_prime_sigma1") {
  CHECK(n_prime_sigma1(1) == w(2, {1}));
  CHECK(n_prime_sigma1(2) == w(4, {2, 1, 3, 2}));
  CHECK(n_prime_sigma1(3) == w(6, {3, 2, 1, 4, 5, 3, 2, 4, 3}));
  CHECK_THROWS_AS(n_prime_sigma1(0), std::invalid_argument);
  // The cabled crossing moves block 1 onto block 2 keeping strand order inside blocks.
  for (int n = 1; n <= 4; ++n) {
    auto p = permutation(n_prime_sigma1(n));
    for (int i = 0; i < n; ++i) {
      CHECK(p.image[i] == n + i);
      CHECK(p.image[n + i] == i);
    }
  }
}

TEST_CASE("cable_lift") {
  CHECK(cable_lift(w(2, {1, 1}), 2) == w(4, {2, 1, 3, 2, 2, 1, 3, 2}));
  CHECK(cable_lift(BraidWord(3), 2).empty());
  CHECK(cable_lift(BraidWord(3), 2).degree() == 6);
  CHECK(braids_equal(cable_lift(w(2, {1, -1}), 2), BraidWord(4)));
  CHECK(cable_lift(w(3, {2}), 2) == w(6, {4, 3, 5, 4}));
  CHECK(cable_lift(w(3, {1, 2}), 1) == w(3, {1, 2}));
  // The cabled half twist times the half twists inside the cables is the big half twist.
  CHECK(braids_equal(product(cable_lift(garside_delta(3), 2), w(6, {1, 3, 5})), garside_delta(6)));
}

TEST_CASE("delete_strands") {
  // Full twist on 4 strands restricted to strands 1 and 3 is the full twist on 2 strands.
  auto d2 = parse_braid("D^2", 4);
  auto r = delete_strands(d2, {true, false, true, false});
  CHECK(r.degree() == 2);
  CHECK(braids_equal(r, w(2, {1, 1})));
  CHECK(delete_strands(w(3, {1, 2}), {true, true, true}) == w(3, {1, 2}));
  CHECK(delete_strands(w(3, {1}), {true, false, true}).empty());
}
