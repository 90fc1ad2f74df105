#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcover/braid.hpp"
#include "tcover/finite_group.hpp"
#include "tcover/free_group.hpp"

namespace tcover {

using BigInt = boost::multiprecision::cpp_int;

struct GroupPresentation {
  std::vector<std::string> names;
  std::vector<FreeWord> relators;
  // Designated central element carried along for quotient construction.
  std::optional<FreeWord> central;

  int generator_count() const { return static_cast<int>(names.size()); }
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct QuotientCounts {
  std::uint64_t homomorphisms = 0;
  std::uint64_t epimorphisms = 0;
  std::uint64_t abelian_image = 0;

  friend bool operator==(const QuotientCounts&, const QuotientCounts&) = default;
};

inline constexpr std::uint64_t kQuotientTupleCap = 100'000'000;

// Relators x_j^-1 Artin(a)(x_j) and x_j^-1 Artin(b)(x_j).
GroupPresentation torus_covering_group(const BraidWord& a, const BraidWord& b, bool allow_noncommuting = false);

// For b with normal form Delta^e: (x1...xm)^(e/2) if e is even, (x1...xm)^e if odd.
std::optional<FreeWord> central_word(const BraidWord& b);

GroupPresentation tietze_eliminate(const GroupPresentation& p);
GroupPresentation add_relator(const GroupPresentation& p, const FreeWord& w);

AbelianInvariants abelianization(const GroupPresentation& p);
// Smith invariants of an integer matrix given by rows.
AbelianInvariants smith_invariants(const std::vector<std::vector<BigInt>>& rows, int columns);
std::string format_abelian(const AbelianInvariants& inv);

QuotientCounts finite_quotient_count(const GroupPresentation& p, const FiniteGroup& target, unsigned workers = 0);
// Number of homomorphisms into Z/k determined by the abelian invariants alone.
BigInt predicted_cyclic_homs(const AbelianInvariants& inv, int k);

std::string format_presentation(const GroupPresentation& p);
GroupPresentation parse_presentation(std::string_view text);

}  // namespace tcover
