#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcover/braid.hpp"

namespace tcover {

// b = cable_lift(tubular, n) * prod_j iota(interior[j]),  a = prod_j iota(vertical[j]).
struct CableDecomposition {
  int n = 1;
  int m = 1;
  BraidWord tubular;
  std::vector<BraidWord> interior;
  std::vector<BraidWord> vertical;
};

enum class UnknotStatus { Unknot, NotUnknot, Unknown };

struct UnknotVerdict {
  UnknotStatus status = UnknotStatus::Unknown;
  std::string evidence;
};

struct RibbonVerdict {
  bool ribbon = false;
  std::optional<CableDecomposition> certificate;
  std::string reason;
};

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// prod_j iota_embed(parts[j], n(j-1), n(m-j)).
BraidWord block_product(const std::vector<BraidWord>& parts, int n);

bool verify_decomposition(const BraidWord& a, const BraidWord& b, const CableDecomposition& w);

// R(b) is read off by deleting all but one strand per block, the interior braids by deleting the other
// blocks from the remainder. Words longer than length_cap are reported through SearchCapExceeded.
std::optional<CableDecomposition> search_decomposition(const BraidWord& a, const BraidWord& b, int n, int m,
                                                       int length_cap = 16);

UnknotVerdict unknot_check(const BraidWord& beta);

RibbonVerdict ribbon_verdict(const BraidWord& a, const BraidWord& b, int n, int m,
                             const CableDecomposition* witness = nullptr, int length_cap = 16);

std::string format_certificate(const CableDecomposition& w);
CableDecomposition parse_certificate(std::string_view text);

}  // namespace tcover
