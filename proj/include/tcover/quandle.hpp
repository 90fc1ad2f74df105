#pragma once

#include <cstdint>
#include <vector>

#include "tcover/braid.hpp"

namespace tcover {

using Coloring = std::vector<std::uint32_t>;

class Quandle {
 public:
  // Throws unless the table satisfies the quandle axioms.
  static Quandle from_table(std::uint32_t order, std::vector<std::uint32_t> table);

  std::uint32_t order() const { return order_; }
  std::uint32_t op(std::uint32_t x, std::uint32_t y) const { return table_[x * order_ + y]; }
  // The unique z with z * y = x.
  std::uint32_t op_inv(std::uint32_t x, std::uint32_t y) const { return inverse_[x * order_ + y]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  const std::vector<std::uint32_t>& inverse_table() const { return inverse_; }

 private:
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

// Diagnostic for each axiom; empty string when all hold.
std::string quandle_axiom_failure(std::uint32_t order, const std::vector<std::uint32_t>& table);

// a * b = 2b - a mod p.
Quandle dihedral_quandle(int p);

// s_i acts on strand colors (x_i, x_{i+1}) as (x, y) -> (y, x * y); s_i^-1 is the inverse map.
Coloring braid_monodromy(const BraidWord& beta, const Quandle& q, const Coloring& colors);

// Colorings fixed by both monodromies, in lexicographic order.
std::vector<Coloring> torus_colorings(const BraidWord& a, const BraidWord& b, const Quandle& q, unsigned workers = 0,
                                      bool allow_noncommuting = false);

inline constexpr std::uint64_t kColoringCandidateCap = 100'000'000;

}  // namespace tcover
