#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tcover {

// Finite permutation group stored as a full Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  static FiniteGroup symmetric(int k);  // k <= 5
  static FiniteGroup dihedral(int k);   // symmetries of the k-gon, order 2k, 3 <= k <= 12
  static FiniteGroup cyclic(int k);     // k >= 1
  // "S4", "D6", "Z5", "Z/5", "C5", "1"
  static FiniteGroup parse(std::string_view spec);
  static FiniteGroup generated_by(int points, const std::vector<std::vector<int>>& generators, std::string name);

  const std::string& name() const { return name_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  std::uint32_t identity() const { return 0; }
  // x then y as permutations.
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table_[x * order() + y]; }
  std::uint32_t inv(std::uint32_t x) const { return inverse_[x]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  const std::vector<std::uint32_t>& inverses() const { return inverse_; }
  const std::vector<int>& element(std::uint32_t x) const { return elements_[x]; }

  // Size of the subgroup generated by the given elements.
  std::uint32_t generated_order(const std::vector<std::uint32_t>& gens) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace tcover
