#include "tcover/kernels.hpp"

namespace tcover::kernels {

namespace {

void lookup(const std::uint32_t* table, std::uint32_t stride, const std::uint32_t* lhs, const std::uint32_t* rhs,
            std::uint32_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = table[lhs[k] * stride + rhs[k]];
}

void and_equal(const std::uint32_t* a, const std::uint32_t* b, std::uint8_t* flags, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) flags[k] &= static_cast<std::uint8_t>(a[k] == b[k]);
}

void and_equal_const(const std::uint32_t* a, std::uint32_t value, std::uint8_t* flags, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) flags[k] &= static_cast<std::uint8_t>(a[k] == value);
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", lookup, and_equal, and_equal_const};
  return k;
}

}  // namespace tcover::kernels
