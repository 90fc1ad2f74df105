#pragma once

#include <cstdint>
#include <cstddef>
#include <string_view>

namespace tcover::kernels {

// Batched table lookups used by the enumeration loops (Cayley tables, quandle tables).
struct Kernels {
  std::string_view name;
  // out[k] = table[lhs[k] * stride + rhs[k]]; out may alias lhs or rhs.
  void (*lookup)(const std::uint32_t* table, std::uint32_t stride, const std::uint32_t* lhs, const std::uint32_t* rhs,
                 std::uint32_t* out, std::size_t n);
  // flags[k] &= (a[k] == b[k])
  void (*and_equal)(const std::uint32_t* a, const std::uint32_t* b, std::uint8_t* flags, std::size_t n);
  // flags[k] &= (a[k] == value)
  void (*and_equal_const)(const std::uint32_t* a, std::uint32_t value, std::uint8_t* flags, std::size_t n);
};

enum class Isa { Scalar, Avx2 };

const Kernels& scalar();
// nullptr when the variant is not compiled in or the CPU lacks it.
const Kernels* variant(Isa isa);
// Best available variant; TCOVER_SIMD=scalar forces the reference kernels.
const Kernels& active();

}  // namespace tcover::kernels
