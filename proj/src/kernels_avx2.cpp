#include <immintrin.h>

#include "tcover/kernels.hpp"

namespace tcover::kernels {

namespace {

void lookup(const std::uint32_t* table, std::uint32_t stride, const std::uint32_t* lhs, const std::uint32_t* rhs,
            std::uint32_t* out, std::size_t n) {
  const __m256i vstride = _mm256_set1_epi32(static_cast<int>(stride));
  const int* base = reinterpret_cast<const int*>(table);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs + k));
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs + k));
    __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(l, vstride), r);
    __m256i v = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), v);
  }
  for (; k < n; ++k) out[k] = table[lhs[k] * stride + rhs[k]];
}

// Packs eight 32-bit compare lanes into eight flag bytes.
inline void and_mask(__m256i eq, std::uint8_t* flags) {
  unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
  for (int j = 0; j < 8; ++j) flags[j] &= static_cast<std::uint8_t>((mask >> j) & 1u);
}

void and_equal(const std::uint32_t* a, const std::uint32_t* b, std::uint8_t* flags, std::size_t n) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    and_mask(_mm256_cmpeq_epi32(va, vb), flags + k);
  }
  for (; k < n; ++k) flags[k] &= static_cast<std::uint8_t>(a[k] == b[k]);
}

void and_equal_const(const std::uint32_t* a, std::uint32_t value, std::uint8_t* flags, std::size_t n) {
  const __m256i vv = _mm256_set1_epi32(static_cast<int>(value));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    and_mask(_mm256_cmpeq_epi32(va, vv), flags + k);
  }
  for (; k < n; ++k) flags[k] &= static_cast<std::uint8_t>(a[k] == value);
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{"avx2", lookup, and_equal, and_equal_const};
  return k;
}

}  // namespace tcover::kernels
