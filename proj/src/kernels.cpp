#include <cstdlib>
#include <string_view>

#include "tcover/kernels.hpp"

namespace tcover::kernels {

#ifdef TCOVER_HAVE_AVX2
const Kernels& avx2_kernels();
#endif

const Kernels* variant(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar();
    case Isa::Avx2:
#ifdef TCOVER_HAVE_AVX2
      if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
      return nullptr;
  }
  return nullptr;
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("TCOVER_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
    if (const Kernels* k = variant(Isa::Avx2)) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace tcover::kernels
