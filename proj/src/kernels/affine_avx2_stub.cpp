// Non-x86 builds (or STRINGC_ENABLE_AVX2=OFF): the AVX2 variant is absent and
// dispatch always selects the scalar kernel.

#include "stringc/kernels.hpp"

namespace stringc::kernels::avx2 {

bool supported() { return false; }

void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out) {
  scalar::affine_mod(m, base, v, out);
}

}  // namespace stringc::kernels::avx2
