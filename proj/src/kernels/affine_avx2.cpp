#include <immintrin.h>

#include <algorithm>
#include <cstring>

#include "stringc/kernels.hpp"

namespace stringc::kernels::avx2 {

bool supported() {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return ok;
}

// Narrow regime: v[i], T[i][j] < 2^20, so each product is < 2^40 and the
// accumulated dot product (d <= 256 terms) stays far below 2^53. Every double
// below is an exact integer; floor(acc / mod) may be off by one and is
// corrected after the remainder is formed.
void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out) {
  const std::size_t d = m.dim();
  const std::size_t padded = m.padded_dim();
  const double* T = m.entries_f64();
  const double* mods = m.moduli_f64();
  const double* invs = m.inv_moduli_f64();
  const std::int64_t* mods_i64 = m.moduli().data();
  const bool has_base = !base.empty();
  const __m256d zero = _mm256_setzero_pd();

  for (std::size_t j0 = 0; j0 < padded; j0 += 4) {
    __m256d acc = zero;
    for (std::size_t i = 0; i < d; ++i) {
      const __m256d vi = _mm256_set1_pd(static_cast<double>(v[i]));
      acc = _mm256_fmadd_pd(vi, _mm256_loadu_pd(T + i * padded + j0), acc);
    }

    const __m256d mod = _mm256_loadu_pd(mods + j0);
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(acc, _mm256_loadu_pd(invs + j0)));
    __m256d r = _mm256_fnmadd_pd(q, mod, acc);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), mod));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, mod, _CMP_GE_OQ), mod));

    const std::size_t lanes = std::min<std::size_t>(4, d - j0);
    alignas(32) std::int64_t base_lane[4] = {0, 0, 0, 0};
    alignas(32) std::int64_t mod_lane[4] = {1, 1, 1, 1};
    if (has_base) std::memcpy(base_lane, base.data() + j0, lanes * sizeof(std::int64_t));
    std::memcpy(mod_lane, mods_i64 + j0, lanes * sizeof(std::int64_t));

    __m256i ri = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(r));
    const __m256i mi = _mm256_load_si256(reinterpret_cast<const __m256i*>(mod_lane));
    ri = _mm256_add_epi64(ri, _mm256_load_si256(reinterpret_cast<const __m256i*>(base_lane)));
    const __m256i wrap =
        _mm256_cmpgt_epi64(ri, _mm256_sub_epi64(mi, _mm256_set1_epi64x(1)));
    ri = _mm256_sub_epi64(ri, _mm256_and_si256(wrap, mi));

    if (lanes == 4) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + j0), ri);
    } else {
      alignas(32) std::int64_t tail[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(tail), ri);
      std::memcpy(out.data() + j0, tail, lanes * sizeof(std::int64_t));
    }
  }
}

}  // namespace stringc::kernels::avx2
