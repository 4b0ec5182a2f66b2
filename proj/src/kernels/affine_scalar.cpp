#include "stringc/kernels.hpp"

namespace stringc::kernels::scalar {

void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out) {
  const std::size_t d = m.dim();
  const auto moduli = m.moduli();
  const auto entries = m.entries();
  const bool has_base = !base.empty();

  if (m.small()) {
    // Products < 2^52 and d <= 256 keep the sum below 2^60.
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t acc = has_base ? base[j] : 0;
      for (std::size_t i = 0; i < d; ++i) acc += v[i] * entries[i * d + j];
      out[j] = acc % moduli[j];
    }
    return;
  }

  for (std::size_t j = 0; j < d; ++j) {
    const auto mod = static_cast<__int128>(moduli[j]);
    __int128 acc = has_base ? base[j] : 0;
    for (std::size_t i = 0; i < d; ++i) {
      acc = (acc + static_cast<__int128>(v[i]) * entries[i * d + j]) % mod;
    }
    out[j] = static_cast<std::int64_t>(acc);
  }
}

}  // namespace stringc::kernels::scalar
