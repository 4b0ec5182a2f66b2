#pragma once

// Exponent-vector kernels. The single hot operation in every group routine is
//
//     out[j] = (base[j] + sum_i v[i] * T[i][j]) mod modulus[j]
//
// i.e. a row vector pushed through an integer matrix on Z/mod_0 x ... x
// Z/mod_{d-1}, followed by a translation. Multiplication in G, automorphism
// application and matrix powering all reduce to it.
//
// `scalar::affine_mod` is the reference. `avx2::affine_mod` handles the
// "narrow" regime (every modulus <= 2^20) in double-precision lanes, where
// every intermediate is an exactly representable integer. `affine_mod` picks
// one at runtime.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stringc::kernels {

inline constexpr std::int64_t kNarrowModulusLimit = std::int64_t{1} << 20;
inline constexpr std::int64_t kSmallModulusLimit = std::int64_t{1} << 26;
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// Square matrix over a mixed-modulus product of cyclic groups. Entry (i, j)
/// is stored reduced into [0, modulus[j]).
class ModMatrix {
 public:
  ModMatrix() = default;

  /// `entries` is row-major dim*dim, any integers. Throws InvalidParam on a
  /// size mismatch or a modulus outside [1, 2^62].
  ModMatrix(std::vector<std::int64_t> entries, std::vector<std::int64_t> moduli);

  static ModMatrix identity(std::vector<std::int64_t> moduli);

  std::size_t dim() const { return dim_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {entries_.data() + i * dim_, dim_};
  }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::span<const std::int64_t> moduli() const { return moduli_; }

  /// Every modulus <= 2^20: eligible for the AVX2 path.
  bool narrow() const { return narrow_; }
  /// Every modulus <= 2^26: the scalar path may accumulate in 64 bits.
  bool small() const { return small_; }

  // AVX2 staging. Columns are padded to a multiple of 4; padding columns have
  // zero entries and modulus 1.
  std::size_t padded_dim() const { return padded_; }
  const double* entries_f64() const { return entries_f64_.data(); }
  const double* moduli_f64() const { return moduli_f64_.data(); }
  const double* inv_moduli_f64() const { return inv_moduli_f64_.data(); }

  /// this * rhs with the result reduced per column.
  ModMatrix operator*(const ModMatrix& rhs) const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.dim_ == b.dim_ && a.moduli_ == b.moduli_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
  std::vector<std::int64_t> moduli_;
  bool narrow_ = true;
  bool small_ = true;
  std::size_t padded_ = 0;
  std::vector<double> entries_f64_;
  std::vector<double> moduli_f64_;
  std::vector<double> inv_moduli_f64_;
};

// Preconditions shared by all variants:
//   v.size() == out.size() == m.dim(); base is empty (treated as zero) or of
//   size m.dim(); v[i] in [0, moduli[i]); base[j] in [0, moduli[j]);
//   out does not alias v. out may alias base.

namespace scalar {
void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out);
}

namespace avx2 {
/// Built in and supported by the running CPU.
bool supported();
/// Requires supported() and m.narrow().
void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out);
}  // namespace avx2

/// Best variant for this CPU, honouring an override.
Isa active_isa();

/// Forces a variant (std::nullopt restores auto-detection). Forcing avx2 on a
/// CPU without it falls back to scalar. The environment variable STRINGC_ISA
/// ("scalar" or "avx2") sets the initial override.
void set_isa_override(std::optional<Isa> isa);

void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out);

}  // namespace stringc::kernels
