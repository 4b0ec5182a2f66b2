#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

#include "stringc/errors.hpp"
#include "stringc/kernels.hpp"

namespace stringc::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

ModMatrix::ModMatrix(std::vector<std::int64_t> entries, std::vector<std::int64_t> moduli)
    : dim_(moduli.size()), entries_(std::move(entries)), moduli_(std::move(moduli)) {
  if (entries_.size() != dim_ * dim_) {
    throw InvalidParam("ModMatrix: entry count does not match dimension");
  }
  for (const auto mod : moduli_) {
    if (mod < 1 || mod > kMaxModulus) throw InvalidParam("ModMatrix: modulus out of range");
    narrow_ = narrow_ && mod <= kNarrowModulusLimit;
    small_ = small_ && mod <= kSmallModulusLimit;
  }
  small_ = small_ && dim_ <= 256;
  narrow_ = narrow_ && dim_ <= 256;

  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      auto& x = entries_[i * dim_ + j];
      x %= moduli_[j];
      if (x < 0) x += moduli_[j];
    }
  }

  padded_ = (dim_ + 3) / 4 * 4;
  if (narrow_) {
    entries_f64_.assign(dim_ * padded_, 0.0);
    moduli_f64_.assign(padded_, 1.0);
    inv_moduli_f64_.assign(padded_, 1.0);
    for (std::size_t j = 0; j < dim_; ++j) {
      moduli_f64_[j] = static_cast<double>(moduli_[j]);
      inv_moduli_f64_[j] = 1.0 / moduli_f64_[j];
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        entries_f64_[i * padded_ + j] = static_cast<double>(entries_[i * dim_ + j]);
      }
    }
  }
}

ModMatrix ModMatrix::identity(std::vector<std::int64_t> moduli) {
  const std::size_t d = moduli.size();
  std::vector<std::int64_t> entries(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) entries[i * d + i] = 1;
  return ModMatrix(std::move(entries), std::move(moduli));
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw InvalidParam("ModMatrix: dimension mismatch");
  std::vector<std::int64_t> product(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    // Row i of the left factor lives modulo the column moduli, which are the
    // row moduli of rhs.
    affine_mod(rhs, {}, row(i), std::span<std::int64_t>(product.data() + i * dim_, dim_));
  }
  return ModMatrix(std::move(product), rhs.moduli_);
}

namespace {

std::optional<Isa> initial_override() {
  const char* env = std::getenv("STRINGC_ISA");
  if (env == nullptr) return std::nullopt;
  if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
  if (std::strcmp(env, "avx2") == 0) return Isa::avx2;
  return std::nullopt;
}

// -1: auto; otherwise an Isa value.
std::atomic<int>& override_slot() {
  static std::atomic<int> slot = [] {
    const auto isa = initial_override();
    return isa ? static_cast<int>(*isa) : -1;
  }();
  return slot;
}

}  // namespace

Isa active_isa() {
  const int forced = override_slot().load(std::memory_order_relaxed);
  if (forced == static_cast<int>(Isa::scalar)) return Isa::scalar;
  return avx2::supported() ? Isa::avx2 : Isa::scalar;
}

void set_isa_override(std::optional<Isa> isa) {
  override_slot().store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void affine_mod(const ModMatrix& m, std::span<const std::int64_t> base,
                std::span<const std::int64_t> v, std::span<std::int64_t> out) {
  if (m.narrow() && active_isa() == Isa::avx2) {
    avx2::affine_mod(m, base, v, out);
  } else {
    scalar::affine_mod(m, base, v, out);
  }
}

}  // namespace stringc::kernels
