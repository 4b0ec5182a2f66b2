#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "stringc/arith.hpp"
#include "stringc/errors.hpp"
#include "stringc/kernels.hpp"

namespace kernels = stringc::kernels;
using stringc::arith::BigInt;

namespace {

struct Case {
  kernels::ModMatrix m;
  std::vector<std::int64_t> base;
  std::vector<std::int64_t> v;
};

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Case random_case(std::mt19937_64& rng, std::size_t dim, std::int64_t max_modulus, bool with_base) {
  std::vector<std::int64_t> moduli(dim);
  for (auto& mod : moduli) mod = uniform(rng, 1, max_modulus);
  std::vector<std::int64_t> entries(dim * dim);
  for (auto& x : entries) x = uniform(rng, -max_modulus, max_modulus);
  Case c{kernels::ModMatrix(entries, moduli), {}, std::vector<std::int64_t>(dim)};
  for (std::size_t i = 0; i < dim; ++i) c.v[i] = uniform(rng, 0, moduli[i] - 1);
  if (with_base) {
    c.base.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) c.base[i] = uniform(rng, 0, moduli[i] - 1);
  }
  return c;
}

// Exact oracle in arbitrary precision.
std::vector<std::int64_t> oracle(const Case& c) {
  const std::size_t dim = c.m.dim();
  std::vector<std::int64_t> out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    BigInt acc = c.base.empty() ? 0 : c.base[j];
    for (std::size_t i = 0; i < dim; ++i) acc += BigInt(c.v[i]) * c.m.at(i, j);
    const std::int64_t mod = c.m.moduli()[j];
    BigInt r = acc % mod;
    if (r < 0) r += mod;
    out[j] = static_cast<std::int64_t>(r);
  }
  return out;
}

std::vector<std::int64_t> run_scalar(const Case& c) {
  std::vector<std::int64_t> out(c.m.dim());
  kernels::scalar::affine_mod(c.m, c.base, c.v, out);
  return out;
}

class IsaGuard {
 public:
  ~IsaGuard() { kernels::set_isa_override(std::nullopt); }
};

}  // namespace

TEST(ModMatrix, ReducesEntriesPerColumn) {
  const kernels::ModMatrix m({-1, 7, 10, -9}, {3, 9});
  EXPECT_EQ(m.at(0, 0), 2);
  EXPECT_EQ(m.at(0, 1), 7);
  EXPECT_EQ(m.at(1, 0), 1);
  EXPECT_EQ(m.at(1, 1), 0);
  EXPECT_TRUE(m.narrow());
  EXPECT_TRUE(m.small());
  EXPECT_EQ(m.padded_dim() % 4, 0u);
}

TEST(ModMatrix, RejectsBadShapes) {
  EXPECT_THROW(kernels::ModMatrix({1, 2, 3}, {3, 3}), stringc::InvalidParam);
  EXPECT_THROW(kernels::ModMatrix({1}, {0}), stringc::InvalidParam);
}

TEST(ModMatrix, RegimeFlags) {
  EXPECT_FALSE(kernels::ModMatrix({1}, {kernels::kNarrowModulusLimit + 1}).narrow());
  EXPECT_TRUE(kernels::ModMatrix({1}, {kernels::kNarrowModulusLimit + 1}).small());
  EXPECT_FALSE(kernels::ModMatrix({1}, {kernels::kSmallModulusLimit + 1}).small());
}

TEST(ModMatrix, ProductMatchesNaive) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::vector<std::int64_t> moduli(dim, uniform(rng, 2, 1000));
    std::vector<std::int64_t> a(dim * dim), b(dim * dim);
    for (auto& x : a) x = uniform(rng, 0, moduli[0] - 1);
    for (auto& x : b) x = uniform(rng, 0, moduli[0] - 1);
    const kernels::ModMatrix ma(a, moduli), mb(b, moduli);
    const kernels::ModMatrix prod = ma * mb;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        BigInt acc = 0;
        for (std::size_t k = 0; k < dim; ++k) acc += BigInt(a[i * dim + k]) * b[k * dim + j];
        EXPECT_EQ(prod.at(i, j), static_cast<std::int64_t>(acc % moduli[0]));
      }
    }
  }
}

TEST(ModMatrix, IdentityIsNeutral) {
  const kernels::ModMatrix m({1, 2, 3, 4}, {5, 25});
  const auto id = kernels::ModMatrix::identity({5, 25});
  EXPECT_EQ(m * id, m);
}

TEST(ScalarKernel, MatchesOracleSmallRegime) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_case(rng, static_cast<std::size_t>(uniform(rng, 1, 13)), 1 << 20,
                               trial % 2 == 0);
    ASSERT_EQ(run_scalar(c), oracle(c)) << "trial " << trial;
  }
}

TEST(ScalarKernel, MatchesOracleWideRegime) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_case(rng, static_cast<std::size_t>(uniform(rng, 1, 13)),
                               kernels::kMaxModulus, trial % 2 == 0);
    ASSERT_FALSE(c.m.small());
    ASSERT_EQ(run_scalar(c), oracle(c)) << "trial " << trial;
  }
}

TEST(ScalarKernel, OutMayAliasBase) {
  std::mt19937_64 rng(3);
  auto c = random_case(rng, 6, 1000, true);
  const auto expected = oracle(c);
  kernels::scalar::affine_mod(c.m, c.base, c.v, c.base);
  EXPECT_EQ(c.base, expected);
}

TEST(Avx2Kernel, MatchesScalarAcrossDims) {
  if (!kernels::avx2::supported()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(uniform(rng, 1, 13));
    const std::int64_t max_mod = trial % 3 == 0 ? kernels::kNarrowModulusLimit : uniform(rng, 1, 700);
    const auto c = random_case(rng, dim, max_mod, trial % 2 == 0);
    ASSERT_TRUE(c.m.narrow());
    std::vector<std::int64_t> out(dim);
    kernels::avx2::affine_mod(c.m, c.base, c.v, out);
    ASSERT_EQ(out, run_scalar(c)) << "trial " << trial << " dim " << dim;
  }
}

TEST(Avx2Kernel, ExtremeNarrowValues) {
  if (!kernels::avx2::supported()) GTEST_SKIP() << "AVX2 not available";
  const std::int64_t mod = kernels::kNarrowModulusLimit;
  for (const std::size_t dim : {1u, 4u, 5u, 12u, 13u}) {
    std::vector<std::int64_t> entries(dim * dim, mod - 1);
    Case c{kernels::ModMatrix(entries, std::vector<std::int64_t>(dim, mod)),
           std::vector<std::int64_t>(dim, mod - 1), std::vector<std::int64_t>(dim, mod - 1)};
    std::vector<std::int64_t> out(dim);
    kernels::avx2::affine_mod(c.m, c.base, c.v, out);
    EXPECT_EQ(out, oracle(c)) << dim;
  }
}

TEST(Dispatch, OverrideSelectsVariant) {
  IsaGuard guard;
  kernels::set_isa_override(kernels::Isa::scalar);
  EXPECT_EQ(kernels::active_isa(), kernels::Isa::scalar);
  kernels::set_isa_override(kernels::Isa::avx2);
  EXPECT_EQ(kernels::active_isa(),
            kernels::avx2::supported() ? kernels::Isa::avx2 : kernels::Isa::scalar);
  EXPECT_STREQ(kernels::isa_name(kernels::Isa::scalar), "scalar");
  EXPECT_STREQ(kernels::isa_name(kernels::Isa::avx2), "avx2");
}

TEST(Dispatch, BothVariantsAgreeThroughEntryPoint) {
  IsaGuard guard;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = random_case(rng, static_cast<std::size_t>(uniform(rng, 1, 13)),
                               trial % 2 ? 243 : kernels::kMaxModulus, true);
    std::vector<std::int64_t> a(c.m.dim()), b(c.m.dim());
    kernels::set_isa_override(kernels::Isa::scalar);
    kernels::affine_mod(c.m, c.base, c.v, a);
    kernels::set_isa_override(kernels::Isa::avx2);
    kernels::affine_mod(c.m, c.base, c.v, b);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, oracle(c));
  }
}
