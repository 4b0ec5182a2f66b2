#include <gtest/gtest.h>

#include <vector>

#include "stringc/arith.hpp"
#include "stringc/errors.hpp"

using stringc::InvalidParam;
using stringc::arith::BigInt;
namespace arith = stringc::arith;

namespace {

// Pascal's triangle by addition only, independent of arith::binom.
std::vector<std::vector<BigInt>> pascal(int n_max) {
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

BigInt pascal_at(const std::vector<std::vector<BigInt>>& rows, int n, int k) {
  if (k < 0 || k > n) return 0;
  return rows[n][k];
}

}  // namespace

TEST(Binom, MatchesPascalTriangle) {
  const auto rows = pascal(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = -2; k <= n + 2; ++k) {
      ASSERT_EQ(arith::binom(n, k), pascal_at(rows, n, k)) << n << " " << k;
    }
  }
}

TEST(Binom, FrozenValues) {
  EXPECT_EQ(arith::binom(5, 2), 10);
  EXPECT_EQ(arith::binom(7, -1), 0);
  EXPECT_EQ(arith::binom(30, 15), 155117520);
  EXPECT_EQ(arith::binom(0, 0), 1);
  EXPECT_EQ(arith::binom(4, 5), 0);
}

TEST(Binom, LargeArgumentsDoNotOverflow) {
  const auto rows = pascal(100);
  EXPECT_EQ(arith::binom(100, 50), rows[100][50]);
  EXPECT_GT(arith::binom(100, 50), BigInt(1) << 64);
}

TEST(Binom, NegativeTopIsRejected) {
  EXPECT_THROW(arith::binom(-1, 0), InvalidParam);
}

TEST(Binom, PrimeRowVanishesModP) {
  for (const std::int64_t p : {3, 5, 7, 11, 13, 251}) {
    for (std::int64_t i = 1; i < p; ++i) {
      EXPECT_EQ(arith::binom(p, i) % p, 0) << p << " " << i;
    }
  }
}

TEST(BinomialIdentities, ExhaustiveUpToThirty) {
  const auto report = arith::check_binomial_identities(30);
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.violations.empty());
  EXPECT_GT(report.instances_checked, 0u);
}

TEST(BinomialIdentities, CountIsStableAcrossCalls) {
  EXPECT_EQ(arith::check_binomial_identities(10).instances_checked,
            arith::check_binomial_identities(10).instances_checked);
  EXPECT_LT(arith::check_binomial_identities(5).instances_checked,
            arith::check_binomial_identities(6).instances_checked);
}

TEST(Primes, OddPrimeRecognition) {
  EXPECT_TRUE(arith::is_odd_prime(3));
  EXPECT_TRUE(arith::is_odd_prime(251));
  EXPECT_FALSE(arith::is_odd_prime(2));
  EXPECT_FALSE(arith::is_odd_prime(1));
  EXPECT_FALSE(arith::is_odd_prime(9));
  EXPECT_FALSE(arith::is_odd_prime(-7));
  EXPECT_FALSE(arith::is_odd_prime(0));
}

TEST(Reduce, HandlesNegativesAndBigValues) {
  EXPECT_EQ(arith::reduce(-3, 9), 6);
  EXPECT_EQ(arith::reduce(-1, 1), 0);
  EXPECT_EQ(arith::reduce(arith::ipow(3, 100) + 2, 3), 2);
  EXPECT_EQ(arith::reduce(-arith::ipow(5, 40) - 1, 25), 24);
}

TEST(Ipow, SmallCases) {
  EXPECT_EQ(arith::ipow(3, 0), 1);
  EXPECT_EQ(arith::ipow(5, 6), 15625);
  EXPECT_EQ(arith::ipow(7, 4), 2401);
}

TEST(UCoefficients, FiveIsFrozen) {
  const auto u = arith::u_coefficients(5);
  const std::vector<BigInt> expected{-5, 10, 30, 35, 20, 5};
  EXPECT_EQ(u.u, expected);
  EXPECT_EQ(u[1], -5);
  EXPECT_EQ(u[6], 5);
}

TEST(UCoefficients, ThreeEndpoints) {
  const auto u = arith::u_coefficients(3);
  EXPECT_EQ(u[1], -3);
  EXPECT_EQ(u[4], 3);
  EXPECT_EQ(u[3], 6);  // (p-1) p
}

TEST(UCoefficients, TableSummationAgreesWithClosedForm) {
  for (const std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const auto table = arith::u_table_summation(p);
    const auto closed = arith::u_closed_form(p);
    ASSERT_EQ(table.size(), static_cast<std::size_t>(p + 1));
    EXPECT_EQ(table, closed) << "p=" << p;
    EXPECT_EQ(closed.front(), -p);
    EXPECT_EQ(closed.back(), p);
    EXPECT_EQ(closed[static_cast<std::size_t>(p - 1)], (p - 1) * p);
  }
}

// Entry (i, j) rebuilt from the product expansion: (s_j^sigma)^{-C(p,j)}
// contributes -C(p,j) times the exponent of s_i in s_j^sigma, and s_j^sigma is
// prod_{i>=j} s_i^{(-1)^{j+1} C(p+1-j, i-j)} for j >= 2.
TEST(UCoefficients, TableEntriesMatchSignedExpansion) {
  for (const std::int64_t p : {3, 5, 7}) {
    const auto rows = pascal(static_cast<int>(p + 1));
    const auto table = arith::u_contribution_table(p);
    ASSERT_EQ(table.size(), static_cast<std::size_t>(p + 1));
    for (std::int64_t i = 1; i <= p + 1; ++i) {
      for (std::int64_t j = 1; j <= p - 1; ++j) {
        BigInt expected = 0;
        if (j == 1) {
          expected = i == 1 ? BigInt(-p) : BigInt(0);
        } else {
          const BigInt image_exp = pascal_at(rows, static_cast<int>(p + 1 - j), static_cast<int>(i - j));
          const BigInt sign = (j % 2 == 1) ? 1 : -1;
          expected = -sign * image_exp * pascal_at(rows, static_cast<int>(p), static_cast<int>(j));
        }
        EXPECT_EQ(table[i - 1][j - 1], expected) << "p=" << p << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(UCoefficients, RejectsNonPrimes) {
  EXPECT_THROW(arith::u_coefficients(4), InvalidParam);
  EXPECT_THROW(arith::u_coefficients(2), InvalidParam);
  EXPECT_THROW(arith::u_coefficients(1), InvalidParam);
}
