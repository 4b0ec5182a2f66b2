#include "stringc/arith.hpp"

#include <algorithm>
#include <sstream>

#include "stringc/errors.hpp"

namespace stringc::arith {

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidParam("ipow: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::int64_t reduce(const BigInt& x, std::int64_t modulus) {
  if (modulus <= 0) throw InvalidParam("reduce: modulus must be positive");
  BigInt r = x % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::int64_t>();
}

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidParam("binom: upper index must be non-negative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i)
  }
  return result;
}

IdentityReport check_binomial_identities(std::int64_t n_max) {
  if (n_max < 1) throw InvalidParam("check_binomial_identities: n_max must be >= 1");

  // Pascal table up to n_max + 2 so identity 2 can reach C(n+2, m+1).
  const std::int64_t rows = n_max + 3;
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(rows));
  for (std::int64_t n = 0; n < rows; ++n) {
    table[n].assign(static_cast<std::size_t>(n + 1), BigInt(1));
    for (std::int64_t k = 1; k < n; ++k) table[n][k] = binom(n, k);
  }
  auto C = [&](std::int64_t n, std::int64_t k) -> const BigInt& {
    static const BigInt zero = 0;
    if (k < 0 || k > n) return zero;
    return table[n][k];
  };

  IdentityReport report;
  report.n_max = n_max;
  auto fail = [&](int id, std::int64_t n, std::int64_t m, std::int64_t k) {
    report.violations.push_back({id, n, m, k});
  };

  for (std::int64_t n = 0; n <= n_max; ++n) {
    BigInt alternating = 0;
    for (std::int64_t m = 0; m <= n; ++m) {
      if (C(n, m) != C(n, n - m)) fail(1, n, m, 0);
      if (C(n + 2, m + 1) != C(n + 1, m + 1) + C(n + 1, m)) fail(2, n, m, 0);
      report.instances_checked += 2;

      alternating += (m % 2 == 0) ? C(n, m) : BigInt(-C(n, m));
      if (n >= 1) {
        const BigInt rhs = (m % 2 == 0) ? C(n - 1, m) : BigInt(-C(n - 1, m));
        if (alternating != rhs) fail(4, n, m, 0);
        ++report.instances_checked;
      }

      for (std::int64_t k = 0; k <= m; ++k) {
        if (C(n, m) * C(m, k) != C(n, k) * C(n - k, m - k)) fail(3, n, m, k);
        ++report.instances_checked;
      }
    }
  }
  return report;
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p)) {
    std::ostringstream msg;
    msg << "p must be an odd prime (got " << p << ")";
    throw InvalidParam(msg.str());
  }
}

}  // namespace

std::vector<std::vector<BigInt>> u_contribution_table(std::int64_t p) {
  require_odd_prime(p);
  const auto rows = static_cast<std::size_t>(p + 1);
  const auto cols = static_cast<std::size_t>(p - 1);
  std::vector<std::vector<BigInt>> table(rows, std::vector<BigInt>(cols, BigInt(0)));

  table[0][0] = -binom(p, 1);
  // s_j^sigma = prod_{i=j}^{p+1} s_i^{(-1)^{j-1} C(p+1-j, i-j)} for j >= 2;
  // raising to -C(p,j) gives (-1)^j C(p+1-j, i-j) C(p,j).
  for (std::int64_t j = 2; j <= p - 1; ++j) {
    const BigInt column_power = binom(p, j);
    for (std::int64_t i = j; i <= p + 1; ++i) {
      BigInt entry = binom(p + 1 - j, i - j) * column_power;
      if (j % 2 == 1) entry = -entry;
      table[i - 1][j - 1] = entry;
    }
  }
  return table;
}

std::vector<BigInt> u_table_summation(std::int64_t p) {
  const auto table = u_contribution_table(p);
  std::vector<BigInt> u;
  u.reserve(table.size());
  for (const auto& row : table) {
    BigInt sum = 0;
    for (const auto& entry : row) sum += entry;
    u.push_back(sum);
  }
  return u;
}

std::vector<BigInt> u_closed_form(std::int64_t p) {
  require_odd_prime(p);
  std::vector<BigInt> u(static_cast<std::size_t>(p + 1));
  u[0] = -binom(p, 1);
  for (std::int64_t i = 2; i <= p - 1; ++i) {
    u[i - 1] = -binom(p, i) + (p - 1) * binom(p, i - 1);
  }
  u[p - 1] = (p - 1) * binom(p, p - 1);
  u[p] = p;
  return u;
}

UCoefficients u_coefficients(std::int64_t p) {
  auto summed = u_table_summation(p);
  const auto closed = u_closed_form(p);
  for (std::size_t i = 0; i < summed.size(); ++i) {
    if (summed[i] != closed[i]) {
      std::ostringstream msg;
      msg << "u_" << (i + 1) << " for p=" << p << ": table sum " << summed[i]
          << " != closed form " << closed[i];
      throw MismatchError(msg.str());
    }
  }
  return UCoefficients{p, std::move(summed)};
}

}  // namespace stringc::arith
