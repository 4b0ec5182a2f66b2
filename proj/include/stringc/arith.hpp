#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stringc::arith {

using BigInt = boost::multiprecision::cpp_int;

bool is_odd_prime(std::int64_t n);

/// base^exp for exp >= 0.
BigInt ipow(std::int64_t base, std::int64_t exp);

/// Representative of `x` in [0, modulus). `modulus` must be positive.
std::int64_t reduce(const BigInt& x, std::int64_t modulus);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Throws
/// InvalidParam for n < 0 (the generalised binomial is not supported).
BigInt binom(std::int64_t n, std::int64_t k);

/// One failed instance of a binomial identity. `identity` is 1..4:
///   1  C(n,m) = C(n,n-m)
///   2  C(n+2,m+1) = C(n+1,m+1) + C(n+1,m)
///   3  C(n,m) C(m,k) = C(n,k) C(n-k,m-k)
///   4  sum_{j=0}^{m} (-1)^j C(n,j) = (-1)^m C(n-1,m)
struct IdentityViolation {
  int identity = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
};

struct IdentityReport {
  std::int64_t n_max = 0;
  std::uint64_t instances_checked = 0;
  std::vector<IdentityViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Exhaustively checks identities 1-4 for 0 <= k <= m <= n <= n_max.
/// Identity 4 needs n >= 1 so that C(n-1, m) is defined.
IdentityReport check_binomial_identities(std::int64_t n_max);

/// The coefficients u_1..u_{p+1} of s_1^{u_1} ... s_{p+1}^{u_{p+1}} obtained
/// by expanding prod_{i=1}^{p-1} (s_i^sigma)^{-C(p,i)}.
struct UCoefficients {
  std::int64_t p = 0;
  std::vector<BigInt> u;  // u[0] holds u_1

  /// 1-based access, i in [1, p+1].
  const BigInt& operator[](std::int64_t i) const { return u.at(static_cast<std::size_t>(i - 1)); }
};

/// Contribution table: entry (i, j) is the exponent of s_i coming from the
/// column (s_j^sigma)^{-C(p,j)}; rows i = 1..p+1, columns j = 1..p-1.
/// Column 1 only has its diagonal entry because s_1^sigma = s_1.
std::vector<std::vector<BigInt>> u_contribution_table(std::int64_t p);

/// Row sums of the contribution table.
std::vector<BigInt> u_table_summation(std::int64_t p);

/// u_1 = -p, u_i = -C(p,i) + (p-1) C(p,i-1) for 2 <= i <= p-1,
/// u_p = (p-1) C(p,p-1), u_{p+1} = p.
std::vector<BigInt> u_closed_form(std::int64_t p);

/// Both routes; throws MismatchError if they disagree and InvalidParam if p
/// is not an odd prime.
UCoefficients u_coefficients(std::int64_t p);

}  // namespace stringc::arith
