#pragma once

// The group G of order p^m generated by s_1, ..., s_{p-1}, beta with
//
//   s_i^{p^e} (i <= r),  s_i^{p^{e-1}} (i > r),  beta^p,
//   [s_i, s_j] = 1,  s_{k+1} = [s_k, beta] (1 <= k <= p-2),
//   [s_{p-1}, beta] = prod_{i=1}^{p-1} s_i^{-C(p,i)}.
//
// A = <s_1, ..., s_{p-1}> is abelian of index p, so every element has the
// normal form s_1^{a_1} ... s_{p-1}^{a_{p-1}} beta^b. Conjugation by beta is
// linear on the exponent vector of A: x^y = y^{-1} x y and, as row vectors,
// vec(a^beta) = vec(a) * M with
//
//   row i < p-1:  e_i + e_{i+1}
//   row p-1:      e_{p-1} - sum_j C(p,j) e_j
//
// so a^{beta^k} = a * M^k and (a beta^x)(c beta^y) = (a + c * M^{-x}) beta^{x+y}.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "stringc/arith.hpp"
#include "stringc/check.hpp"
#include "stringc/detail/closure.hpp"
#include "stringc/kernels.hpp"

namespace stringc {

inline constexpr std::int64_t kMaxPrime = 251;
inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

class GroupParams {
 public:
  /// Throws InvalidParam unless p is an odd prime <= kMaxPrime, e >= 1,
  /// 1 <= r <= p-1, m = e r + (e-1)(p-r-1) + 1 >= 3 and p^{e+1} <= 2^62.
  static GroupParams validate(std::int64_t p, std::int64_t e, std::int64_t r);

  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }
  std::int64_t r() const { return r_; }
  std::int64_t m() const { return m_; }
  /// Number of s-generators, p - 1.
  std::size_t rank() const { return moduli_.size(); }
  /// Orders of s_1..s_{p-1} (0-based).
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t modulus(std::int64_t i) const { return moduli_.at(static_cast<std::size_t>(i - 1)); }

  /// |G| = p^m.
  arith::BigInt order() const { return arith::ipow(p_, m_); }
  /// |G| <= cap.
  bool order_within(std::uint64_t cap) const { return order() <= cap; }

  /// e = 1 with r < p-1: s_{r+1}, ..., s_{p-1} are trivial.
  bool degenerate_tail() const { return e_ == 1 && r_ < p_ - 1; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  GroupParams() = default;

  std::int64_t p_ = 0;
  std::int64_t e_ = 0;
  std::int64_t r_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> moduli_;
};

/// s_1^{a_1} ... s_{p-1}^{a_{p-1}} beta^b with every a_i in [0, modulus(i))
/// and b in [0, p).
struct GroupElement {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  bool in_abelian_part() const { return b == 0; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

/// Conjugation by beta on A, with M^0 ... M^{p-1} cached.
class BetaAction {
 public:
  static BetaAction standard(const GroupParams& params);

  /// Arbitrary row-major matrix. Used to build deliberately broken groups.
  static BetaAction from_matrix(const GroupParams& params, std::vector<std::int64_t> entries);

  const kernels::ModMatrix& matrix() const { return powers_[1 % powers_.size()]; }
  /// M^k for any integer k, read from the cache through k mod p.
  const kernels::ModMatrix& power(std::int64_t k) const;
  std::int64_t period() const { return static_cast<std::int64_t>(powers_.size()); }

  /// M^p == I modulo the column moduli.
  bool has_period_p() const;
  /// modulus(i) * M[i][j] == 0 mod modulus(j) for all i, j.
  bool well_defined() const;

 private:
  explicit BetaAction(kernels::ModMatrix m, std::int64_t p);

  std::vector<kernels::ModMatrix> powers_;
  kernels::ModMatrix full_period_;  // M^p
};

class Group {
 public:
  explicit Group(GroupParams params);
  Group(GroupParams params, BetaAction action);

  const GroupParams& params() const { return params_; }
  const BetaAction& action() const { return action_; }
  std::int64_t p() const { return params_.p(); }
  std::size_t rank() const { return params_.rank(); }

  GroupElement identity() const;
  /// s_i for 1 <= i <= p-1.
  GroupElement s(std::int64_t i) const;
  GroupElement beta() const;

  /// Canonical element from arbitrary integer exponents.
  GroupElement make(std::span<const std::int64_t> a, std::int64_t b) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  /// x^k for any integer k by repeated squaring.
  GroupElement power(const GroupElement& x, std::int64_t k) const;
  /// y^{-1} x y.
  GroupElement conjugate(const GroupElement& x, const GroupElement& y) const;
  /// x^{-1} y^{-1} x y.
  GroupElement commutator(const GroupElement& x, const GroupElement& y) const;

  /// Exponent-vector scaling on A: x^c for x in A, c an arbitrary integer.
  GroupElement scale(const GroupElement& x, const arith::BigInt& c) const;
  /// Product of A-elements, as exponent vectors.
  GroupElement add(const GroupElement& x, const GroupElement& y) const;

  std::uint64_t element_order(const GroupElement& x) const;

  /// s_p = [s_{p-1}, beta] from its closed form prod_{i=1}^{p-1} s_i^{-C(p,i)}.
  GroupElement derived_sp() const;
  /// s_{p+1} = [s_p, beta] from prod_{i=1}^{p-1} s_{i+1}^{-C(p,i)}.
  GroupElement derived_sp1() const;
  /// s_k for 1 <= k <= p+1, using the derived forms for k = p, p+1.
  GroupElement s_extended(std::int64_t k) const;

  GroupElement random_element(std::mt19937_64& rng) const;

  using Subgroup = detail::ClosureSet<GroupElement, GroupElementHash>;
  Subgroup closure(std::span<const GroupElement> generators, std::uint64_t cap) const;

 private:
  GroupParams params_;
  BetaAction action_;
};

/// Every element outside A has order exactly p, checked exhaustively.
/// Throws CapExceeded when p^m > cap.
bool hughes_check(const Group& g, std::uint64_t cap = kDefaultEnumerationCap);

/// The defining relations as computed by `multiply`, plus the action's
/// period and well-definedness: orders of the s_i and beta, A abelian on
/// generators, s_{k+1} = [s_k, beta], [s_{p-1}, beta] = s_p, [s_p, beta] = s_{p+1}.
CheckOutcome check_presentation(const Group& g);

/// The five commutator identities on `samples` seeded random triples:
///   [xy,z] = [x,z]^y [y,z]      [x,yz] = [x,z] [x,y]^z
///   [x,y^-1]^y = [x,y]^-1       [x^-1,y]^x = [x,y]^-1
///   [x^-1,y^-1]^{xy} = [x,y]
CheckOutcome check_commutator_identities(const Group& g, std::uint64_t samples,
                                         std::uint64_t seed);

/// Visits every element of G in mixed-radix order (b slowest).
template <class Fn>
void for_each_element(const Group& g, Fn&& fn) {
  const auto& moduli = g.params().moduli();
  GroupElement x = g.identity();
  for (std::int64_t b = 0; b < g.p(); ++b) {
    x.b = b;
    std::fill(x.a.begin(), x.a.end(), 0);
    while (true) {
      fn(x);
      std::size_t i = 0;
      for (; i < x.a.size(); ++i) {
        if (++x.a[i] < moduli[i]) break;
        x.a[i] = 0;
      }
      if (i == x.a.size()) break;
    }
  }
}

}  // namespace stringc
