#pragma once

// sigma: s_1 -> s_1, beta -> beta^{-1};  tau: s_1 -> s_1^{-1}, beta -> beta.
//
// On the exponent vector of A, tau is negation and sigma is the linear map
// whose rows are the images of s_1..s_{p-1}:
//
//   s_k^sigma = s_k^{beta^{1-k}}          k odd
//             = (s_k^{beta^{1-k}})^{-1}   k even

#include <cstdint>
#include <vector>

#include "stringc/arith.hpp"
#include "stringc/check.hpp"
#include "stringc/kernels.hpp"
#include "stringc/pgroup.hpp"

namespace stringc {

/// sigma^u tau^v. Labels compose by XOR.
struct AutoLabel {
  bool sigma = false;
  bool tau = false;

  static constexpr AutoLabel none() { return {false, false}; }
  static constexpr AutoLabel sigma_only() { return {true, false}; }
  static constexpr AutoLabel tau_only() { return {false, true}; }
  static constexpr AutoLabel sigma_tau() { return {true, true}; }

  constexpr AutoLabel compose(AutoLabel other) const {
    return {sigma != other.sigma, tau != other.tau};
  }
  constexpr bool is_identity() const { return !sigma && !tau; }

  friend constexpr bool operator==(AutoLabel, AutoLabel) = default;
  friend constexpr auto operator<=>(AutoLabel, AutoLabel) = default;
};

const char* label_name(AutoLabel label);

struct GeneratorImageTable {
  std::vector<GroupElement> sigma_images;  // images of s_1..s_{p-1}
  std::vector<GroupElement> tau_images;
  GroupElement beta_sigma_image;
  GroupElement beta_tau_image;
};

struct AutomorphismOutcome {
  AutoLabel label;
  CheckOutcome homomorphism;   // generator pairs and random pairs
  CheckOutcome involution;     // apply(apply(x)) == x
  CheckOutcome relations;      // defining relations map to relations

  bool passed() const {
    return homomorphism.passed() && involution.passed() && relations.passed();
  }
};

/// Non-owning: `group` must outlive this object.
class Automorphisms {
 public:
  explicit Automorphisms(const Group& group);

  const Group& group() const { return *group_; }
  const GeneratorImageTable& table() const { return table_; }
  /// Rows are the exponent vectors of sigma(s_i).
  const kernels::ModMatrix& sigma_matrix() const { return sigma_matrix_; }

  GroupElement apply(AutoLabel label, const GroupElement& x) const;

  /// prod_{i=k}^{p+1} s_i^{C(p+1-k, i-k)} for 1 <= k <= p.
  GroupElement conjugation_closed_form(std::int64_t k) const;
  /// s_k conjugated by beta^{-1} (k-1) times, one multiply at a time.
  GroupElement iterated_conjugation(std::int64_t k) const;

  /// sigma(s_k) from the recursion sigma(s_k) = [sigma(s_{k-1}), beta^{-1}],
  /// for 1 <= k <= p; independent of the parity table.
  GroupElement sigma_image_by_recursion(std::int64_t k) const;
  /// sigma(s_k) from the parity rule, 1 <= k <= p.
  GroupElement sigma_image_by_parity(std::int64_t k) const;

  /// For every k in [1, p]: closed form == iterated conjugation, and the
  /// parity rule == the recursion (and the table for k <= p-1).
  CheckOutcome check_conjugation_lemma() const;

  /// prod_{i=1}^{p-1} (s_i^sigma)^{-C(p,i)} == prod_{i=1}^{p+1} s_i^{u_i} ==
  /// s_p^sigma == s_p s_{p+1}, for the supplied coefficients u_1..u_{p+1}.
  CheckOutcome check_u_identity(const std::vector<arith::BigInt>& u) const;

  AutomorphismOutcome verify(AutoLabel label, std::uint64_t samples, std::uint64_t seed) const;

  /// sigma^2, tau^2, (sigma tau)^2 act trivially on the generators and
  /// sigma tau == tau sigma there.
  bool verify_klein_four() const;

 private:
  const Group* group_;
  GeneratorImageTable table_;
  kernels::ModMatrix sigma_matrix_;
};

}  // namespace stringc
