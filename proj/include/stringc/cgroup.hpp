#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringc/arith.hpp"
#include "stringc/check.hpp"
#include "stringc/extension.hpp"

namespace stringc {

/// rho0 = s_1 tau sigma, rho1 = beta tau sigma, rho2 = sigma.
struct CGroupGenerators {
  ExtElement rho0;
  ExtElement rho1;
  ExtElement rho2;
};

CGroupGenerators build_generators(const Extension& ext);

/// rho_i^2 = 1 for each i and (rho0 rho2)^2 = 1.
bool check_sggi(const Extension& ext, const CGroupGenerators& gens);

/// (order(rho0 rho1), order(rho1 rho2)).
std::pair<std::uint64_t, std::uint64_t> schlafli_type(const Extension& ext,
                                                      const CGroupGenerators& gens);

struct IntersectionResult {
  Status status = Status::skipped;
  std::uint64_t size01 = 0;
  std::uint64_t size12 = 0;
  std::uint64_t intersection_size = 0;
};

/// <rho0, rho1> and <rho1, rho2> enumerated explicitly; passes iff their
/// intersection is exactly {1, rho1}.
IntersectionResult check_intersection_property(const Extension& ext, const CGroupGenerators& gens,
                                               std::uint64_t cap = kDefaultExtensionCap);

struct MinimalityResult {
  Status status = Status::skipped;
  std::uint64_t size01 = 0;
  std::uint64_t size12 = 0;
  std::uint64_t size02 = 0;
};

/// Every pair of the three involutions generates a proper subgroup of R.
MinimalityResult check_minimality(const Extension& ext, const CGroupGenerators& gens,
                                  std::uint64_t cap = kDefaultExtensionCap);

struct GenerationResult {
  Status status = Status::skipped;
  bool witnesses_ok = false;
  std::optional<std::uint64_t> g_closure_size;  // |<s_1, beta>| when p^m <= cap
  std::optional<std::uint64_t> r_closure_size;  // |<rho0, rho1, rho2>| when 4 p^m <= cap
  std::vector<std::string> failures;
};

/// Witnesses tau = (rho1 rho2)^p, beta = (rho1 rho2)^{p+1}, sigma = rho2 and
/// s_1 = (rho0 rho2) tau, then |<s_1, beta>| = p^m and, as an oracle,
/// |<rho0, rho1, rho2>| = 4 p^m when under the cap.
GenerationResult check_generation(const Extension& ext, const CGroupGenerators& gens,
                                  std::uint64_t cap = kDefaultExtensionCap);

struct VerifyOptions {
  /// Element cap for enumerations in R. Enumerations inside G (the Hughes
  /// check) use cap / 4.
  std::uint64_t cap = kDefaultExtensionCap;
  std::uint64_t seed = 0;
  /// Random pairs per automorphism check.
  std::uint64_t automorphism_samples = 500;
  /// Random triples for the commutator identities.
  std::uint64_t commutator_samples = 1000;
};

struct VerificationReport {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  bool valid = false;
  arith::BigInt group_order = 0;
  std::pair<std::uint64_t, std::uint64_t> schlafli{0, 0};

  Status presentation_ok = Status::skipped;
  Status commutator_identities_ok = Status::skipped;
  Status hughes_ok = Status::skipped;
  Status conjugation_lemma_ok = Status::skipped;
  Status automorphisms_ok = Status::skipped;
  Status klein_four_ok = Status::skipped;
  Status u_identity_ok = Status::skipped;
  Status sggi_ok = Status::skipped;
  Status type_ok = Status::skipped;
  Status generation_ok = Status::skipped;
  Status minimality_ok = Status::skipped;
  Status intersection_ok = Status::skipped;

  IntersectionResult intersection;
  MinimalityResult minimality;
  GenerationResult generation;

  std::vector<std::string> notes;
  std::vector<std::string> failures;

  /// Every check that ran passed (and the parameters were valid).
  bool passed() const;
  /// (name, status) for every check, in report order.
  std::vector<std::pair<std::string, Status>> checks() const;
};

/// Full pipeline. Invalid parameters produce a report with valid == false and
/// the reason in `notes`.
VerificationReport verify_instance(std::int64_t p, std::int64_t e, std::int64_t r,
                                   const VerifyOptions& options = {});
VerificationReport verify_instance(const GroupParams& params, const VerifyOptions& options = {});

/// Runs the pipeline on an already constructed (possibly deliberately broken)
/// group, optionally with replacement generators.
VerificationReport verify_group(const Group& group, const VerifyOptions& options = {},
                                const std::optional<CGroupGenerators>& generators = std::nullopt);

}  // namespace stringc
