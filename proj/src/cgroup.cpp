#include "stringc/cgroup.hpp"

#include <array>

#include "stringc/errors.hpp"

namespace stringc {

CGroupGenerators build_generators(const Extension& ext) {
  const Group& g = ext.group();
  const AutoLabel sigma_tau = AutoLabel::sigma_tau();
  return CGroupGenerators{
      ExtElement{g.s(1), sigma_tau},
      ExtElement{g.beta(), sigma_tau},
      ExtElement{g.identity(), AutoLabel::sigma_only()},
  };
}

bool check_sggi(const Extension& ext, const CGroupGenerators& gens) {
  const ExtElement one = ext.identity();
  auto square = [&](const ExtElement& x) { return ext.multiply(x, x); };
  return square(gens.rho0) == one && square(gens.rho1) == one && square(gens.rho2) == one &&
         square(ext.multiply(gens.rho0, gens.rho2)) == one;
}

std::pair<std::uint64_t, std::uint64_t> schlafli_type(const Extension& ext,
                                                      const CGroupGenerators& gens) {
  return {ext.order_of(ext.multiply(gens.rho0, gens.rho1)),
          ext.order_of(ext.multiply(gens.rho1, gens.rho2))};
}

IntersectionResult check_intersection_property(const Extension& ext, const CGroupGenerators& gens,
                                               std::uint64_t cap) {
  IntersectionResult result;
  try {
    const std::array<ExtElement, 2> left{gens.rho0, gens.rho1};
    const std::array<ExtElement, 2> right{gens.rho1, gens.rho2};
    const ExtSubgroup h01 = ext.closure(left, cap);
    const ExtSubgroup h12 = ext.closure(right, cap);
    result.size01 = h01.size();
    result.size12 = h12.size();

    bool exact = true;
    for (const ExtElement& x : h01.elements) {
      if (!h12.contains(x)) continue;
      ++result.intersection_size;
      if (x != ext.identity() && x != gens.rho1) exact = false;
    }
    const bool rho1_shared = h01.contains(gens.rho1) && h12.contains(gens.rho1);
    const bool rho1_nontrivial = gens.rho1 != ext.identity();
    result.status = status_of(exact && rho1_shared && rho1_nontrivial &&
                              result.intersection_size == 2);
  } catch (const CapExceeded&) {
    result.status = Status::skipped;
  }
  return result;
}

MinimalityResult check_minimality(const Extension& ext, const CGroupGenerators& gens,
                                  std::uint64_t cap) {
  MinimalityResult result;
  try {
    const std::array<ExtElement, 2> g01{gens.rho0, gens.rho1};
    const std::array<ExtElement, 2> g12{gens.rho1, gens.rho2};
    const std::array<ExtElement, 2> g02{gens.rho0, gens.rho2};
    result.size01 = ext.closure(g01, cap).size();
    result.size12 = ext.closure(g12, cap).size();
    result.size02 = ext.closure(g02, cap).size();
  } catch (const CapExceeded&) {
    result.status = Status::skipped;
    return result;
  }
  const arith::BigInt order = ext.order();
  result.status = status_of(result.size01 < order && result.size12 < order && result.size02 < order);
  return result;
}

GenerationResult check_generation(const Extension& ext, const CGroupGenerators& gens,
                                  std::uint64_t cap) {
  GenerationResult result;
  const Group& g = ext.group();
  const std::int64_t p = g.p();

  const ExtElement r12 = ext.multiply(gens.rho1, gens.rho2);
  const ExtElement tau_witness = ext.power(r12, p);
  const ExtElement beta_witness = ext.power(r12, p + 1);
  const ExtElement s1_witness = ext.multiply(ext.multiply(gens.rho0, gens.rho2), tau_witness);

  auto expect = [&](bool ok, const char* what) {
    if (!ok) result.failures.emplace_back(what);
  };
  expect(tau_witness == ext.label_element(AutoLabel::tau_only()), "(rho1 rho2)^p != tau");
  expect(beta_witness == ext.embed(g.beta()), "(rho1 rho2)^{p+1} != beta");
  expect(gens.rho2 == ext.label_element(AutoLabel::sigma_only()), "rho2 != sigma");
  expect(s1_witness == ext.embed(g.s(1)), "(rho0 rho2) tau != s_1");
  result.witnesses_ok = result.failures.empty();

  bool complete = true;
  if (g.params().order_within(cap)) {
    const std::array<GroupElement, 2> base{s1_witness.g, beta_witness.g};
    try {
      result.g_closure_size = g.closure(base, cap).size();
      expect(g.params().order() == *result.g_closure_size, "|<s_1, beta>| != p^m");
    } catch (const CapExceeded&) {
      complete = false;
    }
  } else {
    complete = false;
  }

  if (ext.order() <= cap) {
    const std::array<ExtElement, 3> all{gens.rho0, gens.rho1, gens.rho2};
    result.r_closure_size = ext.closure(all, cap).size();
    expect(ext.order() == *result.r_closure_size, "|<rho0, rho1, rho2>| != 4 p^m");
  }

  if (!result.failures.empty()) {
    result.status = Status::fail;
  } else {
    result.status = complete ? Status::pass : Status::skipped;
  }
  return result;
}

// ---------------------------------------------------------------------------

bool VerificationReport::passed() const {
  if (!valid) return false;
  for (const auto& [name, status] : checks()) {
    if (status == Status::fail) return false;
  }
  return true;
}

std::vector<std::pair<std::string, Status>> VerificationReport::checks() const {
  return {
      {"presentation", presentation_ok},
      {"commutator_identities", commutator_identities_ok},
      {"hughes", hughes_ok},
      {"conjugation_lemma", conjugation_lemma_ok},
      {"automorphisms", automorphisms_ok},
      {"klein_four", klein_four_ok},
      {"u_identity", u_identity_ok},
      {"sggi", sggi_ok},
      {"type", type_ok},
      {"generation", generation_ok},
      {"minimality", minimality_ok},
      {"intersection", intersection_ok},
  };
}

VerificationReport verify_instance(std::int64_t p, std::int64_t e, std::int64_t r,
                                   const VerifyOptions& options) {
  try {
    return verify_instance(GroupParams::validate(p, e, r), options);
  } catch (const InvalidParam& err) {
    VerificationReport report;
    report.p = p;
    report.e = e;
    report.r = r;
    report.m = e * r + (e - 1) * (p - r - 1) + 1;
    report.valid = false;
    report.notes.emplace_back(std::string("invalid parameters: ") + err.what());
    return report;
  }
}

VerificationReport verify_instance(const GroupParams& params, const VerifyOptions& options) {
  const Group group(params);
  return verify_group(group, options);
}

namespace {

void record(VerificationReport& report, const std::string& check, const CheckOutcome& outcome) {
  for (const auto& failure : outcome.failures) report.failures.push_back(check + ": " + failure);
}

}  // namespace

VerificationReport verify_group(const Group& group, const VerifyOptions& options,
                                const std::optional<CGroupGenerators>& generators) {
  const GroupParams& params = group.params();
  VerificationReport report;
  report.p = params.p();
  report.e = params.e();
  report.r = params.r();
  report.m = params.m();
  report.valid = true;
  report.group_order = 4 * params.order();

  if (params.degenerate_tail()) {
    report.notes.emplace_back("degenerate tail generators: s_" + std::to_string(params.r() + 1) +
                              "..s_" + std::to_string(params.p() - 1) + " are trivial (e = 1)");
  }

  const CheckOutcome presentation = check_presentation(group);
  report.presentation_ok = status_of(presentation.passed());
  record(report, "presentation", presentation);

  const CheckOutcome commutators =
      check_commutator_identities(group, options.commutator_samples, options.seed);
  report.commutator_identities_ok = status_of(commutators.passed());
  record(report, "commutator_identities", commutators);

  const std::uint64_t group_cap = options.cap / 4;
  if (params.order_within(group_cap)) {
    report.hughes_ok = status_of(hughes_check(group, group_cap));
    if (report.hughes_ok == Status::fail) {
      report.failures.emplace_back("hughes: an element outside A has order != p");
    }
  } else {
    report.notes.emplace_back("hughes check skipped: p^m exceeds " + std::to_string(group_cap));
  }

  const Automorphisms autos(group);
  const CheckOutcome lemma = autos.check_conjugation_lemma();
  report.conjugation_lemma_ok = status_of(lemma.passed());
  record(report, "conjugation_lemma", lemma);

  bool autos_ok = true;
  for (const AutoLabel label : {AutoLabel::sigma_only(), AutoLabel::tau_only()}) {
    const AutomorphismOutcome outcome =
        autos.verify(label, options.automorphism_samples, options.seed);
    autos_ok = autos_ok && outcome.passed();
    const std::string tag = std::string("automorphisms[") + label_name(label) + "]";
    record(report, tag, outcome.homomorphism);
    record(report, tag, outcome.involution);
    record(report, tag, outcome.relations);
  }
  report.automorphisms_ok = status_of(autos_ok);
  report.klein_four_ok = status_of(autos.verify_klein_four());
  if (report.klein_four_ok == Status::fail) report.failures.emplace_back("klein_four");

  const CheckOutcome u_identity = autos.check_u_identity(arith::u_coefficients(params.p()).u);
  report.u_identity_ok = status_of(u_identity.passed());
  record(report, "u_identity", u_identity);

  const Extension ext(group, autos);
  const CGroupGenerators gens = generators ? *generators : build_generators(ext);

  report.sggi_ok = status_of(check_sggi(ext, gens));
  if (report.sggi_ok == Status::fail) report.failures.emplace_back("sggi: a relation fails");

  try {
    report.schlafli = schlafli_type(ext, gens);
    const auto p = static_cast<std::uint64_t>(params.p());
    report.type_ok = status_of(report.schlafli == std::pair<std::uint64_t, std::uint64_t>{p, 2 * p});
  } catch (const CapExceeded&) {
    report.type_ok = Status::fail;
    report.notes.emplace_back("schlafli type: an element order exceeded the cap");
  }
  if (report.type_ok == Status::fail) report.failures.emplace_back("type: not {p, 2p}");

  report.generation = check_generation(ext, gens, options.cap);
  report.generation_ok = report.generation.status;
  for (const auto& failure : report.generation.failures) {
    report.failures.push_back("generation: " + failure);
  }

  report.minimality = check_minimality(ext, gens, options.cap);
  report.minimality_ok = report.minimality.status;
  if (report.minimality_ok == Status::fail) {
    report.failures.emplace_back("minimality: a pair generates R");
  }

  report.intersection = check_intersection_property(ext, gens, options.cap);
  report.intersection_ok = report.intersection.status;
  if (report.intersection_ok == Status::fail) {
    report.failures.emplace_back("intersection: <rho0,rho1> meet <rho1,rho2> != <rho1>");
  }

  report.notes.emplace_back("other polytopes with automorphism group R are not examined");
  return report;
}

}  // namespace stringc
