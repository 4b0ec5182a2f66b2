#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "stringc/arith.hpp"
#include "stringc/cgroup.hpp"
#include "stringc/errors.hpp"
#include "stringc/kernels.hpp"
#include "stringc/polytope.hpp"
#include "stringc/report.hpp"

namespace stringc::cli {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw InvalidParam(std::string(name) + " must be a non-negative integer");
  }
}

// Writes to `path` through a sibling temporary so readers never see a
// partial file; an empty path means `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::string& payload) {
  if (path.empty()) {
    fallback << payload;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidParam("cannot open output file " + path);
    file << payload;
    if (!file) throw InvalidParam("cannot write output file " + path);
  }
  std::filesystem::rename(tmp, target);
}

struct Common {
  std::uint64_t cap = kDefaultExtensionCap;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
};

struct Instance {
  std::int64_t p = 0;
  std::int64_t e = 0;
  std::int64_t r = 0;
};

int do_verify(const Instance& in, const Common& common, std::uint64_t samples,
              std::ostream& out) {
  const GroupParams params = GroupParams::validate(in.p, in.e, in.r);
  VerifyOptions options;
  options.cap = common.cap;
  options.seed = common.seed;
  options.automorphism_samples = samples;
  const VerificationReport report = verify_instance(params, options);

  std::ostringstream payload;
  if (common.format == "json") {
    payload << report_json(report).dump(2) << "\n";
  } else {
    write_report_text(payload, report);
  }
  emit(common.output, out, payload.str());
  return report.passed() ? kExitPass : kExitFail;
}

int do_sweep(std::int64_t p_max, std::uint64_t order_cap, unsigned jobs, const Common& common,
             std::ostream& out) {
  if (p_max < 3) throw InvalidParam("--p-max must be at least 3");
  const std::vector<GroupParams> instances = enumerate_instances(p_max, order_cap);

  VerifyOptions options;
  options.cap = common.cap;
  options.seed = common.seed;
  std::vector<VerificationReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      reports[i] = verify_instance(instances[i], options);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, instances.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_passed = true;
  std::ostringstream payload;
  if (common.format == "json") {
    Json doc = Json::array();
    for (const auto& report : reports) doc.push_back(report_json(report));
    payload << doc.dump(2) << "\n";
  } else {
    payload << "p   e   r   m    order        schlafli   result\n";
    for (const auto& report : reports) {
      std::ostringstream type;
      type << "{" << report.schlafli.first << "," << report.schlafli.second << "}";
      payload << std::left << std::setw(4) << report.p << std::setw(4) << report.e
              << std::setw(4) << report.r << std::setw(5) << report.m << std::setw(13)
              << report.group_order.str() << std::setw(11) << type.str()
              << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
  }
  for (const auto& report : reports) all_passed = all_passed && report.passed();
  emit(common.output, out, payload.str());
  return all_passed ? kExitPass : kExitFail;
}

int do_identities(const std::vector<std::int64_t>& primes, std::int64_t n_max,
                  const Common& common, std::ostream& out) {
  const arith::IdentityReport identities = arith::check_binomial_identities(n_max);
  std::vector<arith::UCoefficients> coefficients;
  for (const auto p : primes) coefficients.push_back(arith::u_coefficients(p));

  std::ostringstream payload;
  if (common.format == "json") {
    Json doc;
    doc["n_max"] = n_max;
    doc["instances_checked"] = identities.instances_checked;
    Json violations = Json::array();
    for (const auto& v : identities.violations) {
      violations.push_back({{"identity", v.identity}, {"n", v.n}, {"m", v.m}, {"k", v.k}});
    }
    doc["violations"] = violations;
    Json u = Json::array();
    for (const auto& c : coefficients) {
      Json values = Json::array();
      for (const auto& x : c.u) values.push_back(bigint_json(x));
      u.push_back({{"p", c.p}, {"u", values}});
    }
    doc["u_coefficients"] = u;
    payload << doc.dump(2) << "\n";
  } else {
    payload << "binomial identities up to n=" << n_max << ": " << identities.instances_checked
            << " instances, " << identities.violations.size() << " violations\n";
    for (const auto& v : identities.violations) {
      payload << "  identity " << v.identity << " fails at n=" << v.n << " m=" << v.m
              << " k=" << v.k << "\n";
    }
    for (const auto& c : coefficients) {
      payload << "u (p=" << c.p << "):";
      for (const auto& x : c.u) payload << ' ' << x;
      payload << "  [table sum == closed form]\n";
    }
  }
  emit(common.output, out, payload.str());
  return identities.passed() ? kExitPass : kExitFail;
}

struct LatticeBundle {
  GroupParams params;
  std::pair<std::uint64_t, std::uint64_t> schlafli;
  std::optional<FaceLattice> lattice;
  bool preconditions_ok = false;
};

LatticeBundle prepare_lattice(const Instance& in, const Common& common) {
  const GroupParams params = GroupParams::validate(in.p, in.e, in.r);
  const Group group(params);
  const Automorphisms autos(group);
  const Extension ext(group, autos);
  const CGroupGenerators gens = build_generators(ext);

  LatticeBundle bundle{params, schlafli_type(ext, gens), std::nullopt, false};
  const auto p = static_cast<std::uint64_t>(params.p());
  bundle.preconditions_ok = check_sggi(ext, gens) &&
                            bundle.schlafli == std::pair<std::uint64_t, std::uint64_t>{p, 2 * p} &&
                            check_intersection_property(ext, gens, common.cap).status == Status::pass;
  if (bundle.preconditions_ok && ext.order() <= common.cap) {
    bundle.lattice = build_lattice(ext, gens, common.cap);
  }
  return bundle;
}

int do_lattice(const Instance& in, const Common& common, std::ostream& out) {
  const LatticeBundle bundle = prepare_lattice(in, common);
  if (!bundle.preconditions_ok) {
    emit(common.output, out, "string C-group checks failed; lattice not built\n");
    return kExitFail;
  }
  const FaceCounts expected = closed_form_counts(bundle.params);
  const arith::BigInt chi = euler_characteristic(bundle.params);
  std::optional<CheckOutcome> structure;
  if (bundle.lattice) structure = check_lattice(*bundle.lattice);
  const bool chi_ok = !bundle.lattice || euler_characteristic(*bundle.lattice) == chi;

  std::ostringstream payload;
  const FaceCounts counts = bundle.lattice ? bundle.lattice->counts() : expected;
  if (common.format == "json") {
    Json doc;
    doc["params"] = {{"p", bundle.params.p()}, {"e", bundle.params.e()},
                     {"r", bundle.params.r()}, {"m", bundle.params.m()}};
    doc["schlafli"] = {bundle.schlafli.first, bundle.schlafli.second};
    doc["enumerated"] = bundle.lattice.has_value();
    doc["counts"] = {{"vertices", bigint_json(counts.vertices)},
                     {"edges", bigint_json(counts.edges)},
                     {"faces", bigint_json(counts.faces)},
                     {"flags", bigint_json(counts.flags)}};
    doc["euler"] = bigint_json(chi);
    doc["toroidal"] = chi == 0;
    doc["structure"] = structure ? Json(structure->passed() ? "pass" : "fail") : Json("skipped");
    doc["failures"] = structure ? structure->failures : std::vector<std::string>{};
    payload << doc.dump(2) << "\n";
  } else {
    payload << "instance     p=" << bundle.params.p() << " e=" << bundle.params.e()
            << " r=" << bundle.params.r() << " m=" << bundle.params.m() << "\n";
    payload << "source       " << (bundle.lattice ? "coset enumeration" : "closed form (over cap)")
            << "\n";
    payload << "vertices     " << counts.vertices << "\nedges        " << counts.edges
            << "\nfaces        " << counts.faces << "\nflags        " << counts.flags << "\n";
    payload << "euler        " << chi << (chi == 0 ? "  (toroidal)" : "") << "\n";
    payload << "structure    "
            << (structure ? (structure->passed() ? "pass" : "fail") : "skipped") << "\n";
    if (structure) {
      for (const auto& f : structure->failures) payload << "failure      " << f << "\n";
    }
  }
  emit(common.output, out, payload.str());
  const bool ok = chi_ok && (!structure || structure->passed());
  return ok ? kExitPass : kExitFail;
}

int do_export(const Instance& in, const Common& common, std::ostream& out) {
  const ExportFormat format = parse_export_format(common.format);
  const LatticeBundle bundle = prepare_lattice(in, common);
  if (!bundle.preconditions_ok) {
    throw InvalidParam("string C-group checks failed; nothing to export");
  }
  std::ostringstream payload;
  export_lattice(payload, bundle.params, bundle.schlafli, bundle.lattice, format);
  emit(common.output, out, payload.str());
  return kExitPass;
}

void add_instance(CLI::App* cmd, Instance& in) {
  cmd->add_option("--p", in.p, "odd prime p")->required();
  cmd->add_option("--e", in.e, "exponent parameter e >= 1")->required();
  cmd->add_option("--r", in.r, "number of generators of order p^e, 1 <= r <= p-1")->required();
}

void add_common(CLI::App* cmd, Common& common, std::vector<std::string> formats) {
  cmd->add_option("--cap", common.cap, "element cap for enumerations in R (env STRINGC_CAP)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", common.seed, "seed for sampled checks (env STRINGC_SEED)");
  cmd->add_option("--format", common.format)->check(CLI::IsMember(formats));
  cmd->add_option("--output,-o", common.output, "write to this file instead of stdout");
}

}  // namespace

std::vector<GroupParams> enumerate_instances(std::int64_t p_max, std::uint64_t order_cap) {
  std::vector<GroupParams> instances;
  for (std::int64_t p = 3; p <= std::min(p_max, kMaxPrime); p += 2) {
    if (!arith::is_odd_prime(p)) continue;
    for (std::int64_t e = 1;; ++e) {
      bool any = false;
      for (std::int64_t r = 1; r <= p - 1; ++r) {
        const std::int64_t m = e * r + (e - 1) * (p - r - 1) + 1;
        if (4 * arith::ipow(p, m) > order_cap) continue;
        any = true;
        if (m >= 3) instances.push_back(GroupParams::validate(p, e, r));
      }
      if (!any) break;
    }
  }
  return instances;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds and verifies the regular polytopes of order 4p^m and type {p, 2p}"};
  app.require_subcommand(1);

  Common common;
  Instance instance;
  std::uint64_t samples = 500;
  std::int64_t p_max = 7;
  std::uint64_t order_cap = kDefaultExtensionCap;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::int64_t> primes;
  std::int64_t n_max = 30;

  try {
    common.cap = env_or("STRINGC_CAP", common.cap);
    common.seed = env_or("STRINGC_SEED", common.seed);
  } catch (const InvalidParam& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  }

  auto* verify = app.add_subcommand("verify", "verify one instance");
  add_instance(verify, instance);
  add_common(verify, common, {"text", "json"});
  verify->add_option("--samples", samples, "random pairs per automorphism check");

  auto* sweep = app.add_subcommand("sweep", "verify every instance with 4p^m <= order cap");
  sweep->add_option("--p-max", p_max, "largest prime to include");
  sweep->add_option("--order-cap", order_cap, "largest group order 4p^m to include");
  sweep->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(sweep, common, {"text", "json"});

  auto* identities = app.add_subcommand("identities", "binomial identities and u-coefficients");
  identities->add_option("--p", primes, "odd primes for the u-coefficient table (repeatable)");
  identities->add_option("--n-max", n_max, "largest upper index for the binomial identities")
      ->check(CLI::PositiveNumber);
  add_common(identities, common, {"text", "json"});

  auto* lattice = app.add_subcommand("lattice", "face counts, Euler characteristic, structure");
  add_instance(lattice, instance);
  add_common(lattice, common, {"text", "json"});

  auto* exporter = app.add_subcommand("export", "write the face lattice as JSON or DOT");
  add_instance(exporter, instance);
  add_common(exporter, common, {"json", "dot"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (verify->parsed()) return do_verify(instance, common, samples, out);
    if (sweep->parsed()) return do_sweep(p_max, order_cap, jobs, common, out);
    if (identities->parsed()) {
      if (primes.empty()) primes = {3, 5, 7, 11, 13};
      return do_identities(primes, n_max, common, out);
    }
    if (lattice->parsed()) return do_lattice(instance, common, out);
    if (exporter->parsed()) {
      if (common.format == "text") common.format = "json";
      return do_export(instance, common, out);
    }
  } catch (const InvalidParam& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const UnsupportedFormat& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace stringc::cli
