#include "stringc/report.hpp"

#include <iomanip>
#include <ostream>

namespace stringc {

Json bigint_json(const arith::BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json element_json(const GroupElement& x) {
  Json out;
  out["a"] = x.a;
  out["b"] = x.b;
  return out;
}

Json element_json(const ExtElement& x) {
  Json out = element_json(x.g);
  out["label"] = {x.label.sigma ? 1 : 0, x.label.tau ? 1 : 0};
  return out;
}

Json report_json(const VerificationReport& report) {
  Json out;
  out["params"] = {{"p", report.p}, {"e", report.e}, {"r", report.r}, {"m", report.m}};
  out["valid"] = report.valid;
  out["passed"] = report.passed();
  out["group_order"] = bigint_json(report.group_order);
  out["schlafli"] = {report.schlafli.first, report.schlafli.second};

  Json checks = Json::object();
  for (const auto& [name, status] : report.checks()) checks[name] = status_name(status);
  out["checks"] = checks;

  if (report.valid) {
    out["subgroups"] = {
        {"rho0_rho1", report.minimality.size01},
        {"rho1_rho2", report.minimality.size12},
        {"rho0_rho2", report.minimality.size02},
        {"intersection", report.intersection.intersection_size},
    };
    Json generation;
    generation["witnesses"] = report.generation.witnesses_ok;
    generation["g_closure"] = report.generation.g_closure_size
                                  ? Json(*report.generation.g_closure_size)
                                  : Json(nullptr);
    generation["r_closure"] = report.generation.r_closure_size
                                  ? Json(*report.generation.r_closure_size)
                                  : Json(nullptr);
    out["generation"] = generation;
  }
  out["failures"] = report.failures;
  out["notes"] = report.notes;
  return out;
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "instance     p=" << report.p << " e=" << report.e << " r=" << report.r
      << " m=" << report.m << "\n";
  if (!report.valid) {
    for (const auto& note : report.notes) out << "note         " << note << "\n";
    out << "result       INVALID\n";
    return;
  }
  out << "group order  " << report.group_order << "\n";
  out << "schlafli     {" << report.schlafli.first << ", " << report.schlafli.second << "}\n";
  for (const auto& [name, status] : report.checks()) {
    out << "  " << std::left << std::setw(24) << name << status_name(status) << "\n";
  }
  out << "subgroups    |<r0,r1>|=" << report.minimality.size01
      << " |<r1,r2>|=" << report.minimality.size12 << " |<r0,r2>|=" << report.minimality.size02
      << " |meet|=" << report.intersection.intersection_size << "\n";
  for (const auto& failure : report.failures) out << "failure      " << failure << "\n";
  for (const auto& note : report.notes) out << "note         " << note << "\n";
  out << "result       " << (report.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace stringc
