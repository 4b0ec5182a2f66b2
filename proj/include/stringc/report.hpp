#pragma once

#include <iosfwd>

#include "json.hpp"
#include "stringc/arith.hpp"
#include "stringc/cgroup.hpp"
#include "stringc/extension.hpp"
#include "stringc/pgroup.hpp"

namespace stringc {

using Json = nlohmann::ordered_json;

/// Number when it fits in 64 bits, decimal string otherwise.
Json bigint_json(const arith::BigInt& value);

/// {"a": [...], "b": n}
Json element_json(const GroupElement& x);
/// {"a": [...], "b": n, "label": [sigma, tau]}
Json element_json(const ExtElement& x);

Json report_json(const VerificationReport& report);
void write_report_text(std::ostream& out, const VerificationReport& report);

}  // namespace stringc
