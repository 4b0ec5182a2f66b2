#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "stringc/pgroup.hpp"

namespace stringc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Every valid (p, e, r) with p an odd prime <= p_max and 4 p^m <= order_cap,
/// ordered by (p, e, r).
std::vector<GroupParams> enumerate_instances(std::int64_t p_max, std::uint64_t order_cap);

/// Entry point shared by the executable and the tests. argv[0] is the
/// program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stringc::cli
