#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stringc {

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

/// Result of a batch of exact checks. Failures are data: each entry names the
/// failed instance.
struct CheckOutcome {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }

  void merge(const CheckOutcome& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace stringc
