#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stringc {

/// Rejected parameter triple or argument outside an operation's domain.
class InvalidParam : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its element cap. `partial_count` is the number
/// of elements reached before giving up.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}

  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class MismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedFormat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stringc
