#pragma once

// R = G x| <sigma, tau>, |R| = 4 p^m. An element (g, alpha) stands for the
// product g * alpha, and alpha * h = alpha(h) * alpha, so
//
//   (g1, a1) (g2, a2) = (g1 * a1(g2), a1 xor a2).
//
// All four labels are commuting involutions; no inverse of a1 appears.

#include <compare>
#include <cstdint>
#include <span>

#include "stringc/autos.hpp"
#include "stringc/detail/closure.hpp"
#include "stringc/pgroup.hpp"

namespace stringc {

struct ExtElement {
  GroupElement g;
  AutoLabel label;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
  /// Lexicographic on the serialised form (a, b, sigma bit, tau bit).
  friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

struct ExtElementHash {
  std::size_t operator()(const ExtElement& x) const noexcept;
};

using ExtSubgroup = detail::ClosureSet<ExtElement, ExtElementHash>;

inline constexpr std::uint64_t kDefaultExtensionCap = 400000;

/// Non-owning view over a group and its automorphisms.
class Extension {
 public:
  Extension(const Group& group, const Automorphisms& autos) : group_(&group), autos_(&autos) {}

  const Group& group() const { return *group_; }
  const Automorphisms& autos() const { return *autos_; }

  /// 4 p^m.
  arith::BigInt order() const { return 4 * group_->params().order(); }

  ExtElement identity() const { return {group_->identity(), AutoLabel::none()}; }
  ExtElement embed(const GroupElement& g) const { return {g, AutoLabel::none()}; }
  ExtElement label_element(AutoLabel label) const { return {group_->identity(), label}; }

  ExtElement multiply(const ExtElement& x, const ExtElement& y) const;
  ExtElement inverse(const ExtElement& x) const;
  ExtElement power(const ExtElement& x, std::int64_t k) const;

  /// Least k >= 1 with x^k = 1 by iterated multiplication, giving up (and
  /// throwing CapExceeded) after min(4 p^m, cap) steps.
  std::uint64_t order_of(const ExtElement& x, std::uint64_t cap = kDefaultExtensionCap) const;

  ExtSubgroup closure(std::span<const ExtElement> generators,
                      std::uint64_t cap = kDefaultExtensionCap) const;

 private:
  const Group* group_;
  const Automorphisms* autos_;
};

}  // namespace stringc
