#include "stringc/extension.hpp"

#include <algorithm>

#include "stringc/errors.hpp"

namespace stringc {

std::size_t ExtElementHash::operator()(const ExtElement& x) const noexcept {
  const std::size_t h = GroupElementHash{}(x.g);
  const std::size_t tag = (x.label.sigma ? 1u : 0u) | (x.label.tau ? 2u : 0u);
  return h ^ (tag * 0x9e3779b97f4a7c15ULL + (h << 7) + (h >> 3));
}

ExtElement Extension::multiply(const ExtElement& x, const ExtElement& y) const {
  const GroupElement twisted = x.label.is_identity() ? y.g : autos_->apply(x.label, y.g);
  return {group_->multiply(x.g, twisted), x.label.compose(y.label)};
}

ExtElement Extension::inverse(const ExtElement& x) const {
  // (g, a)^{-1} = (a(g^{-1}), a)
  return {autos_->apply(x.label, group_->inverse(x.g)), x.label};
}

ExtElement Extension::power(const ExtElement& x, std::int64_t k) const {
  ExtElement base = k < 0 ? inverse(x) : x;
  auto n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  ExtElement result = identity();
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t Extension::order_of(const ExtElement& x, std::uint64_t cap) const {
  const arith::BigInt group_order = order();
  const std::uint64_t limit =
      group_order < cap ? group_order.convert_to<std::uint64_t>() : cap;
  const ExtElement one = identity();
  ExtElement y = x;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (y == one) return k;
    y = multiply(y, x);
  }
  throw CapExceeded("element order exceeds " + std::to_string(limit), limit);
}

ExtSubgroup Extension::closure(std::span<const ExtElement> generators, std::uint64_t cap) const {
  return detail::bfs_closure<ExtElement, ExtElementHash>(
      identity(), generators,
      [this](const ExtElement& x, const ExtElement& y) { return multiply(x, y); }, cap);
}

}  // namespace stringc
