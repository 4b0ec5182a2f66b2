#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stringc/errors.hpp"

namespace stringc::detail {

/// Explicit finite subgroup: elements in discovery order plus a lookup index.
template <class T, class Hash>
struct ClosureSet {
  std::vector<T> elements;
  std::unordered_map<T, std::uint32_t, Hash> index;

  std::size_t size() const { return elements.size(); }
  bool contains(const T& x) const { return index.contains(x); }
};

/// Breadth-first closure of `generators` under right multiplication, starting
/// from the identity. In a finite group this is the generated subgroup. The
/// order is deterministic: element by element, generators in the given order.
/// Throws CapExceeded once more than `cap` elements are found.
template <class T, class Hash, class Mul>
ClosureSet<T, Hash> bfs_closure(const T& identity, std::span<const T> generators, Mul&& mul,
                                std::uint64_t cap) {
  ClosureSet<T, Hash> result;
  result.elements.push_back(identity);
  result.index.emplace(identity, 0);
  if (cap < 1) throw CapExceeded("closure cap must be at least 1", 0);

  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (const T& gen : generators) {
      T next = mul(result.elements[head], gen);
      if (result.index.contains(next)) continue;
      if (result.elements.size() >= cap) {
        throw CapExceeded("subgroup exceeds the enumeration cap of " + std::to_string(cap),
                          result.elements.size());
      }
      result.index.emplace(next, static_cast<std::uint32_t>(result.elements.size()));
      result.elements.push_back(std::move(next));
    }
  }
  return result;
}

}  // namespace stringc::detail
