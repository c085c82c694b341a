#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace timw {

using Label = std::uint16_t;
using Vec = std::vector<int>;

// FNV-style hash for integer vectors used as table keys.
struct IntVectorHash {
  template <class V>
  std::size_t operator()(const V& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Calls f(assignment) for every vector in [0, base)^len in lexicographic order.
template <class F>
void for_each_assignment(std::size_t len, int base, F&& f) {
  std::vector<int> a(len, 0);
  if (base <= 0 && len > 0) return;
  for (;;) {
    f(static_cast<const std::vector<int>&>(a));
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++a[i] < base) break;
      a[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace timw
