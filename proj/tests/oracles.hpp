#pragma once

// Test-only oracles, kept independent of the implementations they check:
// brute-force scans and exhaustive generators with no shared code paths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "inv321/permutation.hpp"

namespace oracles {

// Descending triple by direct O(n^3) scan.
inline bool has_descending_triple(const inv321::Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (p(i) > p(j) && p(j) > p(k)) return true;
  return false;
}

// Simplicity by scanning value windows [v, w]: an interval exists iff the
// positions of the values v..w are contiguous. Independent of the
// position-window scan used by the library.
inline bool is_simple_value_windows(const inv321::Permutation& p) {
  const int n = p.size();
  if (n <= 2) return true;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(p(i))] = i;
  for (int v = 1; v <= n; ++v) {
    int lo = pos[static_cast<std::size_t>(v)], hi = lo;
    for (int w = v + 1; w <= n; ++w) {
      lo = std::min(lo, pos[static_cast<std::size_t>(w)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(w)]);
      const int len = w - v + 1;
      if (len == n) break;
      if (hi - lo == len - 1) return false;
    }
  }
  return true;
}

inline void for_each_permutation(int n,
                                 const std::function<void(const inv321::Permutation&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(inv321::Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// All involutions of S_n by matching the smallest unplaced element.
inline void for_each_involution(int n,
                                const std::function<void(const inv321::Permutation&)>& f) {
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && img[static_cast<std::size_t>(i)] != 0) ++i;
    if (i > n) {
      std::vector<int> vals(img.begin() + 1, img.end());
      f(inv321::Permutation(std::move(vals)));
      return;
    }
    img[static_cast<std::size_t>(i)] = i;
    self(self, i + 1);
    img[static_cast<std::size_t>(i)] = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (img[static_cast<std::size_t>(j)] != 0) continue;
      img[static_cast<std::size_t>(i)] = j;
      img[static_cast<std::size_t>(j)] = i;
      self(self, i + 1);
      img[static_cast<std::size_t>(i)] = 0;
      img[static_cast<std::size_t>(j)] = 0;
    }
  };
  rec(rec, 1);
}

// Deterministic xorshift for property tests; no <random> engine state.
struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
};

inline inv321::Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform(0, i))]);
  return inv321::Permutation(std::move(v));
}

}  // namespace oracles
