#pragma once

// Core permutation arithmetic: construction and validation of one-line
// notation, inverses, pattern containment, involution cycle form,
// interval/simplicity testing and inflation.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inv321 {

/// A permutation of 1..n in one-line notation. Immutable value type;
/// equality and ordering are lexicographic on the value sequence.
class Permutation {
public:
  explicit Permutation(std::vector<int> values) : vals_(std::move(values)) {
    if (vals_.empty())
      throw std::invalid_argument("permutation: empty value sequence");
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : vals_) {
      if (v < 1 || v > n)
        throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("permutation: duplicate value " +
                                    std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 1)
      throw std::invalid_argument("permutation: length must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(vals_.size()); }

  /// Image of i under the permutation, 1-based.
  int operator()(int i) const { return vals_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& values() const { return vals_; }

  Permutation inverse() const {
    std::vector<int> inv(vals_.size());
    for (int i = 1; i <= size(); ++i)
      inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.vals_ == b.vals_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.vals_ < b.vals_;
  }

private:
  std::vector<int> vals_;
};

inline bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

/// Generic pattern containment by backtracking over positions. Patterns in
/// this library have length <= 4, so no specialised matcher is needed.
inline bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  const int n = p.size();
  const int k = pattern.size();
  if (k > n) return false;

  std::vector<int> chosen;  // values of the partial occurrence
  chosen.reserve(static_cast<std::size_t>(k));

  auto consistent = [&](int v) {
    const int t = static_cast<int>(chosen.size()) + 1;
    for (int s = 1; s < t; ++s) {
      const bool val_lt = chosen[static_cast<std::size_t>(s - 1)] < v;
      const bool pat_lt = pattern(s) < pattern(t);
      if (val_lt != pat_lt) return false;
    }
    return true;
  };

  // search(t, from): try to place pattern entry t at a position >= from
  auto search = [&](auto&& self, int t, int from) -> bool {
    if (t > k) return true;
    for (int pos = from; pos <= n - (k - t); ++pos) {
      const int v = p(pos);
      if (!consistent(v)) continue;
      chosen.push_back(v);
      if (self(self, t + 1, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 1, 1);
}

/// Linear-time 321-avoidance test: a 321 occurrence exists iff some value
/// lies below the least second-element of an inversion seen so far.
/// Must agree with contains_pattern(p, 321); that agreement is property
/// tested.
inline bool avoids_321(const Permutation& p) {
  int prefix_max = 0;
  int best_mid = 0;  // largest value known to have a bigger value before it
  for (int i = 1; i <= p.size(); ++i) {
    const int v = p(i);
    if (v < best_mid) return false;
    if (v < prefix_max)
      best_mid = std::max(best_mid, v);
    else
      prefix_max = v;
  }
  return true;
}

/// Fixed points plus transpositions (m, M) of an involution, m < M,
/// sorted by ascending smaller element.
struct CycleForm {
  std::vector<int> fixed_points;
  std::vector<std::pair<int, int>> transpositions;

  int size() const {
    return static_cast<int>(fixed_points.size() + 2 * transpositions.size());
  }

  Permutation to_permutation() const {
    const int n = size();
    std::vector<int> vals(static_cast<std::size_t>(n), 0);
    auto place = [&](int i, int v) {
      if (i < 1 || i > n || vals[static_cast<std::size_t>(i - 1)] != 0)
        throw std::invalid_argument("cycle form: entries do not partition 1..n");
      vals[static_cast<std::size_t>(i - 1)] = v;
    };
    for (int f : fixed_points) place(f, f);
    for (auto [m, M] : transpositions) {
      if (m >= M) throw std::invalid_argument("cycle form: pair not (m, M) with m < M");
      place(m, M);
      place(M, m);
    }
    return Permutation(std::move(vals));
  }
};

inline CycleForm cycle_form(const Permutation& p) {
  if (!is_involution(p))
    throw std::invalid_argument("cycle_form: permutation is not an involution");
  CycleForm c;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i)
      c.fixed_points.push_back(i);
    else if (i < p(i))
      c.transpositions.emplace_back(i, p(i));
  }
  return c;  // both lists ascend because i runs in increasing order
}

/// Interval test via window scan: positions [i, j] form an interval iff
/// max - min of the values equals j - i.
inline bool is_simple(const Permutation& p) {
  const int n = p.size();
  if (n <= 2) return true;
  for (int i = 1; i <= n; ++i) {
    int lo = p(i), hi = p(i);
    for (int j = i + 1; j <= n; ++j) {
      lo = std::min(lo, p(j));
      hi = std::max(hi, p(j));
      const int len = j - i + 1;
      if (len == n) break;
      if (hi - lo == len - 1) return false;  // proper interval of length >= 2
    }
  }
  return true;
}

/// sigma[b_1, ..., b_m]: replace entry i of the skeleton by block i,
/// blocks occupying contiguous value ranges ordered by skeleton values.
inline Permutation inflate(const Permutation& skeleton,
                           const std::vector<Permutation>& blocks) {
  const int m = skeleton.size();
  if (static_cast<int>(blocks.size()) != m)
    throw std::invalid_argument("inflate: block count does not match skeleton length");

  // offset per skeleton position: total length of blocks with smaller skeleton value
  std::vector<int> offset(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (skeleton(j) < skeleton(i))
        offset[static_cast<std::size_t>(i - 1)] += blocks[static_cast<std::size_t>(j - 1)].size();

  std::vector<int> vals;
  for (int i = 1; i <= m; ++i)
    for (int v : blocks[static_cast<std::size_t>(i - 1)].values())
      vals.push_back(offset[static_cast<std::size_t>(i - 1)] + v);
  return Permutation(std::move(vals));
}

}  // namespace inv321
