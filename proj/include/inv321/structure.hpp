#pragma once

// Substitution decomposition and the involution-specific structure maps:
// canonical top-level classification, fully recursive decomposition trees,
// the infinite family of simple involutions, the transposition shift map
// and the first-value bijection it induces on even-length involutions.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inv321/permutation.hpp"

namespace inv321 {

enum class NodeKind { Leaf, Sum, Skew, Simple };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Sum: return "sum";
    case NodeKind::Skew: return "skew";
    case NodeKind::Simple: return "simple";
  }
  return "?";
}

namespace detail {

// Shortest proper prefix [1..k] whose values are {1..k} (direct) or
// {n-k+1..n} (skew). 0 when none exists.
inline int shortest_prefix_block(const Permutation& p, bool skew) {
  const int n = p.size();
  int lo = p(1), hi = p(1);
  for (int k = 1; k < n; ++k) {
    lo = std::min(lo, p(k));
    hi = std::max(hi, p(k));
    if (hi - lo != k - 1) continue;
    if (!skew && lo == 1) return k;
    if (skew && hi == n) return k;
  }
  return 0;
}

inline Permutation pattern_of_range(const Permutation& p, int first, int last) {
  std::vector<int> vals(p.values().begin() + (first - 1), p.values().begin() + last);
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : vals)
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin()) + 1;
  return Permutation(std::move(vals));
}

}  // namespace detail

/// Top-level canonical decomposition. For Sum/Skew the left block is the
/// shortest proper prefix interval, so it is never of the same type and the
/// decomposition is unique. For Simple the blocks are the maximal proper
/// intervals (singletons where none applies) and the skeleton is the unique
/// simple permutation of length >= 4 they inflate.
struct TopDecomposition {
  NodeKind kind = NodeKind::Leaf;
  std::optional<Permutation> skeleton;  // Simple nodes only
  std::vector<Permutation> blocks;      // Sum/Skew: 2 blocks; Simple: skeleton length

  Permutation reinflate(const Permutation& original_for_leaf) const {
    switch (kind) {
      case NodeKind::Leaf:
        return original_for_leaf;
      case NodeKind::Sum:
        return inflate(Permutation({1, 2}), blocks);
      case NodeKind::Skew:
        return inflate(Permutation({2, 1}), blocks);
      case NodeKind::Simple:
        return inflate(*skeleton, blocks);
    }
    throw std::logic_error("unreachable");
  }
};

inline TopDecomposition classify(const Permutation& p) {
  const int n = p.size();
  TopDecomposition d;
  if (n == 1) return d;

  if (int k = detail::shortest_prefix_block(p, /*skew=*/false); k > 0) {
    d.kind = NodeKind::Sum;
    d.blocks = {detail::pattern_of_range(p, 1, k), detail::pattern_of_range(p, k + 1, n)};
    return d;
  }
  if (int k = detail::shortest_prefix_block(p, /*skew=*/true); k > 0) {
    d.kind = NodeKind::Skew;
    d.blocks = {detail::pattern_of_range(p, 1, k), detail::pattern_of_range(p, k + 1, n)};
    return d;
  }

  // Neither sum nor skew decomposable: the maximal proper intervals are
  // pairwise disjoint and the quotient is simple of length >= 4.
  std::vector<std::pair<int, int>> intervals;  // [i, j], length in [2, n-1]
  for (int i = 1; i <= n; ++i) {
    int lo = p(i), hi = p(i);
    for (int j = i + 1; j <= n; ++j) {
      lo = std::min(lo, p(j));
      hi = std::max(hi, p(j));
      const int len = j - i + 1;
      if (len == n) break;
      if (hi - lo == len - 1) intervals.emplace_back(i, j);
    }
  }
  std::vector<std::pair<int, int>> maximal;
  for (auto [i, j] : intervals) {
    bool contained = false;
    for (auto [a, b] : intervals)
      if ((a < i && j <= b) || (a <= i && j < b)) { contained = true; break; }
    if (!contained) maximal.emplace_back(i, j);
  }
  std::sort(maximal.begin(), maximal.end());
  for (std::size_t t = 1; t < maximal.size(); ++t)
    if (maximal[t].first <= maximal[t - 1].second)
      throw std::logic_error("classify: overlapping maximal intervals in simple case");

  std::vector<std::pair<int, int>> spans;
  int pos = 1;
  for (auto [i, j] : maximal) {
    for (; pos < i; ++pos) spans.emplace_back(pos, pos);
    spans.emplace_back(i, j);
    pos = j + 1;
  }
  for (; pos <= n; ++pos) spans.emplace_back(pos, pos);

  d.kind = NodeKind::Simple;
  std::vector<int> skeleton_vals;
  for (auto [i, j] : spans) {
    d.blocks.push_back(detail::pattern_of_range(p, i, j));
    skeleton_vals.push_back(p(i));  // block value ranges are disjoint, any representative orders them
  }
  {
    std::vector<int> sorted = skeleton_vals;
    std::sort(sorted.begin(), sorted.end());
    for (int& v : skeleton_vals)
      v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                           sorted.begin()) + 1;
  }
  d.skeleton = Permutation(std::move(skeleton_vals));
  if (d.skeleton->size() < 4 || !is_simple(*d.skeleton))
    throw std::logic_error("classify: quotient is not a simple permutation of length >= 4");
  if (d.reinflate(p) != p)
    throw std::logic_error("classify: reinflation mismatch");
  return d;
}

/// Fully recursive canonical decomposition tree.
struct DecompositionTree {
  NodeKind kind = NodeKind::Leaf;
  std::optional<Permutation> skeleton;       // Simple nodes only
  std::vector<DecompositionTree> children;   // Sum/Skew: 2; Simple: skeleton length

  int size() const {
    if (kind == NodeKind::Leaf) return 1;
    int total = 0;
    for (const auto& c : children) total += c.size();
    return total;
  }

  Permutation reinflate() const {
    if (kind == NodeKind::Leaf) return Permutation({1});
    std::vector<Permutation> blocks;
    blocks.reserve(children.size());
    for (const auto& c : children) blocks.push_back(c.reinflate());
    switch (kind) {
      case NodeKind::Sum: return inflate(Permutation({1, 2}), blocks);
      case NodeKind::Skew: return inflate(Permutation({2, 1}), blocks);
      default: return inflate(*skeleton, blocks);
    }
  }
};

inline DecompositionTree full_tree(const Permutation& p) {
  DecompositionTree t;
  const TopDecomposition d = classify(p);
  t.kind = d.kind;
  t.skeleton = d.skeleton;
  for (const auto& b : d.blocks) t.children.push_back(full_tree(b));
  return t;
}

/// Interleaving criterion for membership of an involution in I(321): with
/// fixed points written as (f, f) and cycles sorted by smaller element,
/// both the m chain and the M chain must increase strictly.
inline bool check_prop23(const CycleForm& c) {
  std::vector<std::pair<int, int>> cycles;
  for (int f : c.fixed_points) cycles.emplace_back(f, f);
  cycles.insert(cycles.end(), c.transpositions.begin(), c.transpositions.end());
  std::sort(cycles.begin(), cycles.end());
  for (std::size_t i = 1; i < cycles.size(); ++i)
    if (cycles[i].second <= cycles[i - 1].second) return false;
  return true;
}

/// The length-(4k-6) simple involution family: k-1 leading maxima
/// n, n+2, ..., 3n-4 (n = k), the interleave 1, 3n-3, 2, 3n-2, ...,
/// and the tail n-1, n+1, ..., 3n-5.
inline Permutation prop25_family(int k) {
  if (k < 3) throw std::invalid_argument("prop25_family: requires k >= 3");
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(4 * k - 6));
  for (int i = 0; i <= k - 2; ++i) vals.push_back(k + 2 * i);
  for (int i = 1; i <= k - 2; ++i) {
    vals.push_back(i);
    vals.push_back(3 * k - 4 + i);
  }
  for (int i = 0; i <= k - 2; ++i) vals.push_back(k - 1 + 2 * i);
  Permutation p(std::move(vals));
  if (!is_involution(p) || !avoids_321(p) || !is_simple(p))
    throw std::logic_error("prop25_family: postcondition failed");
  return p;
}

/// (m1,M1)...(mh,Mh) -> (1)(m2,M1)(m3,M2)...(mh,M_{h-1})(Mh): shifts the
/// maxima chain one transposition down, trading the pair structure for two
/// fixed points. Defined only on fixed-point-free members of I(321).
inline Permutation shift_map(const Permutation& p) {
  if (!is_involution(p) || !avoids_321(p))
    throw std::invalid_argument("shift_map: input must be an involution avoiding 321");
  const CycleForm c = cycle_form(p);
  if (!c.fixed_points.empty())
    throw std::invalid_argument("shift_map: input must be fixed-point free");
  const auto& t = c.transpositions;
  const std::size_t h = t.size();
  CycleForm out;
  out.fixed_points = {t.front().first, t.back().second};
  for (std::size_t i = 0; i + 1 < h; ++i) {
    const int a = t[i + 1].first;   // m_{i+2} in 1-based terms
    const int b = t[i].second;      // M_{i+1}
    out.transpositions.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.fixed_points.begin(), out.fixed_points.end());
  std::sort(out.transpositions.begin(), out.transpositions.end());
  Permutation q = out.to_permutation();
  if (!is_involution(q) || !avoids_321(q) || q.size() != p.size())
    throw std::logic_error("shift_map: postcondition failed");
  return q;
}

/// Bijection between even-length members of I(321) with p(1) != 1 and those
/// with p(1) = 1: the shift map applied to the whole permutation when it has
/// no fixed points, and to the canonical first sum block otherwise.
inline Permutation lemma34_forward(const Permutation& p) {
  if (p.size() % 2 != 0 || !is_involution(p) || !avoids_321(p))
    throw std::invalid_argument("lemma34_forward: input must be an even-length involution avoiding 321");
  if (p(1) == 1)
    throw std::invalid_argument("lemma34_forward: requires p(1) != 1");
  const TopDecomposition d = classify(p);
  if (d.kind == NodeKind::Sum)
    return inflate(Permutation({1, 2}), {shift_map(d.blocks[0]), d.blocks[1]});
  return shift_map(p);
}

/// Inverse of lemma34_forward: locate the first fixed point after 1 in the
/// sorted cycle list and splice the maxima chain back up through it.
inline Permutation lemma34_inverse(const Permutation& p) {
  if (p.size() % 2 != 0 || !is_involution(p) || !avoids_321(p))
    throw std::invalid_argument("lemma34_inverse: input must be an even-length involution avoiding 321");
  if (p(1) != 1)
    throw std::invalid_argument("lemma34_inverse: requires p(1) = 1");

  const CycleForm c = cycle_form(p);
  std::vector<std::pair<int, int>> cycles;
  for (int f : c.fixed_points) cycles.emplace_back(f, f);
  cycles.insert(cycles.end(), c.transpositions.begin(), c.transpositions.end());
  std::sort(cycles.begin(), cycles.end());

  std::size_t i = 1;
  while (i < cycles.size() && cycles[i].first != cycles[i].second) ++i;
  if (i == cycles.size())
    throw std::logic_error("lemma34_inverse: even-length involution with a single fixed point");

  CycleForm out;
  for (std::size_t j = 0; j < i; ++j)
    out.transpositions.emplace_back(cycles[j].first, cycles[j + 1].second);
  for (std::size_t j = i + 1; j < cycles.size(); ++j) {
    if (cycles[j].first == cycles[j].second)
      out.fixed_points.push_back(cycles[j].first);
    else
      out.transpositions.push_back(cycles[j]);
  }
  std::sort(out.transpositions.begin(), out.transpositions.end());
  Permutation q = out.to_permutation();
  if (q(1) == 1 || !is_involution(q) || !avoids_321(q))
    throw std::logic_error("lemma34_inverse: postcondition failed");
  return q;
}

}  // namespace inv321
