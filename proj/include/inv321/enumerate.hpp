#pragma once

// Brute-force oracles: generation of the involutions avoiding 321 through
// the interleaved-chain criterion, classification tallies, the separable
// intersection count, and the appendix golden fixtures.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "inv321/io.hpp"
#include "inv321/paths.hpp"
#include "inv321/permutation.hpp"
#include "inv321/structure.hpp"

namespace inv321 {

/// Visits every element of I(321)_n exactly once, in no particular order.
/// Elements correspond to Motzkin words with horizontal steps only at level
/// 0 (fixed points outside every transposition, both chains increasing):
/// the i-th up step pairs with the i-th down step.
inline void for_each_involution_avoiding_321(
    int n, const std::function<void(const Permutation&)>& visit) {
  if (n <= 0) throw std::invalid_argument("involutions: length must be positive");

  std::vector<int> vals(static_cast<std::size_t>(n));
  std::vector<int> open;   // positions of up steps, in opening order
  std::size_t closed = 0;  // downs consumed so far; each closes the oldest open up

  auto rec = [&](auto&& self, int pos) -> void {
    const int height = static_cast<int>(open.size() - closed);
    if (pos > n) {
      std::vector<int> v = vals;
      visit(Permutation(std::move(v)));
      return;
    }
    const int remaining = n - pos;  // steps after this one
    if (height == 0) {              // fixed point, never inside a transposition
      vals[static_cast<std::size_t>(pos - 1)] = pos;
      self(self, pos + 1);
    }
    if (height > 0) {  // close the oldest open up step: both chains increase
      const int m = open[closed];
      ++closed;
      vals[static_cast<std::size_t>(m - 1)] = pos;
      vals[static_cast<std::size_t>(pos - 1)] = m;
      self(self, pos + 1);
      --closed;
    }
    if (height + 1 <= remaining) {
      open.push_back(pos);
      self(self, pos + 1);
      open.pop_back();
    }
  };
  rec(rec, 1);
}

/// Materialised, in lexicographic order of one-line notation.
inline std::vector<Permutation> involutions_avoiding_321(int n) {
  std::vector<Permutation> out;
  for_each_involution_avoiding_321(n, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

struct ClassTally {
  int n = 0;
  long long total = 0;
  long long singleton = 0;
  long long type12 = 0;
  long long type21 = 0;
  long long simple = 0;
  long long inflation_of_simple = 0;
};

inline ClassTally count_classes(int n) {
  if (n <= 0) throw std::invalid_argument("count_classes: length must be positive");
  ClassTally tally;
  tally.n = n;
  for_each_involution_avoiding_321(n, [&](const Permutation& p) {
    ++tally.total;
    const TopDecomposition d = classify(p);
    switch (d.kind) {
      case NodeKind::Leaf: ++tally.singleton; break;
      case NodeKind::Sum: ++tally.type12; break;
      case NodeKind::Skew: ++tally.type21; break;
      case NodeKind::Simple: {
        bool trivial_blocks = true;
        for (const auto& b : d.blocks)
          if (b.size() != 1) { trivial_blocks = false; break; }
        if (trivial_blocks)
          ++tally.simple;
        else
          ++tally.inflation_of_simple;
        break;
      }
    }
  });
  return tally;
}

/// |I(321)_n ∩ Av(2413, 3142)|, by direct pattern scans.
inline long long count_separable_intersection(int n) {
  if (n <= 0) throw std::invalid_argument("count_separable_intersection: length must be positive");
  const Permutation q2413({2, 4, 1, 3});
  const Permutation q3142({3, 1, 4, 2});
  long long count = 0;
  for_each_involution_avoiding_321(n, [&](const Permutation& p) {
    if (!contains_pattern(p, q2413) && !contains_pattern(p, q3142)) ++count;
  });
  return count;
}

/// The simple involutions of I(321)_n in lexicographic order, paired with
/// their crossing sequences.
inline std::vector<FixtureEntry> simple_involutions_with_sequences(int n) {
  std::vector<FixtureEntry> out;
  for_each_involution_avoiding_321(n, [&](const Permutation& p) {
    if (p.size() > 2 && is_simple(p))
      out.push_back({p, crossing_sequence(p)});
  });
  std::sort(out.begin(), out.end(), [](const FixtureEntry& a, const FixtureEntry& b) {
    return a.involution < b.involution;
  });
  return out;
}

struct FixtureComparison {
  bool matches = false;
  std::string expected;  // fixture file rendered canonically
  std::string actual;    // enumeration rendered canonically
};

/// Compares the enumerated simple involutions of I(321)_n against a golden
/// fixture file, byte-exact after canonical (lexicographic) rendering.
inline FixtureComparison golden_fixture_check(int n, const std::string& fixture_path) {
  std::vector<FixtureEntry> expected = load_fixture_file(fixture_path);
  std::sort(expected.begin(), expected.end(), [](const FixtureEntry& a, const FixtureEntry& b) {
    return a.involution < b.involution;
  });
  const std::vector<FixtureEntry> actual = simple_involutions_with_sequences(n);

  FixtureComparison cmp;
  for (const auto& e : expected)
    cmp.expected += format_fixture_line(e.involution, e.sequence) + "\n";
  for (const auto& e : actual)
    cmp.actual += format_fixture_line(e.involution, e.sequence) + "\n";
  cmp.matches = cmp.expected == cmp.actual;
  return cmp;
}

}  // namespace inv321
