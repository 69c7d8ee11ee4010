#pragma once

// Plot connections, diagonal crossing sequences, admissible sequences and
// the two path bijections: simple involutions vs short Motzkin paths with
// no level-0 horizontal steps, and fixed-point-free involutions vs Dyck
// paths, with the path-side simplicity criterion.

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inv321/permutation.hpp"

namespace inv321 {

enum class Step { Up, Down, Horizontal };

/// Lattice path over {Up, Down, Horizontal}. Down steps may carry positive
/// labels (one per Down step, in step order); an empty label vector means
/// the unitary labelling.
struct LatticePath {
  std::vector<Step> steps;
  std::vector<int> labels;

  int length() const { return static_cast<int>(steps.size()); }

  bool is_motzkin() const {
    int h = 0;
    for (Step s : steps) {
      if (s == Step::Up) ++h;
      if (s == Step::Down) --h;
      if (h < 0) return false;
    }
    return h == 0;
  }

  bool is_dyck() const {
    for (Step s : steps)
      if (s == Step::Horizontal) return false;
    return is_motzkin();
  }

  bool unitary_labels() const {
    for (int l : labels)
      if (l != 1) return false;
    return true;
  }

  bool has_level0_horizontal() const {
    int h = 0;
    for (Step s : steps) {
      if (s == Step::Horizontal && h == 0) return true;
      if (s == Step::Up) ++h;
      if (s == Step::Down) --h;
    }
    return false;
  }

  bool has_elevated_horizontal() const {
    int h = 0;
    for (Step s : steps) {
      if (s == Step::Horizontal && h > 0) return true;
      if (s == Step::Up) ++h;
      if (s == Step::Down) --h;
    }
    return false;
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    if (a.steps != b.steps) return false;
    // empty label vectors mean all ones
    auto label = [](const LatticePath& p, std::size_t i) {
      return p.labels.empty() ? 1 : p.labels[i];
    };
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.steps.size(); ++i)
      if (a.steps[i] == Step::Down) {
        if (label(a, d) != label(b, d)) return false;
        ++d;
      }
    return true;
  }
};

/// Per-transposition diagonal crossing counts s_1..s_h of a fixed-point-free
/// member of I(321): all odd, 1 at both ends, steps of at most 2.
struct CrossingSequence {
  std::vector<int> values;

  int length() const { return static_cast<int>(values.size()); }

  /// Admissibility: the exact conditions satisfied by (and characterising)
  /// the sequences of simple involutions.
  bool admissible() const {
    const int h = length();
    if (h == 0) return false;
    for (int v : values)
      if (v < 1 || v % 2 == 0) return false;
    if (values.front() != 1 || values.back() != 1) return false;
    for (int i = 0; i < h; ++i)
      if (values[static_cast<std::size_t>(i)] == 1) {
        if (i > 0 && values[static_cast<std::size_t>(i - 1)] == 1) return false;
        if (i + 1 < h && values[static_cast<std::size_t>(i + 1)] == 1) return false;
      }
    for (int i = 0; i + 1 < h; ++i)
      if (std::abs(values[static_cast<std::size_t>(i + 1)] - values[static_cast<std::size_t>(i)]) > 2)
        return false;
    return true;
  }

  friend bool operator==(const CrossingSequence& a, const CrossingSequence& b) {
    return a.values == b.values;
  }
  friend bool operator<(const CrossingSequence& a, const CrossingSequence& b) {
    return a.values < b.values;
  }
};

enum class ConnectionKind { Upper, Lower };

/// A connection joins transpositions i and i+1 of the plot; the stored
/// values are the two joined maxima (Upper) or minima (Lower).
struct Connection {
  ConnectionKind kind;
  int index;  // 1-based transposition index i, joining pair i to pair i+1
  int first_value;
  int second_value;

  friend bool operator==(const Connection&, const Connection&) = default;
};

namespace detail {

inline std::vector<std::pair<int, int>> fpf_pairs(const Permutation& p,
                                                  const char* who) {
  if (!is_involution(p) || !avoids_321(p))
    throw std::invalid_argument(std::string(who) + ": input must be an involution avoiding 321");
  const CycleForm c = cycle_form(p);
  if (!c.fixed_points.empty())
    throw std::invalid_argument(std::string(who) + ": input must be fixed-point free");
  return c.transpositions;
}

}  // namespace detail

/// Adjacent same-side points of the plot joined without crossing the
/// diagonal: an upper connection at i means the maxima of pairs i, i+1 sit
/// at consecutive positions (m_{i+1} = m_i + 1), a lower connection means
/// the minima do (M_{i+1} = M_i + 1).
inline std::vector<Connection> plot_connections(const Permutation& p) {
  const auto pairs = detail::fpf_pairs(p, "plot_connections");
  std::vector<Connection> out;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    if (pairs[i + 1].first == pairs[i].first + 1)
      out.push_back({ConnectionKind::Upper, static_cast<int>(i + 1),
                     pairs[i].second, pairs[i + 1].second});
    if (pairs[i + 1].second == pairs[i].second + 1)
      out.push_back({ConnectionKind::Lower, static_cast<int>(i + 1),
                     pairs[i].first, pairs[i + 1].first});
  }
  return out;
}

/// True iff some transposition index carries both an upper and a lower
/// connection (a pair of connections symmetric across y = x).
inline bool has_symmetric_connection_pair(const Permutation& p) {
  const auto pairs = detail::fpf_pairs(p, "has_symmetric_connection_pair");
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (pairs[i + 1].first == pairs[i].first + 1 &&
        pairs[i + 1].second == pairs[i].second + 1)
      return true;
  return false;
}

/// s_i = number of sign changes of p(j) - j for j running from m_i to M_i.
/// This realises "number of crossings of y = x between the maximum and its
/// minimum" and reproduces every sequence listed in the source figures.
inline CrossingSequence crossing_sequence(const Permutation& p) {
  const auto pairs = detail::fpf_pairs(p, "crossing_sequence");
  CrossingSequence s;
  for (auto [m, M] : pairs) {
    int changes = 0;
    for (int j = m; j < M; ++j) {
      const bool above = p(j) > j;
      const bool above_next = p(j + 1) > j + 1;
      if (above != above_next) ++changes;
    }
    s.values.push_back(changes);
  }
  return s;
}

namespace detail {

// Relaxed validity shared by the path conversions: odd values, both ends 1,
// steps of at most 2. Adjacent 1s are allowed here (they encode level-0
// horizontal steps of sum-decomposable plots); full admissibility is
// required only where a simple involution is to be rebuilt.
inline void require_sequence_shape(const CrossingSequence& s, const char* who) {
  if (s.length() == 0)
    throw std::invalid_argument(std::string(who) + ": empty sequence");
  for (int v : s.values)
    if (v < 1 || v % 2 == 0)
      throw std::invalid_argument(std::string(who) + ": values must be odd and positive");
  if (s.values.front() != 1 || s.values.back() != 1)
    throw std::invalid_argument(std::string(who) + ": sequence must start and end at 1");
  for (int i = 0; i + 1 < s.length(); ++i)
    if (std::abs(s.values[static_cast<std::size_t>(i + 1)] -
                 s.values[static_cast<std::size_t>(i)]) > 2)
      throw std::invalid_argument(std::string(who) + ": steps must be at most 2");
}

}  // namespace detail

/// Step k is Up / Down / Horizontal as s_{k+1} - s_k = +2 / -2 / 0.
inline LatticePath motzkin_from_sequence(const CrossingSequence& s) {
  detail::require_sequence_shape(s, "motzkin_from_sequence");
  LatticePath path;
  for (int i = 0; i + 1 < s.length(); ++i) {
    const int d = s.values[static_cast<std::size_t>(i + 1)] -
                  s.values[static_cast<std::size_t>(i)];
    path.steps.push_back(d > 0 ? Step::Up : d < 0 ? Step::Down : Step::Horizontal);
  }
  return path;
}

/// Inverse accumulation from s_1 = 1.
inline CrossingSequence sequence_from_motzkin(const LatticePath& m) {
  if (!m.is_motzkin())
    throw std::invalid_argument("sequence_from_motzkin: not a Motzkin path");
  CrossingSequence s;
  int v = 1;
  s.values.push_back(v);
  for (Step st : m.steps) {
    if (st == Step::Up) v += 2;
    if (st == Step::Down) v -= 2;
    s.values.push_back(v);
  }
  return s;
}

/// Pair the i-th Up step (position m_i) with the i-th Down step (position
/// M_i). Inverse of the path construction on fixed-point-free involutions.
inline Permutation involution_from_dyck(const LatticePath& d) {
  if (!d.is_dyck())
    throw std::invalid_argument("involution_from_dyck: not a Dyck path");
  if (!d.unitary_labels())
    throw std::invalid_argument("involution_from_dyck: labels must be unitary");
  std::vector<int> ups, downs;
  for (int i = 0; i < d.length(); ++i)
    (d.steps[static_cast<std::size_t>(i)] == Step::Up ? ups : downs).push_back(i + 1);
  std::vector<int> vals(d.steps.size());
  for (std::size_t i = 0; i < ups.size(); ++i) {
    vals[static_cast<std::size_t>(ups[i] - 1)] = downs[i];
    vals[static_cast<std::size_t>(downs[i] - 1)] = ups[i];
  }
  Permutation p(std::move(vals));
  if (!is_involution(p) || !avoids_321(p))
    throw std::logic_error("involution_from_dyck: postcondition failed");
  return p;
}

/// Rebuild the unique simple involution with crossing sequence s. The Dyck
/// word is reconstructed run by run: writing p(i), q(i) for the runs holding
/// the i-th Up and the i-th Down, the sequence forces q(i) - p(i) =
/// (s_i - 1)/2, and in a simple involution each Up step (respectively Down
/// step) opens a new run exactly when the sequence steps down (respectively
/// up), both on a horizontal step. The result is gated on a mandatory
/// postcondition: crossing sequence equal to s and simplicity.
inline Permutation involution_from_sequence(const CrossingSequence& s) {
  if (!s.admissible())
    throw std::invalid_argument("involution_from_sequence: sequence is not admissible");
  const int h = s.length();

  std::vector<int> up_run(static_cast<std::size_t>(h)), down_run(static_cast<std::size_t>(h));
  up_run[0] = down_run[0] = 1;
  for (int i = 0; i + 1 < h; ++i) {
    const int d = s.values[static_cast<std::size_t>(i + 1)] -
                  s.values[static_cast<std::size_t>(i)];
    if (d > 0) {  // up: same Up run, new Down run
      up_run[static_cast<std::size_t>(i + 1)] = up_run[static_cast<std::size_t>(i)];
      down_run[static_cast<std::size_t>(i + 1)] = down_run[static_cast<std::size_t>(i)] + 1;
    } else if (d < 0) {  // down: new Up run, same Down run
      up_run[static_cast<std::size_t>(i + 1)] = up_run[static_cast<std::size_t>(i)] + 1;
      down_run[static_cast<std::size_t>(i + 1)] = down_run[static_cast<std::size_t>(i)];
    } else {  // horizontal: both advance
      up_run[static_cast<std::size_t>(i + 1)] = up_run[static_cast<std::size_t>(i)] + 1;
      down_run[static_cast<std::size_t>(i + 1)] = down_run[static_cast<std::size_t>(i)] + 1;
    }
  }
  const int runs = up_run[static_cast<std::size_t>(h - 1)];
  if (down_run[static_cast<std::size_t>(h - 1)] != runs)
    throw std::logic_error("involution_from_sequence: run counts disagree");

  // lay out U^{a_1} D^{b_1} ... U^{a_r} D^{b_r}
  std::vector<int> a(static_cast<std::size_t>(runs), 0), b(static_cast<std::size_t>(runs), 0);
  for (int i = 0; i < h; ++i) {
    ++a[static_cast<std::size_t>(up_run[static_cast<std::size_t>(i)] - 1)];
    ++b[static_cast<std::size_t>(down_run[static_cast<std::size_t>(i)] - 1)];
  }
  LatticePath word;
  for (int r = 0; r < runs; ++r) {
    word.steps.insert(word.steps.end(), static_cast<std::size_t>(a[static_cast<std::size_t>(r)]), Step::Up);
    word.steps.insert(word.steps.end(), static_cast<std::size_t>(b[static_cast<std::size_t>(r)]), Step::Down);
  }

  const Permutation p = involution_from_dyck(word);
  if (!(crossing_sequence(p) == s) || !is_simple(p))
    throw std::logic_error("involution_from_sequence: postcondition failed");
  return p;
}

/// Length-n labelled Motzkin path of an arbitrary involution: horizontal at
/// fixed points, up at the smaller element of each transposition, down at
/// the larger, the down step labelled by the rank of the closing
/// transposition's minimum among the currently open minima.
inline LatticePath labelled_motzkin_from_involution(const Permutation& p) {
  if (!is_involution(p))
    throw std::invalid_argument("labelled_motzkin_from_involution: input must be an involution");
  LatticePath path;
  std::vector<int> open;  // minima of open transpositions, kept sorted
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) {
      path.steps.push_back(Step::Horizontal);
    } else if (p(i) > i) {
      path.steps.push_back(Step::Up);
      open.insert(std::lower_bound(open.begin(), open.end(), i), i);
    } else {
      path.steps.push_back(Step::Down);
      const int partner = p(i);
      const auto it = std::lower_bound(open.begin(), open.end(), partner);
      path.labels.push_back(static_cast<int>(it - open.begin()) + 1);
      open.erase(it);
    }
  }
  return path;
}

/// Inverse of the labelled construction for arbitrary involutions: a
/// horizontal step fixes its position, a down step with label h closes the
/// h-th smallest currently open minimum.
inline Permutation involution_from_labelled_motzkin(const LatticePath& m) {
  if (!m.is_motzkin())
    throw std::invalid_argument("involution_from_labelled_motzkin: not a Motzkin path");
  const int n = m.length();
  if (n == 0)
    throw std::invalid_argument("involution_from_labelled_motzkin: empty path");
  std::vector<int> vals(static_cast<std::size_t>(n), 0);
  std::vector<int> open;
  std::size_t d = 0;
  for (int i = 1; i <= n; ++i) {
    switch (m.steps[static_cast<std::size_t>(i - 1)]) {
      case Step::Horizontal:
        vals[static_cast<std::size_t>(i - 1)] = i;
        break;
      case Step::Up:
        open.insert(std::lower_bound(open.begin(), open.end(), i), i);
        break;
      case Step::Down: {
        const int label = m.labels.empty() ? 1 : m.labels[d];
        ++d;
        if (label < 1 || label > static_cast<int>(open.size()))
          throw std::invalid_argument("involution_from_labelled_motzkin: label out of range");
        const int partner = open[static_cast<std::size_t>(label - 1)];
        open.erase(open.begin() + (label - 1));
        vals[static_cast<std::size_t>(partner - 1)] = i;
        vals[static_cast<std::size_t>(i - 1)] = partner;
        break;
      }
    }
  }
  return Permutation(std::move(vals));
}

/// True iff the labelled path is unitary with all horizontal steps at
/// level 0; equivalent to 321-avoidance of the involution.
inline bool prop81_check(const Permutation& p) {
  const LatticePath m = labelled_motzkin_from_involution(p);
  return m.unitary_labels() && !m.has_elevated_horizontal();
}

/// Path-side simplicity criterion: the Dyck path touches level 0 only at
/// its endpoints, and no i has U_i, U_{i+1} adjacent while D_i, D_{i+1} are
/// also adjacent.
inline bool is_simple_via_dyck(const LatticePath& d) {
  if (!d.is_dyck())
    throw std::invalid_argument("is_simple_via_dyck: not a Dyck path");
  const int n = d.length();
  if (n == 0) return false;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    h += d.steps[static_cast<std::size_t>(i)] == Step::Up ? 1 : -1;
    if (h == 0 && i + 1 < n) return false;  // irreducibility
  }
  std::vector<int> ups, downs;
  for (int i = 0; i < n; ++i)
    (d.steps[static_cast<std::size_t>(i)] == Step::Up ? ups : downs).push_back(i + 1);
  for (std::size_t i = 0; i + 1 < ups.size(); ++i)
    if (ups[i + 1] == ups[i] + 1 && downs[i + 1] == downs[i] + 1) return false;
  return true;
}

/// All admissible sequences of a given length, lexicographically ordered.
inline std::vector<CrossingSequence> admissible_sequences(int length) {
  std::vector<CrossingSequence> out;
  if (length < 1) return out;
  std::vector<int> cur{1};
  auto rec = [&](auto&& self) -> void {
    const int have = static_cast<int>(cur.size());
    if (have == length) {
      if (cur.back() == 1) out.push_back({cur});
      return;
    }
    const int prev = cur[static_cast<std::size_t>(have - 1)];
    for (int d : {-2, 0, +2}) {
      const int v = prev + d;
      if (v < 1) continue;
      if (v == 1 && prev == 1) continue;           // adjacent 1s
      if (v - 1 > 2 * (length - have - 1)) continue;  // cannot return to 1
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace detail {

inline bool is_subsequence(const std::vector<int>& needle, const std::vector<int>& hay) {
  std::size_t i = 0;
  for (int v : hay)
    if (i < needle.size() && needle[i] == v) ++i;
  return i == needle.size();
}

}  // namespace detail

/// Admissible subsequences of s of every shorter length >= 3; these index
/// exactly the simple involutions of length >= 6 contained in the
/// involution of s. (The length-1 sequence corresponds to 21 and is
/// contained trivially, so it is left out, as is the whole of s.)
inline std::set<CrossingSequence> simple_patterns_contained(const CrossingSequence& s) {
  if (!s.admissible())
    throw std::invalid_argument("simple_patterns_contained: sequence is not admissible");
  std::set<CrossingSequence> out;
  for (int len = 3; len < s.length(); ++len)
    for (const auto& cand : admissible_sequences(len))
      if (detail::is_subsequence(cand.values, s.values)) out.insert(cand);
  return out;
}

/// Admissible supersequences one element longer; these index the simple
/// involutions of the next even length containing the involution of s.
inline std::set<CrossingSequence> simple_extensions(const CrossingSequence& s) {
  if (!s.admissible())
    throw std::invalid_argument("simple_extensions: sequence is not admissible");
  std::set<CrossingSequence> out;
  for (const auto& cand : admissible_sequences(s.length() + 1))
    if (detail::is_subsequence(s.values, cand.values)) out.insert(cand);
  return out;
}

}  // namespace inv321
