#pragma once

// Text formats: one-line notation with parenthesized multi-digit values,
// crossing sequences as {s1,s2,...}, path words over U/D/H with optional
// :label suffixes on down steps, fixture files, and SVG drawings of plots
// and paths.

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "inv321/paths.hpp"
#include "inv321/permutation.hpp"

namespace inv321 {

/// "351624", "468192(10)357": values > 9 are parenthesized.
inline std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int v : p.values()) {
    if (v > 9) {
      out += '(';
      out += std::to_string(v);
      out += ')';
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

/// Accepts the parenthesized form and the comma-separated form.
inline Permutation parse_one_line(const std::string& text) {
  std::vector<int> vals;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::size_t a = item.find_first_not_of(" \t");
      const std::size_t b = item.find_last_not_of(" \t");
      if (a == std::string::npos)
        throw std::invalid_argument("parse_one_line: empty entry");
      vals.push_back(std::stoi(item.substr(a, b - a + 1)));
    }
  } else {
    for (std::size_t i = 0; i < text.size();) {
      const char c = text[i];
      if (c == '(') {
        const std::size_t close = text.find(')', i);
        if (close == std::string::npos)
          throw std::invalid_argument("parse_one_line: unbalanced parenthesis");
        vals.push_back(std::stoi(text.substr(i + 1, close - i - 1)));
        i = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        vals.push_back(c - '0');
        ++i;
      } else if (c == ' ' || c == '\t') {
        ++i;
      } else {
        throw std::invalid_argument(std::string("parse_one_line: unexpected character '") + c + "'");
      }
    }
  }
  if (vals.empty()) throw std::invalid_argument("parse_one_line: no values");
  return Permutation(std::move(vals));
}

/// "{1,3,1}"
inline std::string format_sequence(const CrossingSequence& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.values[i]);
  }
  out += '}';
  return out;
}

inline CrossingSequence parse_sequence(std::string text) {
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
    text = text.substr(1, text.size() - 2);
  CrossingSequence s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    s.values.push_back(std::stoi(item));
  if (s.values.empty())
    throw std::invalid_argument("parse_sequence: no values");
  return s;
}

/// "UUDUDD"; non-unit down labels appear as ":k" right after their step.
inline std::string format_path(const LatticePath& p) {
  std::string out;
  std::size_t d = 0;
  for (Step s : p.steps) {
    switch (s) {
      case Step::Up: out += 'U'; break;
      case Step::Horizontal: out += 'H'; break;
      case Step::Down: {
        out += 'D';
        const int label = p.labels.empty() ? 1 : p.labels[d];
        ++d;
        if (label != 1) {
          out += ':';
          out += std::to_string(label);
        }
        break;
      }
    }
  }
  return out;
}

inline LatticePath parse_path(const std::string& text) {
  LatticePath p;
  bool any_label = false;
  for (std::size_t i = 0; i < text.size();) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c == 'U') {
      p.steps.push_back(Step::Up);
      ++i;
    } else if (c == 'H') {
      p.steps.push_back(Step::Horizontal);
      ++i;
    } else if (c == 'D') {
      p.steps.push_back(Step::Down);
      ++i;
      int label = 1;
      if (i < text.size() && text[i] == ':') {
        std::size_t j = i + 1, start = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == start) throw std::invalid_argument("parse_path: ':' without a label");
        label = std::stoi(text.substr(start, j - start));
        i = j;
      }
      p.labels.push_back(label);
      if (label != 1) any_label = true;
    } else if (c == ' ') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("parse_path: unexpected character '") + text[i] + "'");
    }
  }
  if (!any_label) p.labels.clear();  // unitary labelling stays implicit
  if (p.steps.empty()) throw std::invalid_argument("parse_path: empty path");
  return p;
}

/// Fixture line: one-line notation, a space, the crossing sequence.
struct FixtureEntry {
  Permutation involution;
  CrossingSequence sequence;
};

inline std::string format_fixture_line(const Permutation& p, const CrossingSequence& s) {
  return format_one_line(p) + " " + format_sequence(s);
}

inline std::vector<FixtureEntry> parse_fixture_text(std::istream& in) {
  std::vector<FixtureEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos)
      throw std::invalid_argument("fixture: line lacks a crossing sequence: " + line);
    out.push_back({parse_one_line(line.substr(0, sp)),
                   parse_sequence(line.substr(sp + 1))});
  }
  return out;
}

inline std::vector<FixtureEntry> load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("fixture: cannot open " + path);
  return parse_fixture_text(in);
}

// ---------------------------------------------------------------------------
// SVG emission, in the drawing style of the source figures: dots joined in
// position order, the diagonal y = x for plots, unit-step polylines for paths.

namespace detail {

inline void svg_open(std::string& svg, int w, int h) {
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
         " " + std::to_string(h) + "\">\n";
}

inline void svg_line(std::string& svg, int x1, int y1, int x2, int y2, const char* stroke) {
  svg += "  <line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
         "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
         "\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
}

inline void svg_dot(std::string& svg, int x, int y) {
  svg += "  <circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) +
         "\" r=\"3\" fill=\"black\"/>\n";
}

}  // namespace detail

inline std::string svg_of_plot(const Permutation& p) {
  const int unit = 24, margin = 24;
  const int n = p.size();
  const int side = 2 * margin + (n - 1) * unit;
  auto X = [&](int i) { return margin + (i - 1) * unit; };
  auto Y = [&](int v) { return side - margin - (v - 1) * unit; };
  std::string svg;
  detail::svg_open(svg, side, side);
  detail::svg_line(svg, X(1), Y(1), X(n), Y(n), "#999999");  // the diagonal y = x
  for (int i = 1; i < n; ++i)
    detail::svg_line(svg, X(i), Y(p(i)), X(i + 1), Y(p(i + 1)), "black");
  for (int i = 1; i <= n; ++i) detail::svg_dot(svg, X(i), Y(p(i)));
  svg += "</svg>\n";
  return svg;
}

inline std::string svg_of_path(const LatticePath& path) {
  const int unit = 24, margin = 24;
  const int n = path.length();
  int h = 0, hmax = 0;
  for (Step s : path.steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    hmax = std::max(hmax, h);
  }
  const int w = 2 * margin + n * unit;
  const int hh = 2 * margin + hmax * unit;
  auto X = [&](int i) { return margin + i * unit; };
  auto Y = [&](int level) { return hh - margin - level * unit; };
  std::string svg;
  detail::svg_open(svg, w, hh);
  h = 0;
  detail::svg_dot(svg, X(0), Y(0));
  for (int i = 0; i < n; ++i) {
    const Step s = path.steps[static_cast<std::size_t>(i)];
    const int h2 = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
    detail::svg_line(svg, X(i), Y(h), X(i + 1), Y(h2), "black");
    detail::svg_dot(svg, X(i + 1), Y(h2));
    h = h2;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace inv321
