// Command-line surface: enumeration dumps, coefficient tables, the
// verification suites, and conversions between involutions, crossing
// sequences, lattice paths and SVG drawings.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "inv321/enumerate.hpp"
#include "inv321/io.hpp"
#include "inv321/paths.hpp"
#include "inv321/series.hpp"
#include "inv321/structure.hpp"
#include "inv321/verify.hpp"

namespace {

using nlohmann::json;
using namespace inv321;

#ifndef INV321_FIXTURE_DIR
#define INV321_FIXTURE_DIR "fixtures"
#endif

std::string class_label(const TopDecomposition& d) {
  switch (d.kind) {
    case NodeKind::Leaf: return "singleton";
    case NodeKind::Sum: return "type12";
    case NodeKind::Skew: return "type21";
    case NodeKind::Simple: {
      for (const auto& b : d.blocks)
        if (b.size() != 1) return "inflation";
      return "simple";
    }
  }
  return "?";
}

struct EnumeratedItem {
  Permutation p;
  std::string label;
  bool simple = false;
};

int cmd_enumerate(int n, const std::string& cls, const std::string& format, int max) {
  if (n < 1 || n > max) {
    std::cerr << "enumerate: n must be between 1 and " << max << "\n";
    return 2;
  }
  std::vector<EnumeratedItem> items;
  for (const auto& p : involutions_avoiding_321(n)) {
    const std::string label = class_label(classify(p));
    if (cls != "all" && cls != label) continue;
    items.push_back({p, label, label == "simple"});
  }

  if (format == "text") {
    for (const auto& it : items) {
      std::cout << format_one_line(it.p);
      if (it.simple) std::cout << ' ' << format_sequence(crossing_sequence(it.p));
      std::cout << '\n';
    }
  } else if (format == "json") {
    json out;
    out["command"] = "enumerate";
    out["n"] = n;
    out["class"] = cls;
    out["count"] = items.size();
    out["items"] = json::array();
    for (const auto& it : items) {
      json item;
      item["notation"] = format_one_line(it.p);
      item["values"] = it.p.values();
      item["class"] = it.label;
      if (it.simple) item["crossing_sequence"] = crossing_sequence(it.p).values;
      out["items"].push_back(item);
    }
    std::cout << out.dump(2) << '\n';
  } else {  // csv
    std::cout << "notation,class,crossing_sequence\n";
    for (const auto& it : items) {
      std::cout << format_one_line(it.p) << ',' << it.label << ',';
      if (it.simple) std::cout << '"' << format_sequence(crossing_sequence(it.p)) << '"';
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_coeffs(const std::string& name, int order, const std::string& format) {
  const SeriesName sn = series_name_from_string(name);
  const PowerSeries s = expand_series(sn, order);
  if (format == "text") {
    const auto cs = coefficient_strings(s);
    for (std::size_t i = 0; i < cs.size(); ++i)
      std::cout << (i + 1) << ' ' << cs[i] << '\n';
  } else if (format == "json") {
    json out;
    out["command"] = "coeffs";
    out["name"] = name;
    out["order"] = order;
    out["coefficients"] = json::parse(series_to_json(s));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << series_to_csv(s);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
  const RunReport report = run_verify(suite, opt);
  if (format == "json") {
    json out;
    out["command"] = "verify";
    out["suite"] = suite;
    out["max_n"] = opt.max_n;
    out["order"] = opt.order;
    out["checks"] = json::array();
    for (const auto& c : report.checks) {
      json check;
      check["name"] = c.name;
      check["status"] = to_string(c.status);
      check["expected"] = c.expected;
      check["actual"] = c.actual;
      check["elapsed_ms"] = c.elapsed_s * 1e3;
      out["checks"].push_back(check);
    }
    out["failures"] = report.failures();
    out["discrepancies"] = report.discrepancies();
    out["elapsed_ms"] = report.elapsed_s * 1e3;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "# " << report.command << '\n';
    for (const auto& c : report.checks) {
      std::cout << '[' << to_string(c.status) << "] " << c.name << '\n';
      if (c.status == CheckStatus::Fail)
        std::cout << "    expected: " << c.expected << "\n    actual:   " << c.actual << '\n';
      if (c.status == CheckStatus::DiscrepancyDocumented)
        std::cout << "    claim:    " << c.expected << "\n    measured: " << c.actual << '\n';
    }
    std::cout << report.checks.size() << " checks, " << report.failures() << " failures, "
              << report.discrepancies() << " documented discrepancies ("
              << static_cast<long long>(report.elapsed_s * 1e3) << " ms)\n";
  }
  return report.exit_code();
}

enum class InputKind { Involution, Sequence, Path };

InputKind detect_input(const std::string& text) {
  if (!text.empty() && text.front() == '{') return InputKind::Sequence;
  for (char c : text) {
    const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == 'U' || u == 'D' || u == 'H') return InputKind::Path;
  }
  return InputKind::Involution;
}

int cmd_convert(const std::string& input, const std::string& to,
                const std::string& out_file, const std::string& format) {
  const InputKind kind = detect_input(input);
  std::string result;

  auto involution_out = [&](const Permutation& p) { result = format_one_line(p); };

  if (kind == InputKind::Involution) {
    const Permutation p = parse_one_line(input);
    if (to == "sequence") {
      result = format_sequence(crossing_sequence(p));
    } else if (to == "motzkin") {
      result = format_path(labelled_motzkin_from_involution(p));
    } else if (to == "dyck") {
      const LatticePath m = labelled_motzkin_from_involution(p);
      if (!m.is_dyck())
        throw std::invalid_argument("convert: involution has fixed points, no Dyck path");
      result = format_path(m);
    } else if (to == "involution") {
      involution_out(p);
    } else if (to == "svg") {
      result = svg_of_plot(p);
    } else {
      throw std::invalid_argument("convert: unknown target " + to);
    }
  } else if (kind == InputKind::Sequence) {
    const CrossingSequence s = parse_sequence(input);
    if (to == "involution") {
      involution_out(involution_from_sequence(s));
    } else if (to == "motzkin") {
      result = format_path(motzkin_from_sequence(s));
    } else if (to == "dyck") {
      result = format_path(labelled_motzkin_from_involution(involution_from_sequence(s)));
    } else if (to == "sequence") {
      result = format_sequence(s);
    } else if (to == "svg") {
      result = svg_of_path(motzkin_from_sequence(s));
    } else {
      throw std::invalid_argument("convert: unknown target " + to);
    }
  } else {
    const LatticePath p = parse_path(input);
    if (to == "involution") {
      involution_out(involution_from_labelled_motzkin(p));
    } else if (to == "sequence") {
      result = format_sequence(sequence_from_motzkin(p));
    } else if (to == "motzkin") {
      result = format_path(p);
    } else if (to == "dyck") {
      if (!p.is_dyck()) throw std::invalid_argument("convert: path is not a Dyck path");
      result = format_path(p);
    } else if (to == "svg") {
      result = svg_of_path(p);
    } else {
      throw std::invalid_argument("convert: unknown target " + to);
    }
  }

  std::string payload;
  if (format == "json") {
    json out;
    out["command"] = "convert";
    out["input"] = input;
    out["to"] = to;
    out["output"] = result;
    payload = out.dump(2) + "\n";
  } else {
    payload = result;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
  }

  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw std::invalid_argument("convert: cannot write " + out_file);
    f << payload;
  } else {
    std::cout << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"involutions avoiding 321: enumeration, generating functions, bijections"};
  app.require_subcommand(1);

  // enumerate
  int n = 1;
  std::string cls = "all", format = "text";
  int max_length = 16;
  auto* enumerate = app.add_subcommand("enumerate", "list I(321)_n in lexicographic order");
  enumerate->add_option("n", n, "length")->required();
  enumerate->add_option("--class", cls, "all|type12|type21|simple|inflation")
      ->check(CLI::IsMember({"all", "type12", "type21", "simple", "inflation"}));
  enumerate->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_option("--max", max_length, "largest accepted length (default 16)");

  // coeffs
  std::string series_name = "f";
  int order = 8;
  std::string coeff_format = "text";
  auto* coeffs = app.add_subcommand("coeffs", "coefficient table of a named series");
  coeffs->add_option("name", series_name,
                     "phi|f|alpha|beta|gamma|delta|zeta|epsilon|omega|f_minus_gamma")
      ->required();
  coeffs->add_option("N", order, "truncation order")->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--format", coeff_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  std::string suite = "all", verify_format = "text";
  VerifyOptions vopt;
  vopt.fixture_dir = INV321_FIXTURE_DIR;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "structure|series|paths|all")
      ->check(CLI::IsMember({"structure", "series", "paths", "all"}));
  verify->add_option("--max-n", vopt.max_n, "exhaustive sweep bound (default 14, cap 16)");
  verify->add_option("--order", vopt.order, "series truncation order (default 40, cap 60)");
  verify->add_option("--fixtures", vopt.fixture_dir, "fixture directory");
  verify->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // convert
  std::string input, to, out_file, convert_format = "text";
  auto* convert = app.add_subcommand(
      "convert", "convert between involutions, sequences, paths and SVG");
  convert->add_option("input", input,
                      "one-line involution, {s1,s2,...} sequence, or U/D/H path")
      ->required();
  convert->add_option("--to", to, "dyck|motzkin|sequence|involution|svg")
      ->required()
      ->check(CLI::IsMember({"dyck", "motzkin", "sequence", "involution", "svg"}));
  convert->add_option("--output,-o", out_file, "write to a file instead of stdout");
  convert->add_option("--format", convert_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(n, cls, format, max_length);
    if (coeffs->parsed()) return cmd_coeffs(series_name, order, coeff_format);
    if (verify->parsed()) return cmd_verify(suite, vopt, verify_format);
    if (convert->parsed()) return cmd_convert(input, to, out_file, convert_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
