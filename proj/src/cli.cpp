#include "nacm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "nacm/bdl.hpp"
#include "nacm/betti.hpp"
#include "nacm/common.hpp"
#include "nacm/curves.hpp"
#include "nacm/hvector.hpp"
#include "nacm/io.hpp"
#include "nacm/macaulify.hpp"
#include "nacm/sequences.hpp"

namespace nacm {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) throw input_error("cannot open input file: " + path);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

std::variant<BettiTable, HVector> read_input(const std::string& path, std::istream& in) {
  return parse_input(slurp(path, in));
}

BdlSequence read_steps(const std::string& value, std::istream& in) {
  std::string text = value;
  if (text.empty()) throw input_error("empty step sequence");
  if (text.find('[') == std::string::npos || text.find_first_not_of(" \t\r\n") != text.find('['))
    text = slurp(value, in);
  try {
    return json::parse(text).get<BdlSequence>();
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid step sequence: ") + e.what());
  }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// -- macaulify ---------------------------------------------------------------

struct MacaulifyOptions {
  std::string input = "-";
  std::string alg = "auto";
  std::string format = "text";
  bool trace = false;
};

void print_hvector_trace(std::ostream& out, const HVector& start,
                         const HVectorMacaulification& m) {
  out << format_hvector(start) << '\n';
  for (const auto& entry : m.trace) out << format_hvector(entry.after) << '\n';
}

void print_profile_trace(std::ostream& out, const ProfileMacaulification& m) {
  for (const auto& entry : m.trace)
    out << "s = " << to_string(entry.profile.s) << ", r = " << to_string(entry.profile.r)
        << " -> step " << format_step(entry.step) << '\n';
}

int run_macaulify(const MacaulifyOptions& opt, std::istream& in, std::ostream& out) {
  auto parsed = read_input(opt.input, in);
  const bool is_table = std::holds_alternative<BettiTable>(parsed);
  std::string alg = opt.alg;
  if (alg == "auto") alg = is_table ? "both" : "2";
  if (!is_table && alg != "2")
    throw input_error("the diagonal route needs a Betti table input; use --alg 2");

  if (!is_table) {
    const HVector& h = std::get<HVector>(parsed);
    HVectorMacaulification m = macaulify_hvector(h);
    if (opt.format == "json") {
      json j = m;
      j["input"] = h;
      print_json(out, j);
      return 0;
    }
    out << "input h-vector: " << format_hvector(h) << '\n';
    out << "deficit: " << deficit(h) << '\n';
    out << "steps: " << format_sequence(m.steps) << '\n';
    if (opt.trace) print_hvector_trace(out, h, m);
    out << "final h-vector: " << format_hvector(m.final_hvector) << '\n';
    return 0;
  }

  const BettiTable& table = std::get<BettiTable>(parsed);
  ResolutionProfile profile = profile_from_table(table);
  HVector h = hvector_from_profile(remove_common_pairs(profile));

  if (alg == "2") {
    HVectorMacaulification m = macaulify_hvector(h);
    if (opt.format == "json") {
      json j = m;
      j["input"] = h;
      print_json(out, j);
      return 0;
    }
    out << "input h-vector: " << format_hvector(h) << '\n';
    out << "deficit: " << deficit(h) << '\n';
    out << "steps: " << format_sequence(m.steps) << '\n';
    if (opt.trace) print_hvector_trace(out, h, m);
    out << "final h-vector: " << format_hvector(m.final_hvector) << '\n';
    return 0;
  }

  auto [diag, final_table] = macaulify_table(table);
  if (alg == "1") {
    if (opt.format == "json") {
      json j = diag;
      j["final_table"] = final_table;
      print_json(out, j);
      return 0;
    }
    out << "input h-vector: " << format_hvector(h) << '\n';
    out << "steps: " << format_sequence(diag.steps) << '\n';
    if (opt.trace) print_profile_trace(out, diag);
    out << "final h-vector: " << format_hvector(diag.final_hvector) << '\n';
    out << "numerically ACM: " << (diag.verdict.verdict ? "true" : "false") << '\n';
    out << render_betti_text(final_table);
    return 0;
  }

  CrossCheckReport report = cross_check(profile);
  if (opt.format == "json") {
    json j = report;
    j["input"] = h;
    j["final_table"] = final_table;
    print_json(out, j);
    return 0;
  }
  out << "input h-vector: " << format_hvector(h) << '\n';
  out << "deficit: " << report.deficit_value << '\n';
  out << "diagonal steps: " << format_sequence(report.by_profile.steps) << '\n';
  if (opt.trace) print_profile_trace(out, report.by_profile);
  out << "staircase steps: " << format_sequence(report.by_hvector.steps) << '\n';
  if (opt.trace) print_hvector_trace(out, h, report.by_hvector);
  out << "final h-vector: " << format_hvector(report.by_profile.final_hvector) << '\n';
  out << "routes agree: " << (report.agree ? "true" : "false") << '\n';
  out << "numerically ACM: " << (report.by_profile.verdict.verdict ? "true" : "false") << '\n';
  out << render_betti_text(final_table);
  return 0;
}

// -- check -------------------------------------------------------------------

int run_check(const std::string& input, const std::string& format, std::istream& in,
              std::ostream& out) {
  auto parsed = read_input(input, in);
  if (std::holds_alternative<HVector>(parsed)) {
    const HVector& h = std::get<HVector>(parsed);
    bool ok = is_o_sequence_codim2(h);
    if (format == "json") {
      print_json(out, json{{"o_sequence", ok}, {"deficit", deficit(h)}, {"verdict", ok}});
      return 0;
    }
    out << "O-sequence: " << (ok ? "true" : "false") << '\n';
    out << "deficit: " << deficit(h) << '\n';
    out << "numerically ACM: " << (ok ? "true" : "false") << '\n';
    return 0;
  }
  const BettiTable& table = std::get<BettiTable>(parsed);
  ResolutionProfile profile = remove_common_pairs(profile_from_table(table));
  AcmVerdict v = check_numerically_acm(profile);
  Int delta = deficit(hvector_from_profile(profile));
  if (format == "json") {
    json payload(v);
    payload["deficit"] = delta;
    print_json(out, payload);
    return 0;
  }
  out << "O-sequence criterion: " << (v.o_sequence ? "true" : "false") << '\n';
  out << "counting criterion: " << (v.counting ? "true" : "false") << '\n';
  out << "diagonal criterion: " << (v.diagonal ? "true" : "false") << '\n';
  out << "deficit: " << delta << '\n';
  out << "numerically ACM: " << (v.verdict ? "true" : "false") << '\n';
  if (v.witness) {
    out << "witness diagonal exponents: " << format_values(v.witness->diagonal) << '\n';
    out << "witness superdiagonal exponents: " << format_values(v.witness->superdiagonal)
        << '\n';
  }
  return 0;
}

// -- bdl ---------------------------------------------------------------------

int run_bdl(const std::string& input, const std::string& steps_value, const std::string& format,
            std::istream& in, std::ostream& out) {
  BdlSequence seq = read_steps(steps_value, in);
  auto parsed = read_input(input, in);

  HVector h = std::holds_alternative<HVector>(parsed)
                  ? std::get<HVector>(parsed)
                  : hvector_from_profile(
                        remove_common_pairs(profile_from_table(std::get<BettiTable>(parsed))));
  std::vector<HVector> trace{h};
  HVector current = h;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    try {
      current = apply_bdl_hvector(current, seq.steps[k]);
    } catch (const input_error& e) {
      throw input_error("step " + std::to_string(k + 1) + ": " + e.what());
    }
    trace.push_back(current);
  }

  if (std::holds_alternative<HVector>(parsed)) {
    if (format == "json") {
      print_json(out, json{{"hvectors", trace}, {"shift", seq.total_height()}});
      return 0;
    }
    for (const auto& step : trace) out << format_hvector(step) << '\n';
    out << "shift: " << seq.total_height() << '\n';
    return 0;
  }

  BettiTable table = apply_sequence_table(std::get<BettiTable>(parsed), seq);
  if (format == "json") {
    print_json(out,
               json{{"hvectors", trace}, {"shift", seq.total_height()}, {"final_table", table}});
    return 0;
  }
  for (const auto& step : trace) out << format_hvector(step) << '\n';
  out << "shift: " << seq.total_height() << '\n';
  out << render_betti_text(table);
  return 0;
}

// -- reduce ------------------------------------------------------------------

int run_reduce(const std::string& input, const std::string& format, std::istream& in,
               std::ostream& out) {
  auto parsed = read_input(input, in);
  if (!std::holds_alternative<BettiTable>(parsed))
    throw input_error("reduce needs a Betti table input");
  BettiTable reduced = numerical_reduction(std::get<BettiTable>(parsed));
  if (format == "json") {
    print_json(out, json(reduced));
    return 0;
  }
  out << render_betti_text(reduced);
  return 0;
}

// -- normalize ---------------------------------------------------------------

int run_normalize(const std::string& input, const std::string& start_value,
                  const std::string& format, std::istream& in, std::ostream& out) {
  BdlSequence seq = read_steps(input, in);
  HVector start = [&] {
    try {
      return json::parse(start_value).get<HVector>();
    } catch (const json::exception& e) {
      throw input_error(std::string("invalid start h-vector: ") + e.what());
    }
  }();
  NormalizationResult result = normalize(seq, start, initial_degree(start));
  if (format == "json") {
    print_json(out, json(result));
    return 0;
  }
  for (const auto& row : result.swap_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  out << "canonical steps: " << format_sequence(result.canonical.to_sequence()) << '\n';
  out << "shift: " << result.canonical.shift << '\n';
  return 0;
}

// -- family ------------------------------------------------------------------

void print_curve(std::ostream& out, const std::string& label, const CurveData& c) {
  out << label << ": degree " << c.degree << ", genus " << c.genus << '\n';
  out << "  h-vector: " << format_hvector(c.hvector) << '\n';
  out << "  hyperplane h-vector: " << format_hvector(c.hyperplane_hvector) << '\n';
  out << "  module degree: " << c.module_degree << ", shift: " << c.shift << '\n';
}

int run_family(Int n, const std::string& format, std::ostream& out) {
  FamilyConstruction fam = construct_smooth_nacm(n);
  if (format == "json") {
    print_json(out, json(fam));
    return 0;
  }
  print_curve(out, "minimal curve", fam.minimal);
  out << "steps: " << format_sequence(fam.steps) << '\n';
  print_curve(out, "intermediate curve", fam.intermediate);
  out << "  character: " << format_values(fam.intermediate_character.values) << '\n';
  out << "  smoothable: " << (fam.intermediate_smoothability.ok() ? "true" : "false") << '\n';
  print_curve(out, "result curve", fam.result);
  out << "  character: " << format_values(fam.character.values) << '\n';
  out << "  smoothable: " << (fam.smoothability.ok() ? "true" : "false") << '\n';
  out << "Gorenstein bound: " << gorenstein_bound(fam.result.degree, fam.result.hvector.last_degree() + 1)
      << '\n';
  return 0;
}

// -- character ---------------------------------------------------------------

int run_character(const std::string& input, bool to_hvector, const std::string& format,
                  std::istream& in, std::ostream& out) {
  if (to_hvector) {
    std::string text = slurp(input, in);
    NumericalCharacter c = [&] {
      try {
        return json::parse(text).get<NumericalCharacter>();
      } catch (const json::exception& e) {
        throw input_error(std::string("invalid character: ") + e.what());
      }
    }();
    HVector h = hvector_from_character(c);
    if (format == "json") {
      print_json(out, json{{"hvector", h}});
      return 0;
    }
    out << "h-vector: " << format_hvector(h) << '\n';
    return 0;
  }
  auto parsed = read_input(input, in);
  HVector h = std::holds_alternative<HVector>(parsed)
                  ? std::get<HVector>(parsed)
                  : hvector_from_profile(
                        remove_common_pairs(profile_from_table(std::get<BettiTable>(parsed))));
  NumericalCharacter c = character_from_hvector(h);
  if (format == "json") {
    print_json(out, json{{"character", c},
                         {"sigma", c.sigma()},
                         {"degree", c.degree_sum()},
                         {"gap_free", !has_gaps(c)}});
    return 0;
  }
  out << "character: " << format_values(c.values) << '\n';
  out << "sigma: " << c.sigma() << '\n';
  out << "degree: " << c.degree_sum() << '\n';
  out << "gap-free: " << (has_gaps(c) ? "false" : "true") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"numerical Macaulification calculator"};
  app.require_subcommand(1);

  MacaulifyOptions mopt;
  auto* mac = app.add_subcommand(
      "macaulify", "transform input data into numerically ACM data by basic double links");
  mac->add_option("input", mopt.input, "Betti table or h-vector file, - for stdin");
  mac->add_option("--alg", mopt.alg, "route: 1 (diagonal), 2 (staircase), or both")
      ->check(CLI::IsMember({"1", "2", "both", "auto"}));
  mac->add_option("--format", mopt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  mac->add_flag("--trace", mopt.trace, "print per-step intermediate data");

  std::string check_input = "-", check_format = "text";
  auto* chk = app.add_subcommand("check", "report the numerically ACM criteria");
  chk->add_option("input", check_input, "Betti table or h-vector file, - for stdin");
  chk->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string bdl_input = "-", bdl_steps, bdl_format = "text";
  auto* bd = app.add_subcommand("bdl", "apply a sequence of basic double links");
  bd->add_option("input", bdl_input, "Betti table or h-vector file, - for stdin");
  bd->add_option("--steps", bdl_steps, "step sequence as [[d,a],...] JSON or a file path")
      ->required();
  bd->add_option("--format", bdl_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string reduce_input = "-", reduce_format = "text";
  auto* red = app.add_subcommand("reduce", "cancel equal twists in adjacent positions");
  red->add_option("input", reduce_input, "Betti table file, - for stdin");
  red->add_option("--format", reduce_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string norm_input = "-", norm_start, norm_format = "text";
  auto* norm = app.add_subcommand(
      "normalize", "rewrite a basic double link sequence into its normal form");
  norm->add_option("input", norm_input, "step sequence as [[d,a],...] JSON or a file path");
  norm->add_option("--start", norm_start, "h-vector the sequence acts on, as a JSON array")
      ->required();
  norm->add_option("--format", norm_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  Int family_n = 1;
  std::string family_format = "text";
  auto* fam = app.add_subcommand("family", "construct the smooth numerically ACM curve family");
  fam->add_option("--n", family_n, "family parameter, n >= 1")->required();
  fam->add_option("--format", family_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string char_input = "-", char_format = "text";
  bool char_to_hvector = false;
  auto* chr = app.add_subcommand("character",
                                 "convert between h-vectors and numerical characters");
  chr->add_option("input", char_input, "input file, - for stdin");
  chr->add_flag("--to-hvector", char_to_hvector,
                "read a character (JSON array) and print its h-vector");
  chr->add_option("--format", char_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(mac)) return run_macaulify(mopt, in, out);
    if (app.got_subcommand(chk)) return run_check(check_input, check_format, in, out);
    if (app.got_subcommand(bd)) return run_bdl(bdl_input, bdl_steps, bdl_format, in, out);
    if (app.got_subcommand(red)) return run_reduce(reduce_input, reduce_format, in, out);
    if (app.got_subcommand(norm))
      return run_normalize(norm_input, norm_start, norm_format, in, out);
    if (app.got_subcommand(fam)) return run_family(family_n, family_format, out);
    if (app.got_subcommand(chr))
      return run_character(char_input, char_to_hvector, char_format, in, out);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const defect_error& e) {
    err << "defect: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "defect: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nacm
