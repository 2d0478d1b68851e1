#include "nacm/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <vector>

namespace nacm {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool is_dash_run(const std::string& token) {
  return token.size() >= 2 && token.find_first_not_of('-') == std::string::npos;
}

bool parse_int(const std::string& token, Int& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

// A labeled row: "12:" followed by one token per column, "-" for zero.
struct DiagramRow {
  Int label = 0;
  std::vector<Int> values;

  bool all_zero() const {
    return std::all_of(values.begin(), values.end(), [](Int v) { return v == 0; });
  }
};

}  // namespace

BettiTable parse_betti_text(const std::string& text, std::optional<Int> num_vars) {
  std::istringstream in(text);
  std::string line;

  std::vector<Int> positions;
  std::vector<DiagramRow> rows;
  std::vector<Int> totals;
  bool saw_totals = false;
  bool pending_ellipsis = false;

  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && is_dash_run(tokens[0])) continue;

    if (tokens.size() == 1 && tokens[0] == "...") {
      if (rows.empty() || !rows.back().all_zero()) {
        throw input_error("elided rows must be surrounded by zero rows");
      }
      pending_ellipsis = true;
      continue;
    }

    if (positions.empty()) {
      for (const auto& token : tokens) {
        Int p = 0;
        if (!parse_int(token, p) || p != static_cast<Int>(positions.size())) {
          throw input_error("diagram header must list positions 0, 1, 2, ...");
        }
        positions.push_back(p);
      }
      continue;
    }

    if (saw_totals) throw input_error("rows after the Tot line");
    if (tokens[0].empty() || tokens[0].back() != ':') {
      throw input_error("expected a row label ending in ':'");
    }
    const std::string label_token = tokens[0].substr(0, tokens[0].size() - 1);
    if (tokens.size() != positions.size() + 1) {
      throw input_error("row has the wrong number of columns");
    }

    std::vector<Int> values;
    for (std::size_t c = 1; c < tokens.size(); ++c) {
      if (tokens[c] == "-") {
        values.push_back(0);
        continue;
      }
      Int v = 0;
      if (!parse_int(tokens[c], v) || v < 1) {
        throw input_error("diagram entries are positive integers or '-'");
      }
      values.push_back(v);
    }

    if (label_token == "Tot") {
      if (pending_ellipsis) throw input_error("elided rows must be surrounded by zero rows");
      totals = std::move(values);
      saw_totals = true;
      continue;
    }

    DiagramRow row;
    if (!parse_int(label_token, row.label)) {
      throw input_error("row label is not an integer");
    }
    row.values = std::move(values);
    if (!rows.empty()) {
      const Int prev = rows.back().label;
      if (pending_ellipsis) {
        if (row.label <= prev) throw input_error("row labels must increase");
        if (!row.all_zero()) {
          throw input_error("elided rows must be surrounded by zero rows");
        }
      } else if (row.label != prev + 1) {
        throw input_error("row labels must be consecutive");
      }
    }
    pending_ellipsis = false;
    rows.push_back(std::move(row));
  }

  if (positions.empty()) throw input_error("empty diagram");
  if (rows.empty()) throw input_error("diagram has no rows");

  BettiTable table;
  table.num_vars = num_vars.value_or(static_cast<Int>(positions.size()) - 1);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      if (row.values[c] != 0) {
        table.add(static_cast<Int>(c), row.label + static_cast<Int>(c), row.values[c]);
      }
    }
  }

  if (saw_totals) {
    if (totals.size() != positions.size()) throw input_error("Tot row has the wrong width");
    for (std::size_t c = 0; c < totals.size(); ++c) {
      Int sum = 0;
      for (const auto& [key, mult] : table.entries) {
        if (key.first == static_cast<Int>(c)) sum += mult;
      }
      if (sum != totals[c]) {
        std::ostringstream msg;
        msg << "Tot row mismatch in position " << c << ": stated " << totals[c] << ", computed "
            << sum;
        throw input_error(msg.str());
      }
    }
  }
  return table;
}

std::string render_betti_text(const BettiTable& table) {
  const Int cols = table.max_position() + 1;
  Int min_label = 0;
  Int max_label = 0;
  for (const auto& [key, mult] : table.entries) {
    min_label = std::min(min_label, key.second - key.first);
    max_label = std::max(max_label, key.second - key.first);
  }

  std::ostringstream out;
  out << "    ";
  for (Int c = 0; c < cols; ++c) out << std::setw(5) << c;
  out << '\n';
  const std::string rule(static_cast<std::size_t>(5 * cols + 5), '-');
  out << rule << '\n';
  for (Int label = min_label; label <= max_label; ++label) {
    out << std::setw(3) << label << ':';
    for (Int c = 0; c < cols; ++c) {
      const Int v = table.beta(c, label + c);
      if (v == 0) {
        out << std::setw(5) << '-';
      } else {
        out << std::setw(5) << v;
      }
    }
    out << '\n';
  }
  out << rule << '\n';
  out << "Tot:";
  for (Int c = 0; c < cols; ++c) {
    Int sum = 0;
    for (const auto& [key, mult] : table.entries) {
      if (key.first == c) sum += mult;
    }
    out << std::setw(5) << sum;
  }
  out << '\n';
  return out.str();
}

std::string format_values(const std::vector<Int>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  out << ']';
  return out.str();
}

std::string format_hvector(const HVector& h) { return format_values(h.values()); }

std::string format_step(const BdlStep& step) {
  std::ostringstream out;
  out << '(' << step.d << ',' << step.a << ')';
  return out.str();
}

std::string format_sequence(const BdlSequence& sequence) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < sequence.steps.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_step(sequence.steps[i]);
  }
  out << ']';
  return out.str();
}

std::variant<BettiTable, HVector> parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw input_error("empty input");
  const char lead = text[first];
  if (lead == '{' || lead == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      if (lead == '{') {
        BettiTable table = j.get<BettiTable>();
        require_valid(table);
        return table;
      }
      return j.get<HVector>();
    } catch (const nlohmann::json::exception& e) {
      throw input_error(std::string("invalid JSON input: ") + e.what());
    }
  }
  BettiTable table = parse_betti_text(text);
  require_valid(table);
  return table;
}

void to_json(nlohmann::json& j, const BettiTable& table) {
  j = nlohmann::json::object();
  j["num_vars"] = table.num_vars;
  auto entries = nlohmann::json::array();
  for (const auto& [key, mult] : table.entries) {
    entries.push_back({key.first, key.second, mult});
  }
  j["entries"] = std::move(entries);
}

void from_json(const nlohmann::json& j, BettiTable& table) {
  table = BettiTable{};
  table.num_vars = j.at("num_vars").get<Int>();
  for (const auto& entry : j.at("entries")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw input_error("Betti table entries must be [position, twist, multiplicity]");
    }
    table.add(entry[0].get<Int>(), entry[1].get<Int>(), entry[2].get<Int>());
  }
}

void to_json(nlohmann::json& j, const HVector& h) { j = h.values(); }

void from_json(const nlohmann::json& j, HVector& h) {
  h = HVector{j.get<std::vector<Int>>()};
}

void to_json(nlohmann::json& j, const TwistMultiset& values) { j = values.expanded(); }

void from_json(const nlohmann::json& j, TwistMultiset& values) {
  values = TwistMultiset{j.get<std::vector<Int>>()};
}

void to_json(nlohmann::json& j, const ResolutionProfile& profile) {
  j = nlohmann::json{{"s", profile.s}, {"r", profile.r}};
}

void from_json(const nlohmann::json& j, ResolutionProfile& profile) {
  profile.s = j.at("s").get<TwistMultiset>();
  profile.r = j.at("r").get<TwistMultiset>();
}

void to_json(nlohmann::json& j, const BdlStep& step) { j = {step.d, step.a}; }

void from_json(const nlohmann::json& j, BdlStep& step) {
  if (!j.is_array() || j.size() != 2) {
    throw input_error("a basic double link is a pair [d, a]");
  }
  step.d = j[0].get<Int>();
  step.a = j[1].get<Int>();
}

void to_json(nlohmann::json& j, const BdlSequence& sequence) { j = sequence.steps; }

void from_json(const nlohmann::json& j, BdlSequence& sequence) {
  sequence.steps = j.get<std::vector<BdlStep>>();
}

void to_json(nlohmann::json& j, const NumericalCharacter& character) { j = character.values; }

void from_json(const nlohmann::json& j, NumericalCharacter& character) {
  character.values = j.get<std::vector<Int>>();
}

void to_json(nlohmann::json& j, const HilbertBurchMatrix& matrix) {
  j = nlohmann::json{{"rows", matrix.rows},
                     {"cols", matrix.cols},
                     {"diagonal", matrix.diagonal},
                     {"superdiagonal", matrix.superdiagonal}};
}

void from_json(const nlohmann::json& j, HilbertBurchMatrix& matrix) {
  matrix.rows = j.at("rows").get<Int>();
  matrix.cols = j.at("cols").get<Int>();
  matrix.diagonal = j.at("diagonal").get<std::vector<Int>>();
  matrix.superdiagonal = j.at("superdiagonal").get<std::vector<Int>>();
}

void to_json(nlohmann::json& j, const CanonicalSequence& canonical) {
  j = nlohmann::json{{"initial_degree", canonical.initial_degree},
                     {"b", canonical.b},
                     {"gs", canonical.gs},
                     {"shift", canonical.shift}};
}

void from_json(const nlohmann::json& j, CanonicalSequence& canonical) {
  canonical.initial_degree = j.at("initial_degree").get<Int>();
  canonical.b = j.at("b").get<Int>();
  canonical.gs = j.at("gs").get<std::vector<Int>>();
  canonical.shift = j.at("shift").get<Int>();
}

void to_json(nlohmann::json& j, const DiagonalReport& report) {
  auto entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"index", e.index}, {"s", e.s_value}, {"r", e.r_value}, {"value", e.value}});
  }
  auto negatives = nlohmann::json::array();
  for (const auto& n : report.negatives) {
    negatives.push_back({{"index", n.index}, {"degree", n.degree}, {"height", n.height}});
  }
  j = nlohmann::json{{"entries", std::move(entries)},
                     {"negatives", std::move(negatives)},
                     {"all_positive", report.all_positive()}};
}

void to_json(nlohmann::json& j, const AcmVerdict& verdict) {
  j = nlohmann::json{{"o_sequence", verdict.o_sequence},
                     {"counting", verdict.counting},
                     {"diagonal", verdict.diagonal},
                     {"verdict", verdict.verdict}};
  if (verdict.witness) {
    j["witness"] = *verdict.witness;
  } else {
    j["witness"] = nullptr;
  }
}

void to_json(nlohmann::json& j, const ProfileTraceEntry& entry) {
  j = nlohmann::json{{"profile", entry.profile}, {"diagonal", entry.report}, {"step", entry.step}};
}

void to_json(nlohmann::json& j, const ProfileMacaulification& result) {
  j = nlohmann::json{{"steps", result.steps},
                     {"final_profile", result.final_profile},
                     {"final_hvector", result.final_hvector},
                     {"trace", result.trace},
                     {"verdict", result.verdict}};
}

void to_json(nlohmann::json& j, const HVectorTraceEntry& entry) {
  j = nlohmann::json{{"step", entry.step}, {"after", entry.after}};
}

void to_json(nlohmann::json& j, const HVectorMacaulification& result) {
  j = nlohmann::json{{"steps", result.steps},
                     {"final_hvector", result.final_hvector},
                     {"trace", result.trace}};
}

void to_json(nlohmann::json& j, const CrossCheckReport& report) {
  j = nlohmann::json{{"by_profile", report.by_profile},
                     {"by_hvector", report.by_hvector},
                     {"deficit", report.deficit_value},
                     {"agree", report.agree}};
}

void to_json(nlohmann::json& j, const SmoothabilityReport& report) {
  j = nlohmann::json{{"gap_free", report.gap_free},
                     {"values_at_least_sigma", report.values_at_least_sigma},
                     {"sigma_large_enough", report.sigma_large_enough},
                     {"enough_at_sigma", report.enough_at_sigma},
                     {"enough_above_sigma", report.enough_above_sigma},
                     {"ok", report.ok()}};
}

void to_json(nlohmann::json& j, const CurveData& data) {
  j = nlohmann::json{{"n", data.n},
                     {"degree", data.degree},
                     {"genus", data.genus},
                     {"hvector", data.hvector},
                     {"hyperplane_hvector", data.hyperplane_hvector},
                     {"module_degree", data.module_degree},
                     {"shift", data.shift}};
}

void to_json(nlohmann::json& j, const FamilyConstruction& family) {
  j = nlohmann::json{{"n", family.n},
                     {"steps", family.steps},
                     {"minimal", family.minimal},
                     {"intermediate", family.intermediate},
                     {"intermediate_character", family.intermediate_character},
                     {"intermediate_smoothability", family.intermediate_smoothability},
                     {"result", family.result},
                     {"character", family.character},
                     {"smoothability", family.smoothability}};
}

void to_json(nlohmann::json& j, const NormalizationResult& result) {
  j = nlohmann::json{{"canonical", result.canonical}, {"swap_rows", result.swap_rows}};
}

}  // namespace nacm
