#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "nacm/betti.hpp"
#include "nacm/bdl.hpp"
#include "nacm/curves.hpp"
#include "nacm/hvector.hpp"
#include "nacm/macaulify.hpp"
#include "nacm/sequences.hpp"

namespace nacm {

/// Reads the row/column diagram layout used by computer algebra systems:
/// a header of homological positions starting at 0, rows labeled by
/// (twist - position) with "-" for zero, an optional "Tot:" checksum row,
/// and "..." standing for elided all-zero rows. Throws input_error on
/// malformed layout or a Tot mismatch. num_vars defaults to the largest
/// position when not given.
BettiTable parse_betti_text(const std::string& text, std::optional<Int> num_vars = {});

/// Canonical diagram layout; parse_betti_text inverts it exactly.
std::string render_betti_text(const BettiTable& table);

/// Bracketed list: [1, 2, 3, -5, -1].
std::string format_hvector(const HVector& h);
std::string format_values(const std::vector<Int>& values);
std::string format_step(const BdlStep& step);
std::string format_sequence(const BdlSequence& sequence);

/// Auto-detects the input kind: '{' starts a JSON Betti table, '[' a JSON
/// h-vector, anything else a text diagram. The table is validated.
std::variant<BettiTable, HVector> parse_input(const std::string& text);

void to_json(nlohmann::json& j, const BettiTable& table);
void from_json(const nlohmann::json& j, BettiTable& table);
void to_json(nlohmann::json& j, const HVector& h);
void from_json(const nlohmann::json& j, HVector& h);
void to_json(nlohmann::json& j, const TwistMultiset& values);
void from_json(const nlohmann::json& j, TwistMultiset& values);
void to_json(nlohmann::json& j, const ResolutionProfile& profile);
void from_json(const nlohmann::json& j, ResolutionProfile& profile);
void to_json(nlohmann::json& j, const BdlStep& step);
void from_json(const nlohmann::json& j, BdlStep& step);
void to_json(nlohmann::json& j, const BdlSequence& sequence);
void from_json(const nlohmann::json& j, BdlSequence& sequence);
void to_json(nlohmann::json& j, const NumericalCharacter& character);
void from_json(const nlohmann::json& j, NumericalCharacter& character);
void to_json(nlohmann::json& j, const HilbertBurchMatrix& matrix);
void from_json(const nlohmann::json& j, HilbertBurchMatrix& matrix);
void to_json(nlohmann::json& j, const CanonicalSequence& canonical);
void from_json(const nlohmann::json& j, CanonicalSequence& canonical);

void to_json(nlohmann::json& j, const DiagonalReport& report);
void to_json(nlohmann::json& j, const AcmVerdict& verdict);
void to_json(nlohmann::json& j, const ProfileTraceEntry& entry);
void to_json(nlohmann::json& j, const ProfileMacaulification& result);
void to_json(nlohmann::json& j, const HVectorTraceEntry& entry);
void to_json(nlohmann::json& j, const HVectorMacaulification& result);
void to_json(nlohmann::json& j, const CrossCheckReport& report);
void to_json(nlohmann::json& j, const SmoothabilityReport& report);
void to_json(nlohmann::json& j, const CurveData& data);
void to_json(nlohmann::json& j, const FamilyConstruction& family);
void to_json(nlohmann::json& j, const NormalizationResult& result);

}  // namespace nacm
