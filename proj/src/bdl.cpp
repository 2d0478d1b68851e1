#include "nacm/bdl.hpp"

#include <algorithm>
#include <sstream>

namespace nacm {

namespace {

void require_positive(BdlStep step) {
  if (step.d < 1 || step.a < 1) {
    std::ostringstream os;
    os << "basic double link type (" << step.d << ", " << step.a << ") must be positive";
    throw input_error(os.str());
  }
}

}  // namespace

Int BdlSequence::total_height() const {
  Int out = 0;
  for (const BdlStep& st : steps) out = checked_add(out, st.a);
  return out;
}

ResolutionProfile apply_bdl_profile(const ResolutionProfile& profile, BdlStep step) {
  require_positive(step);
  require_valid(profile);
  if (profile.r.empty() || step.d < profile.r.min()) {
    std::ostringstream os;
    os << "no form of degree " << step.d << " exists below the initial degree "
       << (profile.r.empty() ? 0 : profile.r.min());
    throw input_error(os.str());
  }
  ResolutionProfile out;
  out.r = profile.r.shifted(step.a);
  out.r.insert(step.d);
  out.s = profile.s.shifted(step.a);
  out.s.insert(checked_add(step.d, step.a));
  return out;
}

HVector apply_bdl_hvector(const HVector& h, BdlStep step) {
  require_positive(step);
  Int sigma = initial_degree(h);
  if (step.d < sigma) {
    std::ostringstream os;
    os << "no form of degree " << step.d << " exists below the initial degree " << sigma;
    throw input_error(os.str());
  }
  HVector ci = ci_hvector(step.d, step.a);
  Int top = std::max(h.last_degree() + step.a, ci.last_degree());
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(top) + 1);
  for (Int t = 0; t <= top; ++t)
    values.push_back(checked_add(h.at(t - step.a), ci.at(t)));
  return HVector(std::move(values));
}

BettiTable apply_bdl_table(const BettiTable& table, BdlStep step, bool f_is_minimal_generator) {
  require_positive(step);
  require_valid(table);
  Int generator_floor = 0;
  bool has_generators = false;
  for (const auto& [key, count] : table.entries) {
    if (key.first == 1) {
      generator_floor = has_generators ? std::min(generator_floor, key.second) : key.second;
      has_generators = true;
    }
  }
  if (!has_generators || step.d < generator_floor) {
    std::ostringstream os;
    os << "no form of degree " << step.d << " exists below the initial degree " << generator_floor;
    throw input_error(os.str());
  }
  BettiTable out;
  out.num_vars = table.num_vars;
  for (const auto& [key, count] : table.entries) {
    auto [position, twist] = key;
    out.add(position, position == 0 ? twist : checked_add(twist, step.a), count);
  }
  Int da = checked_add(step.d, step.a);
  out.add(1, step.d, 1);
  out.add(2, da, 1);
  if (f_is_minimal_generator) {
    if (out.beta(1, da) < 1 || out.beta(2, da) < 1)
      throw input_error("the ideal has no minimal generator of degree " + std::to_string(step.d));
    out.add(1, da, -1);
    out.add(2, da, -1);
  }
  return out;
}

bool default_minimal_generator_flag(const BettiTable& table, BdlStep step) {
  return table.beta(1, step.d) > 0;
}

std::pair<HVector, Int> apply_sequence(const HVector& h, const BdlSequence& sequence) {
  HVector current = h;
  Int shift = 0;
  for (std::size_t k = 0; k < sequence.steps.size(); ++k) {
    try {
      current = apply_bdl_hvector(current, sequence.steps[k]);
    } catch (const input_error& e) {
      std::ostringstream os;
      os << "step " << (k + 1) << ": " << e.what();
      throw input_error(os.str());
    }
    shift = checked_add(shift, sequence.steps[k].a);
  }
  return {current, shift};
}

BettiTable apply_sequence_table(const BettiTable& table, const BdlSequence& sequence) {
  BettiTable current = table;
  for (std::size_t k = 0; k < sequence.steps.size(); ++k) {
    try {
      current = apply_bdl_table(current, sequence.steps[k],
                                default_minimal_generator_flag(current, sequence.steps[k]));
    } catch (const input_error& e) {
      std::ostringstream os;
      os << "step " << (k + 1) << ": " << e.what();
      throw input_error(os.str());
    }
  }
  return current;
}

Int bdl_degree(Int degree, BdlStep step) {
  require_positive(step);
  return checked_add(checked_mul(step.a, step.d), degree);
}

}  // namespace nacm
