#include "nacm/betti.hpp"

#include <algorithm>
#include <sstream>

namespace nacm {

TwistMultiset::TwistMultiset(const std::vector<Int>& values) {
  for (Int v : values) insert(v);
}

void TwistMultiset::insert(Int value, Int count) {
  if (count <= 0) {
    if (count == 0) return;
    throw defect_error("TwistMultiset::insert with negative count");
  }
  auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                             [](const std::pair<Int, Int>& run, Int v) { return run.first > v; });
  if (it != runs_.end() && it->first == value) {
    it->second = checked_add(it->second, count);
  } else {
    runs_.insert(it, {value, count});
  }
}

bool TwistMultiset::remove(Int value, Int count) {
  if (count <= 0) return count == 0;
  auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                             [](const std::pair<Int, Int>& run, Int v) { return run.first > v; });
  if (it == runs_.end() || it->first != value || it->second < count) return false;
  it->second -= count;
  if (it->second == 0) runs_.erase(it);
  return true;
}

Int TwistMultiset::total() const {
  Int n = 0;
  for (const auto& [v, c] : runs_) n = checked_add(n, c);
  return n;
}

Int TwistMultiset::sum() const {
  Int n = 0;
  for (const auto& [v, c] : runs_) n = checked_add(n, checked_mul(v, c));
  return n;
}

Int TwistMultiset::min() const {
  if (runs_.empty()) throw defect_error("min of empty multiset");
  return runs_.back().first;
}

Int TwistMultiset::max() const {
  if (runs_.empty()) throw defect_error("max of empty multiset");
  return runs_.front().first;
}

Int TwistMultiset::multiplicity(Int value) const {
  auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                             [](const std::pair<Int, Int>& run, Int v) { return run.first > v; });
  if (it != runs_.end() && it->first == value) return it->second;
  return 0;
}

Int TwistMultiset::count_at_most(Int k) const {
  Int n = 0;
  for (const auto& [v, c] : runs_)
    if (v <= k) n = checked_add(n, c);
  return n;
}

std::vector<Int> TwistMultiset::expanded() const {
  std::vector<Int> out;
  for (const auto& [v, c] : runs_) {
    if (c > static_cast<Int>(1) << 24) throw input_error("multiplicity too large to expand");
    out.insert(out.end(), static_cast<std::size_t>(c), v);
  }
  return out;
}

TwistMultiset TwistMultiset::shifted(Int delta) const {
  TwistMultiset out;
  out.runs_ = runs_;
  for (auto& [v, c] : out.runs_) v = checked_add(v, delta);
  return out;
}

std::string to_string(const TwistMultiset& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, c] : m.runs()) {
    if (!first) os << ", ";
    first = false;
    os << v;
    if (c > 1) os << '^' << c;
  }
  os << '}';
  return os.str();
}

Int BettiTable::beta(Int position, Int twist) const {
  auto it = entries.find({position, twist});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(Int position, Int twist, Int count) {
  if (count == 0) return;
  auto key = std::make_pair(position, twist);
  auto [it, inserted] = entries.try_emplace(key, 0);
  it->second = checked_add(it->second, count);
  if (it->second == 0) entries.erase(it);
}

Int BettiTable::max_position() const {
  Int m = 0;
  for (const auto& [key, c] : entries) m = std::max(m, key.first);
  return m;
}

Int BettiTable::max_twist() const {
  Int m = 0;
  for (const auto& [key, c] : entries) m = std::max(m, key.second);
  return m;
}

namespace {

// Profile extraction without validation; positions >= 2 even feed s,
// odd positions feed r, position 0 is the quotient itself and is skipped.
ResolutionProfile extract_profile(const BettiTable& table) {
  ResolutionProfile p;
  for (const auto& [key, count] : table.entries) {
    auto [position, twist] = key;
    if (position <= 0 || count <= 0) continue;
    if (position % 2 == 0)
      p.s.insert(twist, count);
    else
      p.r.insert(twist, count);
  }
  return p;
}

}  // namespace

std::optional<Violation> validate(const BettiTable& table) {
  if (table.num_vars < 1)
    return Violation{"num-vars", "num_vars must be a positive integer"};
  for (const auto& [key, count] : table.entries) {
    auto [position, twist] = key;
    std::ostringstream at;
    at << "entry (" << position << ", " << twist << ")";
    if (count <= 0) return Violation{"multiplicity", at.str() + " has non-positive multiplicity"};
    if (position < 0 || twist < 0) return Violation{"index-range", at.str() + " has a negative index"};
    if (position == 0 && twist != 0)
      return Violation{"unit-position", at.str() + " sits at homological position 0"};
    if (position > table.num_vars)
      return Violation{"length-bound", at.str() + " exceeds position bound num_vars"};
  }
  if (table.beta(0, 0) != 1)
    return Violation{"unit-position", "beta(0,0) must equal 1"};
  ResolutionProfile p = extract_profile(table);
  if (auto v = validate(p)) return v;
  return std::nullopt;
}

std::optional<Violation> validate(const ResolutionProfile& profile) {
  if (!profile.s.empty() && profile.s.min() < 1)
    return Violation{"positive-twists", "s contains a non-positive value"};
  if (!profile.r.empty() && profile.r.min() < 1)
    return Violation{"positive-twists", "r contains a non-positive value"};
  if (profile.r.total() != profile.s.total() + 1) {
    std::ostringstream os;
    os << "|r| = " << profile.r.total() << " but |s| + 1 = " << profile.s.total() + 1;
    return Violation{"rank-balance", os.str()};
  }
  if (profile.r.sum() != profile.s.sum()) {
    std::ostringstream os;
    os << "sum(r) = " << profile.r.sum() << " but sum(s) = " << profile.s.sum();
    return Violation{"degree-balance", os.str()};
  }
  return std::nullopt;
}

void require_valid(const BettiTable& table) {
  if (auto v = validate(table))
    throw input_error("invalid Betti table [" + v->invariant + "]: " + v->detail);
}

void require_valid(const ResolutionProfile& profile) {
  if (auto v = validate(profile))
    throw input_error("invalid profile [" + v->invariant + "]: " + v->detail);
}

ResolutionProfile profile_from_table(const BettiTable& table) {
  require_valid(table);
  return extract_profile(table);
}

ResolutionProfile remove_common_pairs(ResolutionProfile profile) {
  ResolutionProfile out;
  // One pass over both run lists: min(mult_s, mult_r) copies cancel.
  for (const auto& [value, count] : profile.s.runs()) {
    Int other = profile.r.multiplicity(value);
    Int keep = count - std::min(count, other);
    if (keep > 0) out.s.insert(value, keep);
  }
  for (const auto& [value, count] : profile.r.runs()) {
    Int other = profile.s.multiplicity(value);
    Int keep = count - std::min(count, other);
    if (keep > 0) out.r.insert(value, keep);
  }
  return out;
}

DiagonalReport diagonal_report(const ResolutionProfile& profile) {
  require_valid(profile);
  for (const auto& [value, count] : profile.s.runs()) {
    if (profile.r.multiplicity(value) > 0) {
      std::ostringstream os;
      os << "s and r share the value " << value << "; remove common pairs first";
      throw input_error(os.str());
    }
  }
  DiagonalReport report;
  const std::vector<Int> s = profile.s.expanded();
  const std::vector<Int> r = profile.r.expanded();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Int idx = static_cast<Int>(i) + 1;
    report.entries.push_back({idx, s[i], r[i], s[i] - r[i]});
  }
  // r is non-increasing, so walking the diagonal bottom-up lists negatives
  // by non-decreasing r value with bottom-right entries first on ties.
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] < r[i]) {
      Int idx = static_cast<Int>(i) + 1;
      report.negatives.push_back({idx, r[i], r[i] - s[i]});
    }
  }
  return report;
}

BettiTable numerical_reduction(BettiTable table) {
  require_valid(table);
  for (;;) {
    bool cancelled = false;
    // entries is ordered by (position, twist), which is exactly the
    // lowest-position-then-lowest-twist scan the cancellation order wants.
    for (const auto& [key, count] : table.entries) {
      auto [position, twist] = key;
      Int above = table.beta(position + 1, twist);
      if (above > 0) {
        Int c = std::min(count, above);
        table.add(position, twist, -c);
        table.add(position + 1, twist, -c);
        cancelled = true;
        break;
      }
    }
    if (!cancelled) return table;
  }
}

bool numerically_equivalent(const BettiTable& a, const BettiTable& b) {
  return numerical_reduction(a).entries == numerical_reduction(b).entries;
}

Int alternating_sum(const BettiTable& table, Int twist) {
  Int out = 0;
  for (const auto& [key, count] : table.entries) {
    if (key.second != twist) continue;
    out = checked_add(out, key.first % 2 == 0 ? count : -count);
  }
  return out;
}

}  // namespace nacm
