#include "nacm/macaulify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nacm {

namespace {

HilbertBurchMatrix build_witness(const std::vector<Int>& s, const std::vector<Int>& r) {
  HilbertBurchMatrix m;
  m.rows = static_cast<Int>(s.size());
  m.cols = static_cast<Int>(r.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    m.diagonal.push_back(s[i] - r[i]);
    m.superdiagonal.push_back(s[i] - r[i + 1]);
  }
  return m;
}

std::string render_profile(const ResolutionProfile& p) {
  return "s = " + to_string(p.s) + ", r = " + to_string(p.r);
}

}  // namespace

AcmVerdict check_numerically_acm(const ResolutionProfile& profile) {
  require_valid(profile);
  for (const auto& [value, count] : profile.s.runs())
    if (profile.r.multiplicity(value) > 0)
      throw input_error("s and r share the value " + std::to_string(value) +
                        "; remove common pairs first");
  if (profile.s.empty())
    throw defect_error("valid profile with empty s");
  if (profile.s.min() <= profile.r.min()) {
    std::ostringstream os;
    os << "hypothesis violation: min(s) = " << profile.s.min()
       << " must exceed min(r) = " << profile.r.min();
    throw input_error(os.str());
  }

  AcmVerdict v;
  v.o_sequence = is_o_sequence_codim2(hvector_from_profile(profile));

  v.counting = true;
  Int top = std::max(profile.s.max(), profile.r.max());
  for (Int k = profile.r.min(); k <= top; ++k) {
    if (profile.r.count_at_most(k) <= profile.s.count_at_most(k)) {
      v.counting = false;
      break;
    }
  }

  const std::vector<Int> s = profile.s.expanded();
  const std::vector<Int> r = profile.r.expanded();
  v.diagonal = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < r[i]) v.diagonal = false;

  if (v.o_sequence != v.counting || v.counting != v.diagonal) {
    std::ostringstream os;
    os << "equivalent criteria disagree on " << render_profile(profile)
       << ": o_sequence=" << v.o_sequence << " counting=" << v.counting
       << " diagonal=" << v.diagonal;
    throw defect_error(os.str());
  }
  v.verdict = v.diagonal;
  if (v.verdict) v.witness = build_witness(s, r);
  return v;
}

HilbertBurchMatrix hilbert_burch_witness(const ResolutionProfile& profile) {
  AcmVerdict v = check_numerically_acm(profile);
  if (!v.verdict)
    throw input_error("profile is not numerically ACM; no Hilbert-Burch witness exists");
  HilbertBurchMatrix m = *v.witness;
  for (Int e : m.diagonal)
    if (e <= 0) throw defect_error("witness diagonal exponent not positive");
  for (Int e : m.superdiagonal)
    if (e <= 0) throw defect_error("witness superdiagonal exponent not positive");

  // The maximal minor omitting column j is the monomial
  // prod_{i<j} x0^diag[i] * prod_{i>=j} x1^super[i]; its degree must be r_j,
  // and regenerating the h-vector from (s, minor degrees) must reproduce the
  // input's h-vector.
  const std::vector<Int> s = profile.s.expanded();
  const std::vector<Int> r = profile.r.expanded();
  ResolutionProfile regenerated;
  regenerated.s = profile.s;
  for (std::size_t j = 0; j < r.size(); ++j) {
    Int degree = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      degree = checked_add(degree, i < j ? m.diagonal[i] : m.superdiagonal[i]);
    if (degree != r[j]) throw defect_error("witness minor degree mismatch");
    regenerated.r.insert(degree);
  }
  if (hvector_from_profile(regenerated) != hvector_from_profile(profile))
    throw defect_error("witness resolution does not reproduce the h-vector");
  return m;
}

ProfileMacaulification macaulify_profile(const ResolutionProfile& profile) {
  require_valid(profile);
  ProfileMacaulification out;
  ResolutionProfile current = remove_common_pairs(profile);
  const Int expected = static_cast<Int>(diagonal_report(current).negatives.size());
  for (Int iteration = 0;; ++iteration) {
    if (iteration > expected)
      throw defect_error("diagonal macaulification exceeded its step budget");
    DiagonalReport report = diagonal_report(current);
    if (report.negatives.empty()) {
      out.final_profile = current;
      break;
    }
    const DiagonalReport::Negative& pick = report.negatives.front();
    BdlStep step{pick.degree, pick.height};
    out.trace.push_back({current, report, step});
    out.steps.steps.push_back(step);
    current = remove_common_pairs(apply_bdl_profile(current, step));
  }
  if (static_cast<Int>(out.steps.steps.size()) != expected)
    throw defect_error("step count differs from the initial negative-entry count");
  out.final_hvector = hvector_from_profile(out.final_profile);
  out.verdict = check_numerically_acm(out.final_profile);
  if (!out.verdict.verdict)
    throw defect_error("diagonal macaulification terminated on a non-ACM profile");
  return out;
}

std::pair<ProfileMacaulification, BettiTable> macaulify_table(const BettiTable& table) {
  require_valid(table);
  ProfileMacaulification result = macaulify_profile(profile_from_table(table));
  BettiTable transformed = apply_sequence_table(table, result.steps);
  HVector via_table = hvector_from_profile(remove_common_pairs(profile_from_table(transformed)));
  if (via_table != result.final_hvector)
    throw defect_error("transformed table disagrees with the profile route");
  return {std::move(result), std::move(transformed)};
}

HVectorMacaulification macaulify_hvector(const HVector& h) {
  HVectorMacaulification out;
  const Int delta = deficit(h);
  HVector current = h;
  Int last_degree = 0;
  while (!is_o_sequence_codim2(current)) {
    Int e = current.last_degree();
    Int pick = -1;
    for (Int i = 1; i <= e; ++i) {
      if (current.at(i) <= i && current.at(i) < current.at(i + 1)) {
        pick = i;
        break;
      }
    }
    if (pick < 0)
      throw input_error("h-vector grows above the staircase and cannot be repaired");
    if (static_cast<Int>(out.steps.steps.size()) >= delta)
      throw defect_error("deficit macaulification exceeded its step budget");
    BdlStep step{pick + 2, 1};
    if (step.d <= last_degree)
      throw defect_error("deficit macaulification degrees failed to increase");
    last_degree = step.d;
    current = apply_bdl_hvector(current, step);
    out.steps.steps.push_back(step);
    out.trace.push_back({step, current});
  }
  if (static_cast<Int>(out.steps.steps.size()) != delta)
    throw defect_error("step count differs from the deficit");
  out.final_hvector = current;
  return out;
}

namespace {

std::string render_steps(const BdlSequence& seq) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    if (i) os << ' ';
    os << '(' << seq.steps[i].d << ',' << seq.steps[i].a << ')';
  }
  return os.str();
}

}  // namespace

CrossCheckReport cross_check(const ResolutionProfile& profile) {
  CrossCheckReport report;
  report.by_profile = macaulify_profile(profile);
  report.by_hvector = macaulify_hvector(hvector_from_profile(profile));
  report.deficit_value = deficit(hvector_from_profile(profile));
  bool same_hvector = report.by_profile.final_hvector == report.by_hvector.final_hvector;
  Int height1 = report.by_profile.steps.total_height();
  Int height2 = report.by_hvector.steps.total_height();
  bool same_height = height1 == height2 && height2 == report.deficit_value;
  report.agree = same_hvector && same_height;
  if (!report.agree) {
    std::ostringstream os;
    os << "the two macaulification routes disagree: diagonal steps ["
       << render_steps(report.by_profile.steps) << "] with total height " << height1
       << ", deficit steps [" << render_steps(report.by_hvector.steps)
       << "] with total height " << height2 << ", deficit " << report.deficit_value;
    throw defect_error(os.str());
  }
  return report;
}

namespace {

// Numerical shape of a general union of complete intersections of types
// (a, b) and (c, d): generators at the four cross products plus one at the
// total degree, syzygies at the four triple sums. Balanced, min(s) > min(r),
// and almost never an O-sequence.
ResolutionProfile ci_union(Int a, Int b, Int c, Int d) {
  ResolutionProfile p;
  for (Int v : {a + c, a + d, b + c, b + d, a + b + c + d}) p.r.insert(v);
  for (Int v : {a + b + c, a + b + d, a + c + d, b + c + d}) p.s.insert(v);
  return p;
}

ResolutionProfile random_acm_base(std::mt19937_64& rng, const InstanceParams& params) {
  auto pick = [&rng](Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  };
  Int nu1 = pick(1, std::max<Int>(1, params.max_syzygies));  // |s|
  Int floor = std::max<Int>(2, nu1);
  Int g = pick(floor, floor + 3);                            // min(r), split below
  std::vector<Int> r(static_cast<std::size_t>(nu1) + 1);
  r.back() = g;
  for (std::size_t i = r.size() - 1; i-- > 0;)
    r[i] = r[i + 1] + pick(0, params.max_spread);
  std::vector<Int> gaps(static_cast<std::size_t>(nu1), 1);
  for (Int extra = g - nu1; extra > 0; --extra)
    gaps[static_cast<std::size_t>(pick(0, nu1 - 1))] += 1;
  ResolutionProfile p;
  for (Int v : r) p.r.insert(v);
  for (std::size_t i = 0; i < gaps.size(); ++i) p.s.insert(r[i] + gaps[i]);
  return p;
}

// Undoes one basic double link: removes d from r and d+a from s, then shifts
// everything down by a. Admissible only if the result keeps r >= 1, s >= 2,
// and min(s) > min(r) so the criteria stay applicable.
bool try_inverse_link(ResolutionProfile& profile, std::mt19937_64& rng) {
  if (profile.s.total() < 2) return false;
  struct Move {
    Int d;
    Int e;
  };
  std::vector<Move> moves;
  for (const auto& [rv, rc] : profile.r.runs()) {
    for (const auto& [sv, sc] : profile.s.runs()) {
      if (sv <= rv) continue;
      Int a = sv - rv;
      ResolutionProfile probe = profile;
      probe.r.remove(rv);
      probe.s.remove(sv);
      if (probe.r.empty() || probe.s.empty()) continue;
      if (probe.r.min() - a < 1 || probe.s.min() - a < 2) continue;
      if (probe.s.min() <= probe.r.min()) continue;
      moves.push_back({rv, sv});
    }
  }
  if (moves.empty()) return false;
  const Move& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  Int a = m.e - m.d;
  profile.r.remove(m.d);
  profile.s.remove(m.e);
  profile.r = profile.r.shifted(-a);
  profile.s = profile.s.shifted(-a);
  return true;
}

}  // namespace

ResolutionProfile random_instance(std::uint64_t seed, const InstanceParams& params) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  };

  // Drains random syzygy degrees toward the smallest admissible value and
  // piles the mass on others, typically pushing the diagonal negative.
  auto shuffle_syzygies = [&pick](ResolutionProfile p) {
    std::vector<Int> s = p.s.expanded();
    Int floor = p.r.min() + 1;
    int moved = 0;
    for (int t = 0; t < 8 && moved < 3 && s.size() >= 2; ++t) {
      std::size_t i = static_cast<std::size_t>(pick(0, static_cast<Int>(s.size()) - 1));
      std::size_t j = static_cast<std::size_t>(pick(0, static_cast<Int>(s.size()) - 1));
      Int room = s[j] - floor;
      if (i == j || room <= 0) continue;
      Int delta = pick(1, room);
      s[i] += delta;
      s[j] -= delta;
      ++moved;
    }
    p.s = TwistMultiset(s);
    return p;
  };

  ResolutionProfile profile;
  switch (pick(0, 5)) {
    case 0:  // plain staircase, ACM as built
      profile = random_acm_base(rng, params);
      break;
    case 1: {  // staircase walked backwards while inverse moves last
      profile = random_acm_base(rng, params);
      Int undo = pick(1, std::max<Int>(1, params.perturbations));
      for (Int k = 0; k < undo; ++k)
        if (!try_inverse_link(profile, rng)) break;
      break;
    }
    case 2:
    case 3:  // staircase with syzygy mass shuffled off the diagonal
      profile = shuffle_syzygies(random_acm_base(rng, params));
      break;
    case 4:  // union of two complete intersections of random types
      profile = ci_union(pick(1, 5), pick(1, 5), pick(1, 5), pick(1, 5));
      break;
    default:  // shuffled union
      profile = shuffle_syzygies(ci_union(pick(1, 5), pick(1, 5), pick(1, 5), pick(1, 5)));
      break;
  }
  Int forward = pick(0, 2);
  for (Int k = 0; k < forward; ++k) {
    Int d = pick(profile.r.min(), profile.r.min() + params.max_spread);
    Int a = pick(1, 3);
    profile = apply_bdl_profile(profile, {d, a});
  }

  if (auto v = validate(profile))
    throw defect_error("instance generator produced an invalid profile: " + v->detail);
  HVector h = hvector_from_profile(profile);
  if (h.at(1) > 2)
    throw defect_error("instance generator produced h(1) > 2");
  if (profile.s.min() <= profile.r.min())
    throw defect_error("instance generator produced min(s) <= min(r)");
  return profile;
}

}  // namespace nacm
