#pragma once

// Paths from shifted diagonal words, and the classes of schedule-one paths
// under cutting and pasting.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "pathlab/adr.hpp"
#include "pathlab/cutting.hpp"
#include "pathlab/enumeration.hpp"
#include "pathlab/error.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/schedule.hpp"

namespace pathlab {

/// The unique path with shifted diagonal word (word, s), assuming its
/// schedule word is all ones (ScheduleNotOne otherwise). Built in three
/// stretches: decorated steps on negative diagonals, then the undecorated
/// steps diagonal by diagonal (a pair on one diagonal goes larger label
/// first), then decorated steps on nonnegative diagonals.
inline DecoratedLabeledPath path_from_sdw(const DecoratedPermutation& word, int s) {
  const ShiftedDiagonalWord sdw{word, s};
  if (word.size() == 0 || !all_ones(schedule_numbers(sdw)))
    throw Error(ErrorKind::ScheduleNotOne, "schedule word of (" + to_text(word) + ", " + std::to_string(s) + ") is not all ones");

  std::map<int, std::vector<int>> undecorated, decorated;  // diagonal -> labels
  const auto runs = decreasing_runs(word);
  for (int r = 0; r < static_cast<int>(runs.size()); ++r)
    for (int p = runs[r].begin; p < runs[r].end; ++p)
      (word.decorated(p + 1) ? decorated : undecorated)[r - s].push_back(word.at(p + 1));
  for (auto& [d, v] : decorated) std::sort(v.begin(), v.end());
  const int lo = undecorated.begin()->first;
  const int hi = undecorated.rbegin()->first;

  RawPath raw;
  auto north = [&](int label, bool dec) {
    raw.steps.push_back(Step::N);
    raw.labels.push_back(label);
    if (dec) raw.decorations.push_back(static_cast<int>(raw.labels.size()));
  };
  auto east = [&] { raw.steps.push_back(Step::E); };
  auto valleys_on = [&](int d) {
    auto it = decorated.find(d);
    if (it == decorated.end()) return;
    for (int label : it->second) {
      east();
      north(label, true);
    }
  };

  for (int d = -1; d >= lo - 1; --d) {
    if (d != -1) east();
    valleys_on(d);
  }
  for (int d = lo; d <= hi; ++d) {
    const auto& u = undecorated[d];
    if (u.size() > 2) throw std::logic_error("pathlab: more than two undecorated letters on a diagonal");
    north(std::max(u.front(), u.back()), false);
    if (u.size() == 2) {
      east();
      north(std::min(u.front(), u.back()), false);
    }
  }
  for (int d = hi; d >= 0; --d) {
    valleys_on(d);
    east();
  }

  auto p = validate(std::move(raw));
  if (!(diagonal_word(p) == sdw)) throw std::logic_error("pathlab: path_from_sdw produced " + to_text(p));
  return p;
}

struct ClassSummary {
  DecoratedPermutation diagonal_word;
  int area = 0;
  int size = 0;
  int member_count_sched1 = 0;
  DecoratedLabeledPath canonical;
};

/// One summary per cutting cycle containing a schedule-one path of
/// stLSQ(n) with k decorations, sorted by diagonal word.
inline std::vector<ClassSummary> classes(int n, int k, int jobs = 1) {
  using Seeds = std::vector<DecoratedLabeledPath>;
  auto seeds = fold_paths<Seeds>(
      {n, k, PathKind::Square}, jobs, [] { return Seeds(); },
      [](Seeds& acc, const DecoratedLabeledPath& p) {
        if (all_ones(sched(p))) acc.push_back(p);
      },
      [](Seeds& a, Seeds b) { a.insert(a.end(), b.begin(), b.end()); });

  std::map<DecoratedLabeledPath, ClassSummary> by_canonical;
  for (const auto& p : seeds) {
    const auto canon = canonical_rep(p);
    auto [it, inserted] = by_canonical.try_emplace(canon);
    if (!inserted) continue;
    const auto cycle = cutting_cycle(p);
    auto& c = it->second;
    c.diagonal_word = diagonal_word(p).word;
    c.area = area(p);
    c.size = static_cast<int>(cycle.members.size());
    c.member_count_sched1 = static_cast<int>(sched_one_members(cycle).size());
    c.canonical = canon;
  }
  std::vector<ClassSummary> out;
  for (auto& [canon, c] : by_canonical) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.diagonal_word < b.diagonal_word; });
  return out;
}

/// Class -> diagonal word is a bijection onto ADR_{n,k} taking area to revmaj.
inline bool theorem_equivalence_check(int n, int k, int jobs = 1) {
  const auto cls = classes(n, k, jobs);
  const auto adrs = enumerate_adrs(n, k);
  if (cls.size() != adrs.size()) return false;
  for (size_t i = 0; i < cls.size(); ++i) {
    if (!(cls[i].diagonal_word == adrs[i])) return false;
    if (cls[i].area != revmaj(adrs[i])) return false;
  }
  return true;
}

}  // namespace pathlab
