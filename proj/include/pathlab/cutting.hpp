#pragma once

// Cutting and pasting of square paths, cutting cycles, canonical
// representatives, the dinv ladder and the three-stretch shape.

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "pathlab/error.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/schedule.hpp"

namespace pathlab {

/// Cuts after the i-th E step (1 <= i <= n) and swaps the two pieces.
/// Empty when a transported decoration is no longer a contractible valley.
inline std::optional<DecoratedLabeledPath> psi(const DecoratedLabeledPath& p, int i) {
  const int n = p.size();
  if (i < 1 || i > n) throw Error(ErrorKind::DomainViolation, "psi index must lie in 1..n");
  const auto& steps = p.steps();
  size_t cut = 0;
  int east = 0, north_before = 0;
  for (; cut < steps.size(); ++cut) {
    if (steps[cut] == Step::E && ++east == i) break;
    if (steps[cut] == Step::N) ++north_before;
  }
  ++cut;

  RawPath raw;
  raw.steps.assign(steps.begin() + static_cast<std::ptrdiff_t>(cut), steps.end());
  raw.steps.insert(raw.steps.end(), steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(cut));
  raw.labels.assign(p.labels().begin() + north_before, p.labels().end());
  raw.labels.insert(raw.labels.end(), p.labels().begin(), p.labels().begin() + north_before);
  const int moved = n - north_before;
  for (int d : p.decorations()) raw.decorations.push_back(d > north_before ? d - north_before : d + moved);
  try {
    return validate(std::move(raw));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DecorationNotContractible) throw;
    return std::nullopt;
  }
}

struct CuttingCycle {
  std::vector<DecoratedLabeledPath> members;  // sorted, no duplicates
  DecoratedLabeledPath canonical;
};

/// Ordinal of the E step after which the canonical representative is cut.
/// Case 1: the E step just left of the leftmost undecorated N step on the
/// bottom diagonal. Case 2 (the bottom diagonal holds only decorated steps):
/// two steps cyclically left of the leftmost one. Cutting at the origin is
/// the same as cutting after the final E step, ordinal n.
inline int breaking_step(const DecoratedLabeledPath& p) {
  const int n = p.size();
  const auto a = area_word(p);
  const int bottom = *std::min_element(a.begin(), a.end());
  // E steps preceding each N step.
  std::vector<int> east_before;
  int east = 0;
  for (Step s : p.steps()) {
    if (s == Step::E)
      ++east;
    else
      east_before.push_back(east);
  }
  for (int i = 0; i < n; ++i)
    if (a[i] == bottom && !p.is_decorated(i + 1)) return east_before[i] == 0 ? n : east_before[i];
  for (int i = 0; i < n; ++i)
    if (a[i] == bottom) return east_before[i] - 1 <= 0 ? n : east_before[i] - 1;
  throw Error(ErrorKind::DomainViolation, "empty path has no breaking step");
}

inline DecoratedLabeledPath canonical_rep(const DecoratedLabeledPath& p) {
  auto r = psi(p, breaking_step(p));
  if (!r) throw Error(ErrorKind::DomainViolation, "cutting at the breaking step is not a valid path: " + to_text(p));
  return *r;
}

inline CuttingCycle cutting_cycle(const DecoratedLabeledPath& p) {
  CuttingCycle c;
  for (int i = 1; i <= p.size(); ++i)
    if (auto q = psi(p, i)) c.members.push_back(std::move(*q));
  std::sort(c.members.begin(), c.members.end());
  c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
  c.canonical = canonical_rep(p);
  return c;
}

/// Cycle members sorted by dinv; throws LadderViolation unless the dinv
/// values are exactly 0, 1, ..., size - 1.
inline std::vector<DecoratedLabeledPath> ordered_cycle(const DecoratedLabeledPath& p) {
  auto members = cutting_cycle(p).members;
  std::vector<std::pair<int, DecoratedLabeledPath>> keyed;
  for (auto& m : members) keyed.emplace_back(dinv(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<DecoratedLabeledPath> out;
  for (size_t i = 0; i < keyed.size(); ++i) {
    if (keyed[i].first != static_cast<int>(i))
      throw Error(ErrorKind::LadderViolation, "dinv values of the cycle of " + to_text(p) + " are not 0..size-1");
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

/// Geometric order of the cut points of a canonical representative: the
/// final E step first, then every E step not directly followed by a
/// decorated N step, by diagonal ascending and, within a diagonal, right to
/// left. An E step starting at (x, y) lies on diagonal y - 1 - x.
inline std::vector<int> horizontal_step_order(const DecoratedLabeledPath& p) {
  const int n = p.size();
  const auto& steps = p.steps();
  std::vector<std::tuple<int, int, int>> keyed;  // (diagonal, -x, ordinal)
  int x = 0, y = 0, east = 0, north = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::N) {
      ++north;
      ++y;
      continue;
    }
    ++east;
    const bool before_decorated = i + 1 < steps.size() && steps[i + 1] == Step::N && p.is_decorated(north + 1);
    if (east != n && !before_decorated) keyed.emplace_back(y - 1 - x, -x, east);
    ++x;
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order{n};
  for (const auto& [d, mx, ordinal] : keyed) order.push_back(ordinal);
  return order;
}

/// Half-open 0-based ranges of the step sequence.
struct Stretches {
  Run first;
  Run second;
  Run third;
  friend bool operator==(const Stretches&, const Stretches&) = default;
};

/// Splits a schedule-one path into its three stretches. The first and third
/// hold only decorated N steps (on negative, respectively nonnegative,
/// diagonals); the second runs from the first undecorated N step through
/// the E step after the last one, with no decorated N step, no two
/// consecutive E steps and no attack pair inside it.
inline Stretches shape_stretches(const DecoratedLabeledPath& p) {
  const auto& steps = p.steps();
  const auto a = area_word(p);
  const int len = static_cast<int>(steps.size());
  std::vector<int> north_at(static_cast<size_t>(len), -1);  // step -> 0-based N index
  int first = -1, last = -1;
  for (int i = 0, north = 0; i < len; ++i) {
    if (steps[i] != Step::N) continue;
    north_at[i] = north;
    if (!p.is_decorated(north + 1)) {
      if (first < 0) first = i;
      last = i;
    }
    ++north;
  }
  if (first < 0) throw Error(ErrorKind::ShapeViolation, "no undecorated N step");
  const Stretches s{{0, first}, {first, last + 2}, {last + 2, len}};
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::ShapeViolation, why + ": " + to_text(p)); };

  for (int i = 0; i < len; ++i) {
    if (north_at[i] < 0) continue;
    const int v = north_at[i];
    const bool dec = p.is_decorated(v + 1);
    if (i < s.second.begin && (!dec || a[v] >= 0)) fail("first stretch needs decorated steps on negative diagonals");
    if (i >= s.third.begin && (!dec || a[v] < 0)) fail("third stretch needs decorated steps on nonnegative diagonals");
    if (i >= s.second.begin && i < s.third.begin && dec) fail("decorated step inside the second stretch");
  }
  for (int i = s.second.begin; i + 1 < s.second.end; ++i)
    if (steps[i] == Step::E && steps[i + 1] == Step::E) fail("two consecutive E steps inside the second stretch");
  const int lo = north_at[s.second.begin];
  const int hi = north_at[last];
  for (const auto& ap : attack_pairs(p))
    if (ap.i - 1 >= lo && ap.j - 1 <= hi) fail("attack pair inside the second stretch");
  return s;
}

/// Canonical representatives additionally keep the whole first stretch on
/// diagonal -1.
inline bool has_canonical_shape(const DecoratedLabeledPath& p) {
  const auto s = shape_stretches(p);
  const auto a = area_word(p);
  int north = 0;
  for (int i = 0; i < s.first.end; ++i)
    if (p.steps()[i] == Step::N && a[north++] != -1) return false;
  return true;
}

inline std::vector<DecoratedLabeledPath> sched_one_members(const CuttingCycle& c) {
  std::vector<DecoratedLabeledPath> out;
  for (const auto& m : c.members)
    if (all_ones(sched(m))) out.push_back(m);
  return out;
}

/// Undecorated N steps on the main diagonal.
inline int undecorated_on_zero_diagonal(const DecoratedLabeledPath& p) {
  const auto a = area_word(p);
  int k = 0;
  for (int i = 0; i < p.size(); ++i)
    if (a[i] == 0 && !p.is_decorated(i + 1)) ++k;
  return k;
}

}  // namespace pathlab
