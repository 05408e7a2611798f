#pragma once

// Diagonal words, decreasing and cyclic runs, and schedule numbers.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathlab/error.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/poly.hpp"

namespace pathlab {

/// A permutation of {1..n} with a set of decorated positions.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;

  /// Throws DomainViolation unless `values` is a permutation of {1..n}.
  explicit DecoratedPermutation(std::vector<int> values, std::vector<bool> decorated = {})
      : values_(std::move(values)), decorated_(std::move(decorated)) {
    if (decorated_.empty()) decorated_.assign(values_.size(), false);
    if (decorated_.size() != values_.size()) throw Error(ErrorKind::DomainViolation, "decoration mask has wrong length");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > size() || seen[static_cast<size_t>(v)])
        throw Error(ErrorKind::DomainViolation, "not a permutation of 1..n");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const noexcept { return values_; }
  /// 1-based accessors.
  int at(int i) const { return values_.at(static_cast<size_t>(i - 1)); }
  bool decorated(int i) const { return decorated_.at(static_cast<size_t>(i - 1)); }
  void set_decorated(int i, bool d) { decorated_.at(static_cast<size_t>(i - 1)) = d; }

  int decoration_count() const noexcept {
    return static_cast<int>(std::count(decorated_.begin(), decorated_.end(), true));
  }
  int undecorated_count() const noexcept { return size() - decoration_count(); }

  DecoratedPermutation undecorated() const { return DecoratedPermutation(values_); }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
  friend auto operator<=>(const DecoratedPermutation& a, const DecoratedPermutation& b) {
    if (auto c = a.values_ <=> b.values_; c != 0) return c;
    return a.decorated_ <=> b.decorated_;
  }

 private:
  std::vector<int> values_;
  std::vector<bool> decorated_;
};

/// Space-separated letters with a `*` suffix for decorated ones: "7* 8 4 2* 3".
inline std::string to_text(const DecoratedPermutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(w.at(i));
    if (w.decorated(i)) out += '*';
  }
  return out;
}

inline DecoratedPermutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::vector<bool> dec;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool star = false;
    if (tok.back() == '*') {
      star = true;
      tok.pop_back();
    }
    if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::ParseError, "bad permutation token '" + tok + "'");
    values.push_back(std::stoi(tok));
    dec.push_back(star);
  }
  try {
    return DecoratedPermutation(std::move(values), std::move(dec));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::ostream& operator<<(std::ostream& os, const DecoratedPermutation& w) { return os << to_text(w); }

/// Half-open 0-based position range [begin, end) of a factor of a word.
struct Run {
  int begin;
  int end;
  int length() const noexcept { return end - begin; }
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal decreasing factors, left to right.
inline std::vector<Run> decreasing_runs(const std::vector<int>& values) {
  std::vector<Run> runs;
  const int n = static_cast<int>(values.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || values[i] > values[i - 1]) {
      runs.push_back({start, i});
      start = i;
    }
  }
  return runs;
}

inline std::vector<Run> decreasing_runs(const DecoratedPermutation& w) { return decreasing_runs(w.values()); }

/// Sum of descent positions (1-based).
inline int maj(const std::vector<int>& values) {
  int m = 0;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] > values[i + 1]) m += static_cast<int>(i) + 1;
  return m;
}

inline int revmaj(const std::vector<int>& values) {
  return maj(std::vector<int>(values.rbegin(), values.rend()));
}

inline int revmaj(const DecoratedPermutation& w) { return revmaj(w.values()); }

namespace detail {
// True iff values[i..j] (0-based, inclusive) becomes strictly decreasing after
// adding some m in [n], representatives taken in {1..n}.
inline bool is_cyclic_run(const std::vector<int>& values, int i, int j) {
  const int n = static_cast<int>(values.size());
  for (int m = 1; m <= n; ++m) {
    bool ok = true;
    for (int x = i; x < j && ok; ++x) ok = (values[x] + m - 1) % n + 1 > (values[x + 1] + m - 1) % n + 1;
    if (ok) return true;
  }
  return false;
}
}  // namespace detail

/// Left maximal cyclic run ending at 1-based position j.
inline Run lmcr(const std::vector<int>& values, int j) {
  const int end = j - 1;
  int start = end;
  while (start > 0 && detail::is_cyclic_run(values, start - 1, end)) --start;
  return {start, end + 1};
}

/// Right maximal cyclic run starting at 1-based position i.
inline Run rmcr(const std::vector<int>& values, int i) {
  const int n = static_cast<int>(values.size());
  const int begin = i - 1;
  int last = begin;
  while (last + 1 < n && detail::is_cyclic_run(values, begin, last + 1)) ++last;
  return {begin, last + 1};
}

inline Run lmcr(const DecoratedPermutation& w, int j) { return lmcr(w.values(), j); }
inline Run rmcr(const DecoratedPermutation& w, int i) { return rmcr(w.values(), i); }

/// A diagonal word paired with a shift.
struct ShiftedDiagonalWord {
  DecoratedPermutation word;
  int shift = 0;
  friend bool operator==(const ShiftedDiagonalWord&, const ShiftedDiagonalWord&) = default;
  friend auto operator<=>(const ShiftedDiagonalWord&, const ShiftedDiagonalWord&) = default;
};

/// One schedule number per letter, in reading order.
using ScheduleWord = std::vector<int>;

/// Labels diagonal by diagonal from the bottom one, each diagonal read in
/// decreasing order, decorations carried along; throws NonStandardLabeling.
inline ShiftedDiagonalWord diagonal_word(const DecoratedLabeledPath& p) {
  if (!is_standard(p)) throw Error(ErrorKind::NonStandardLabeling, "diagonal words need labels exactly 1..n");
  const auto a = area_word(p);
  const int n = p.size();
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (a[x] != a[y]) return a[x] < a[y];
    return p.labels()[x] > p.labels()[y];
  });
  std::vector<int> values;
  std::vector<bool> dec;
  for (int i : order) {
    values.push_back(p.labels()[i]);
    dec.push_back(p.is_decorated(i + 1));
  }
  return {DecoratedPermutation(std::move(values), std::move(dec)), shift(p)};
}

/// Shifted schedule numbers; all zero once the shift reaches the run count.
inline ScheduleWord schedule_numbers(const ShiftedDiagonalWord& sdw) {
  const auto& w = sdw.word;
  const auto runs = decreasing_runs(w);
  const int r = static_cast<int>(runs.size());
  const int s = sdw.shift;
  ScheduleWord out(static_cast<size_t>(w.size()), 0);
  if (s < 0 || s >= r) return out;

  // #undecorated letters d of run idx with d > c (greater) or d < c.
  auto count = [&](int idx, int c, bool greater) {
    if (idx < 0 || idx >= r) return 0;
    int k = 0;
    for (int p = runs[idx].begin; p < runs[idx].end; ++p) {
      if (w.decorated(p + 1)) continue;
      const int d = w.at(p + 1);
      if (greater ? d > c : d < c) ++k;
    }
    return k;
  };

  for (int i = 0; i < r; ++i) {
    for (int p = runs[i].begin; p < runs[i].end; ++p) {
      const int c = w.at(p + 1);
      const bool dec = w.decorated(p + 1);
      int v;
      if (i == s && !dec)
        v = count(i, c, true) + 1;
      else if (i > s && !dec)
        v = count(i, c, true) + count(i - 1, c, false);
      else
        v = count(i, c, false) + count(i + 1, c, true);
      out[static_cast<size_t>(p)] = v;
    }
  }
  return out;
}

/// The same numbers via maximal cyclic runs. Undecorated letters of the zero
/// run have no such description and come back empty.
inline std::vector<std::optional<int>> schedule_numbers_cyclic(const ShiftedDiagonalWord& sdw) {
  const auto& w = sdw.word;
  const auto runs = decreasing_runs(w);
  const int r = static_cast<int>(runs.size());
  std::vector<std::optional<int>> out(static_cast<size_t>(w.size()));
  if (sdw.shift >= r) {
    for (auto& v : out) v = 0;
    return out;
  }
  auto undecorated_in = [&](Run run, int skip) {
    int k = 0;
    for (int p = run.begin; p < run.end; ++p)
      if (p != skip && !w.decorated(p + 1)) ++k;
    return k;
  };
  for (int i = 0; i < r; ++i) {
    for (int p = runs[i].begin; p < runs[i].end; ++p) {
      const bool dec = w.decorated(p + 1);
      if (i == sdw.shift && !dec) continue;
      if (i > sdw.shift && !dec)
        out[static_cast<size_t>(p)] = undecorated_in(lmcr(w, p + 1), p);
      else
        out[static_cast<size_t>(p)] = undecorated_in(rmcr(w, p + 1), p);
    }
  }
  return out;
}

/// Undecorated letters in runs strictly before the zero run.
inline int u(const ShiftedDiagonalWord& sdw) {
  const auto runs = decreasing_runs(sdw.word);
  int k = 0;
  for (int i = 0; i < std::min<int>(sdw.shift, static_cast<int>(runs.size())); ++i)
    for (int p = runs[i].begin; p < runs[i].end; ++p)
      if (!sdw.word.decorated(p + 1)) ++k;
  return k;
}

/// t^{revmaj} q^{u} prod_c [w(c)]_q.
inline QTPolynomial schedule_rhs(const ShiftedDiagonalWord& sdw) {
  const auto sched = schedule_numbers(sdw);
  if (std::any_of(sched.begin(), sched.end(), [](int v) { return v == 0; })) return {};
  QTPolynomial r = QTPolynomial::monomial(u(sdw), revmaj(sdw.word));
  for (int v : sched) r *= QTPolynomial::q_analog(v);
  return r;
}

/// Number of paths with this shifted diagonal word.
inline Coeff count_by_sdw(const ShiftedDiagonalWord& sdw) {
  Coeff c = 1;
  for (int v : schedule_numbers(sdw)) c = detail::checked_mul(c, v);
  return c;
}

inline ScheduleWord sched(const DecoratedLabeledPath& p) { return schedule_numbers(diagonal_word(p)); }

inline bool all_ones(const ScheduleWord& s) {
  return std::all_of(s.begin(), s.end(), [](int v) { return v == 1; });
}

}  // namespace pathlab
