#pragma once

// Decorated labeled square and Dyck paths and their statistics.
//
// Conventions: every index that appears in a public signature is 1-based
// (vertical steps, horizontal-step ordinals, decoration sets); containers are
// ordinary 0-based vectors. A vertical step is the left edge of its square
// and a horizontal step the top edge; the square with lower-left corner
// (x, y) lies on diagonal y - x.

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathlab/error.hpp"

namespace pathlab {

enum class Step : char { N = 'N', E = 'E' };

/// Unvalidated input triple (steps, labels, decorations).
struct RawPath {
  std::vector<Step> steps;
  std::vector<int> labels;
  std::vector<int> decorations;
};

class DecoratedLabeledPath;
inline DecoratedLabeledPath validate(RawPath raw);

namespace detail {
struct PathAccess;
}

/// A valid triple (steps, labels, decorations). Instances only come out of
/// validate() or from library routines that preserve validity.
class DecoratedLabeledPath {
 public:
  DecoratedLabeledPath() = default;  // the empty path, n = 0

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  /// Sorted 1-based indices of decorated vertical steps.
  const std::vector<int>& decorations() const noexcept { return decorations_; }
  int label(int i) const { return labels_.at(static_cast<size_t>(i - 1)); }
  bool is_decorated(int i) const { return flags_.at(static_cast<size_t>(i - 1)) != 0; }

  friend bool operator==(const DecoratedLabeledPath& a, const DecoratedLabeledPath& b) {
    return a.steps_ == b.steps_ && a.labels_ == b.labels_ && a.decorations_ == b.decorations_;
  }
  friend auto operator<=>(const DecoratedLabeledPath& a, const DecoratedLabeledPath& b) {
    if (auto c = a.steps_ <=> b.steps_; c != 0) return c;
    if (auto c = a.labels_ <=> b.labels_; c != 0) return c;
    return a.decorations_ <=> b.decorations_;
  }

 private:
  friend DecoratedLabeledPath validate(RawPath raw);
  friend struct detail::PathAccess;

  DecoratedLabeledPath(std::vector<Step> steps, std::vector<int> labels, std::vector<int> decorations)
      : steps_(std::move(steps)), labels_(std::move(labels)), decorations_(std::move(decorations)),
        flags_(labels_.size(), 0) {
    for (int d : decorations_) flags_[static_cast<size_t>(d - 1)] = 1;
  }

  std::vector<Step> steps_;
  std::vector<int> labels_;
  std::vector<int> decorations_;
  std::vector<char> flags_;
};

namespace detail {
// Builds a path whose validity the caller already guarantees.
struct PathAccess {
  static DecoratedLabeledPath make(std::vector<Step> steps, std::vector<int> labels, std::vector<int> decorations) {
    return DecoratedLabeledPath(std::move(steps), std::move(labels), std::move(decorations));
  }
};

inline std::vector<int> area_word_of(const std::vector<Step>& steps) {
  std::vector<int> a;
  int x = 0, y = 0;
  for (Step s : steps) {
    if (s == Step::N) {
      a.push_back(y - x);
      ++y;
    } else {
      ++x;
    }
  }
  return a;
}

/// Contractible valleys of (steps, labels) given the area word; 1-based.
inline std::vector<int> contractible_valleys_of(const std::vector<int>& a, const std::vector<int>& w) {
  std::vector<int> out;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    bool valley;
    if (i == 0)
      valley = a[0] <= -1;
    else
      valley = a[i - 1] > a[i] || (a[i - 1] == a[i] && w[i - 1] < w[i]);
    if (valley) out.push_back(i + 1);
  }
  return out;
}

inline bool columns_increasing(const std::vector<Step>& steps, const std::vector<int>& labels) {
  size_t li = 0;
  bool in_column = false;
  int prev = 0;
  for (Step s : steps) {
    if (s == Step::E) {
      in_column = false;
      continue;
    }
    const int w = labels[li++];
    if (in_column && w <= prev) return false;
    in_column = true;
    prev = w;
  }
  return true;
}
}  // namespace detail

/// Checks all path invariants; throws Error{NotAPath, ColumnOrderViolation,
/// DecorationNotContractible}.
inline DecoratedLabeledPath validate(RawPath raw) {
  const auto north = std::count(raw.steps.begin(), raw.steps.end(), Step::N);
  const auto east = static_cast<std::ptrdiff_t>(raw.steps.size()) - north;
  if (north != east) throw Error(ErrorKind::NotAPath, "unequal numbers of N and E steps");
  if (!raw.steps.empty() && raw.steps.back() != Step::E) throw Error(ErrorKind::NotAPath, "path must end with an E step");
  if (static_cast<std::ptrdiff_t>(raw.labels.size()) != north)
    throw Error(ErrorKind::NotAPath, "expected one label per N step");
  if (std::any_of(raw.labels.begin(), raw.labels.end(), [](int w) { return w <= 0; }))
    throw Error(ErrorKind::NotAPath, "labels must be positive integers");
  if (!detail::columns_increasing(raw.steps, raw.labels))
    throw Error(ErrorKind::ColumnOrderViolation, "labels must increase bottom to top within each column");

  std::sort(raw.decorations.begin(), raw.decorations.end());
  if (std::adjacent_find(raw.decorations.begin(), raw.decorations.end()) != raw.decorations.end())
    throw Error(ErrorKind::DecorationNotContractible, "repeated decoration index");
  const auto valleys = detail::contractible_valleys_of(detail::area_word_of(raw.steps), raw.labels);
  for (int d : raw.decorations) {
    if (!std::binary_search(valleys.begin(), valleys.end(), d))
      throw Error(ErrorKind::DecorationNotContractible, "step " + std::to_string(d) + " is not a contractible valley");
  }
  return DecoratedLabeledPath(std::move(raw.steps), std::move(raw.labels), std::move(raw.decorations));
}

/// Diagonal index y - x of the starting point of each vertical step.
inline std::vector<int> area_word(const DecoratedLabeledPath& p) { return detail::area_word_of(p.steps()); }

inline int shift(const DecoratedLabeledPath& p) {
  const auto a = area_word(p);
  if (a.empty()) return 0;
  return std::max(0, -*std::min_element(a.begin(), a.end()));
}

inline int area(const DecoratedLabeledPath& p) {
  const auto a = area_word(p);
  const int s = a.empty() ? 0 : std::max(0, -*std::min_element(a.begin(), a.end()));
  int total = 0;
  for (int ai : a) total += ai + s;
  return total;
}

/// Decorations are ignored here.
inline std::vector<int> contractible_valleys(const DecoratedLabeledPath& p) {
  return detail::contractible_valleys_of(area_word(p), p.labels());
}

enum class AttackKind { Primary, Secondary };

struct AttackPair {
  int i;
  int j;
  AttackKind kind;
  friend bool operator==(const AttackPair&, const AttackPair&) = default;
};

inline std::vector<AttackPair> attack_pairs(const DecoratedLabeledPath& p) {
  const auto a = area_word(p);
  const auto& w = p.labels();
  std::vector<AttackPair> out;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (p.is_decorated(i + 1)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (a[i] == a[j] && w[i] < w[j])
        out.push_back({i + 1, j + 1, AttackKind::Primary});
      else if (a[i] == a[j] + 1 && w[i] > w[j])
        out.push_back({i + 1, j + 1, AttackKind::Secondary});
    }
  }
  return out;
}

/// #attack pairs + #labels below the main diagonal - #decorations.
inline int dinv(const DecoratedLabeledPath& p) {
  const auto a = area_word(p);
  const auto& w = p.labels();
  const int n = p.size();
  int total = -static_cast<int>(p.decorations().size());
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0) ++total;
    if (p.is_decorated(i + 1)) continue;
    for (int j = i + 1; j < n; ++j)
      if ((a[i] == a[j] && w[i] < w[j]) || (a[i] == a[j] + 1 && w[i] > w[j])) ++total;
  }
  return total;
}

/// Label value -> multiplicity.
inline std::map<int, int> monomial(const DecoratedLabeledPath& p) {
  std::map<int, int> m;
  for (int w : p.labels()) ++m[w];
  return m;
}

inline bool is_dyck(const DecoratedLabeledPath& p) { return shift(p) == 0; }

/// Labels are exactly 1..n.
inline bool is_standard(const DecoratedLabeledPath& p) {
  auto w = p.labels();
  std::sort(w.begin(), w.end());
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// Text format: <steps>:<labels>:<decorations>, e.g. "NNEENE:1,2,3:3".

namespace detail {
inline std::string join(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  size_t pos = 0;
  while (true) {
    const size_t comma = s.find(',', pos);
    const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::ParseError, "bad integer list '" + std::string(s) + "'");
    out.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}
}  // namespace detail

inline std::string to_text(const DecoratedLabeledPath& p) {
  std::string out;
  for (Step s : p.steps()) out += static_cast<char>(s);
  return out + ':' + detail::join(p.labels()) + ':' + detail::join(p.decorations());
}

inline RawPath parse_raw_path(std::string_view text) {
  const size_t c1 = text.find(':');
  const size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw Error(ErrorKind::ParseError, "expected <steps>:<labels>:<decorations>");
  RawPath raw;
  for (char c : text.substr(0, c1)) {
    if (c != 'N' && c != 'E') throw Error(ErrorKind::ParseError, "steps must be over {N,E}");
    raw.steps.push_back(static_cast<Step>(c));
  }
  raw.labels = detail::parse_int_list(text.substr(c1 + 1, c2 - c1 - 1));
  raw.decorations = detail::parse_int_list(text.substr(c2 + 1));
  return raw;
}

inline DecoratedLabeledPath parse_path(std::string_view text) { return validate(parse_raw_path(text)); }

inline std::ostream& operator<<(std::ostream& os, const DecoratedLabeledPath& p) { return os << to_text(p); }

}  // namespace pathlab
