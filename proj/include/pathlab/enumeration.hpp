#pragma once

// Exhaustive generation of standardly labeled decorated Dyck and square
// paths, and the brute-force signed enumerators built on it.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pathlab/parallel.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/poly.hpp"

namespace pathlab {

enum class PathKind { Dyck, Square };

struct PathFamily {
  int n = 1;
  int k = 0;
  PathKind kind = PathKind::Square;
};

inline std::string to_string(PathKind kind) { return kind == PathKind::Dyck ? "dyck" : "square"; }

/// All step sequences of size n ending in E, in string order (E < N).
inline std::vector<std::vector<Step>> step_sequences(int n, PathKind kind) {
  std::vector<std::vector<Step>> out;
  if (n < 1) return out;
  std::string head(static_cast<size_t>(n - 1), 'E');
  head.append(static_cast<size_t>(n), 'N');
  do {
    std::vector<Step> steps;
    steps.reserve(2 * static_cast<size_t>(n));
    for (char c : head) steps.push_back(static_cast<Step>(c));
    steps.push_back(Step::E);
    if (kind == PathKind::Dyck) {
      const auto a = detail::area_word_of(steps);
      if (*std::min_element(a.begin(), a.end()) < 0) continue;
    }
    out.push_back(std::move(steps));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

/// Lazy single-consumer stream over a family, restricted to the step
/// sequences with index congruent to `offset` modulo `stride`. Order: step
/// string, then labels lexicographically, then decoration sets
/// lexicographically.
class PathStream {
 public:
  explicit PathStream(PathFamily family, int offset = 0, int stride = 1)
      : family_(family), sequences_(step_sequences(family.n, family.kind)), next_seq_(offset),
        stride_(std::max(1, stride)) {}

  PathStream(PathFamily family, std::vector<std::vector<Step>> sequences, int offset, int stride)
      : family_(family), sequences_(std::move(sequences)), next_seq_(offset), stride_(std::max(1, stride)) {}

  /// Advances to the next path; false once the stream is exhausted.
  bool next() {
    if (family_.k < 0) return false;
    if (started_ && advance_combination()) return emit();
    started_ = true;
    while (true) {
      if (have_labels_ && advance_labeling()) return emit();
      if (!advance_sequence()) return false;
      if (first_labeling()) return emit();
    }
  }

  const DecoratedLabeledPath& current() const { return current_; }

 private:
  bool advance_sequence() {
    have_labels_ = false;
    if (next_seq_ >= static_cast<int>(sequences_.size())) return false;
    steps_ = &sequences_[static_cast<size_t>(next_seq_)];
    area_ = detail::area_word_of(*steps_);
    next_seq_ += stride_;
    return true;
  }

  // Positions the labeling at the first admissible permutation.
  bool first_labeling() {
    labels_.resize(static_cast<size_t>(family_.n));
    std::iota(labels_.begin(), labels_.end(), 1);
    have_labels_ = true;
    if (admit()) return true;
    return advance_labeling();
  }

  bool advance_labeling() {
    while (std::next_permutation(labels_.begin(), labels_.end()))
      if (admit()) return true;
    have_labels_ = false;
    return false;
  }

  // Accepts the current labeling if it fits the columns and has room for k
  // decorations; resets the decoration combination.
  bool admit() {
    if (!detail::columns_increasing(*steps_, labels_)) return false;
    valleys_ = detail::contractible_valleys_of(area_, labels_);
    if (static_cast<int>(valleys_.size()) < family_.k) return false;
    combo_.resize(static_cast<size_t>(family_.k));
    std::iota(combo_.begin(), combo_.end(), 0);
    return true;
  }

  bool advance_combination() {
    const int k = family_.k;
    const int m = static_cast<int>(valleys_.size());
    int i = k - 1;
    while (i >= 0 && combo_[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++combo_[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) combo_[static_cast<size_t>(j)] = combo_[static_cast<size_t>(j - 1)] + 1;
    return true;
  }

  bool emit() {
    std::vector<int> dec;
    dec.reserve(combo_.size());
    for (int c : combo_) dec.push_back(valleys_[static_cast<size_t>(c)]);
    current_ = detail::PathAccess::make(*steps_, labels_, std::move(dec));
    return true;
  }

  PathFamily family_;
  std::vector<std::vector<Step>> sequences_;
  int next_seq_;
  int stride_;
  bool started_ = false;
  bool have_labels_ = false;
  const std::vector<Step>* steps_ = nullptr;
  std::vector<int> area_;
  std::vector<int> labels_;
  std::vector<int> valleys_;
  std::vector<int> combo_;
  DecoratedLabeledPath current_;
};

template <class F>
void for_each_path(const PathFamily& family, F&& f) {
  PathStream stream(family);
  while (stream.next()) f(stream.current());
}

inline std::vector<DecoratedLabeledPath> generate(const PathFamily& family) {
  std::vector<DecoratedLabeledPath> out;
  for_each_path(family, [&](const DecoratedLabeledPath& p) { out.push_back(p); });
  return out;
}

/// Parallel fold over a family; workers split the step sequences.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc fold_paths(const PathFamily& family, int jobs, MakeAcc make_acc, Body body, Merge merge) {
  const auto sequences = step_sequences(family.n, family.kind);
  const int count = static_cast<int>(sequences.size());
  jobs = std::max(1, std::min(jobs, count));
  return parallel_fold<Acc>(
      jobs, jobs, make_acc,
      [&](Acc& acc, int w) {
        PathStream stream(family, sequences, w, jobs);
        while (stream.next()) body(acc, stream.current());
      },
      merge);
}

/// Sum of (-1)^dinv t^area over the family.
inline TPolynomial signed_enumerator(const PathFamily& family, int jobs = 1) {
  return fold_paths<TPolynomial>(
      family, jobs, [] { return TPolynomial(); },
      [](TPolynomial& acc, const DecoratedLabeledPath& p) { acc.add_term(area(p), dinv(p) % 2 == 0 ? 1 : -1); },
      [](TPolynomial& a, TPolynomial b) { a += b; });
}

inline TPolynomial S_brute(int n, int k, int jobs = 1) { return signed_enumerator({n, k, PathKind::Square}, jobs); }
inline TPolynomial D_brute(int n, int k, int jobs = 1) { return signed_enumerator({n, k, PathKind::Dyck}, jobs); }

/// Sum of q^dinv t^area over the family.
inline QTPolynomial qt_enumerator(const PathFamily& family, int jobs = 1) {
  return fold_paths<QTPolynomial>(
      family, jobs, [] { return QTPolynomial(); },
      [](QTPolynomial& acc, const DecoratedLabeledPath& p) { acc.add_term(dinv(p), area(p), 1); },
      [](QTPolynomial& a, QTPolynomial b) { a += b; });
}

}  // namespace pathlab
