#pragma once

// Alternating dinv representatives: membership, the Dyck and parity
// decorating algorithms, the maps phi and delta, and the word-level
// enumerators of S_{n,k} and D_{n,k}.

#include <algorithm>
#include <numeric>
#include <vector>

#include "pathlab/error.hpp"
#include "pathlab/parallel.hpp"
#include "pathlab/poly.hpp"
#include "pathlab/schedule.hpp"

namespace pathlab {

struct ADRWitness {
  DecoratedPermutation word;
  std::vector<int> valid_shifts;  // ascending
  bool is_adr() const noexcept { return !valid_shifts.empty(); }
  bool is_dyck() const noexcept { return !valid_shifts.empty() && valid_shifts.front() == 0; }
};

/// Sweeps every shift below the run count for an all-ones schedule word.
inline ADRWitness is_adr(const DecoratedPermutation& word) {
  ADRWitness w{word, {}};
  const int runs = static_cast<int>(decreasing_runs(word).size());
  for (int s = 0; s < runs; ++s)
    if (all_ones(schedule_numbers({word, s}))) w.valid_shifts.push_back(s);
  return w;
}

namespace detail {
// Steps 1-3 shared by both decorating algorithms: walk the left maximal
// cyclic runs from the right and decorate their interior letters.
inline DecoratedPermutation decorate_cyclic_interiors(const DecoratedPermutation& perm) {
  DecoratedPermutation w = perm.undecorated();
  int j = w.size();
  while (j > 1) {
    const Run r = lmcr(w, j);
    for (int p = r.begin + 2; p < j; ++p) w.set_decorated(p, true);
    j = r.begin + 1;
  }
  return w;
}

inline int undecorated_in_first_run(const DecoratedPermutation& w) {
  if (w.size() == 0) return 0;
  const Run r = decreasing_runs(w).front();
  int k = 0;
  for (int p = r.begin; p < r.end; ++p)
    if (!w.decorated(p + 1)) ++k;
  return k;
}
}  // namespace detail

/// The unique Dyck ADR on the underlying permutation (input decorations ignored).
inline DecoratedPermutation dyck_decorate(const DecoratedPermutation& perm) {
  auto w = detail::decorate_cyclic_interiors(perm);
  if (w.size() > 0 && detail::undecorated_in_first_run(w) == 2) w.set_decorated(1, true);
  return w;
}

/// The unique ADR with an odd number of undecorated letters on the
/// underlying permutation.
inline DecoratedPermutation parity_decorate(const DecoratedPermutation& perm) {
  auto w = detail::decorate_cyclic_interiors(perm);
  if (w.size() > 0 && w.undecorated_count() % 2 == 0) w.set_decorated(1, true);
  return w;
}

inline int parity_dec(const DecoratedPermutation& perm) { return parity_decorate(perm).decoration_count(); }

/// ADR with an odd number of undecorated letters -> DADR on the same
/// permutation; throws NotAnADR otherwise.
inline DecoratedPermutation phi(const DecoratedPermutation& word) {
  if (word.undecorated_count() % 2 == 0 || !is_adr(word).is_adr())
    throw Error(ErrorKind::NotAnADR, "phi needs an ADR with an odd number of undecorated letters: " + to_text(word));
  DecoratedPermutation out = word;
  switch (detail::undecorated_in_first_run(word)) {
    case 0: out.set_decorated(1, false); break;
    case 1: break;
    case 2: out.set_decorated(1, true); break;
    default: throw Error(ErrorKind::NotAnADR, "first run has more than two undecorated letters");
  }
  return out;
}

/// Rotates a DADR of size n - 1 by m into a word of size n starting with m.
/// The first letter is decorated iff the input has an odd number of
/// undecorated letters; the result then has one too.
inline DecoratedPermutation delta(int m, const DecoratedPermutation& word) {
  const int n = word.size() + 1;
  if (m < 1 || m > n) throw Error(ErrorKind::DomainViolation, "delta needs 1 <= m <= n");
  if (!is_adr(word).is_dyck()) throw Error(ErrorKind::DomainViolation, "delta needs a Dyck ADR: " + to_text(word));
  std::vector<int> values{m};
  std::vector<bool> dec{word.undecorated_count() % 2 == 1};
  for (int i = 1; i < n; ++i) {
    values.push_back((word.at(i) + m - 1) % n + 1);
    dec.push_back(word.decorated(i));
  }
  return DecoratedPermutation(std::move(values), std::move(dec));
}

namespace detail {
// Visits every permutation of 1..n in lexicographic order, split across
// workers by first letter.
template <class Acc, class MakeAcc, class Body, class Merge>
Acc fold_permutations(int n, int jobs, MakeAcc make_acc, Body body, Merge merge) {
  if (n == 0) {
    Acc acc = make_acc();
    body(acc, DecoratedPermutation());
    return acc;
  }
  return parallel_fold<Acc>(
      n, jobs, make_acc,
      [&](Acc& acc, int first) {
        std::vector<int> v(static_cast<size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::rotate(v.begin(), v.begin() + first, v.begin() + first + 1);
        do {
          body(acc, DecoratedPermutation(v));
        } while (std::next_permutation(v.begin() + 1, v.end()));
      },
      merge);
}

template <class Decorate>
std::vector<TPolynomial> revmaj_by_decorations(int n, int jobs, Decorate decorate) {
  using Table = std::vector<TPolynomial>;
  const size_t rows = static_cast<size_t>(std::max(n, 1));
  return fold_permutations<Table>(
      n, jobs, [&] { return Table(rows); },
      [&](Table& acc, const DecoratedPermutation& perm) {
        const auto w = decorate(perm);
        acc[static_cast<size_t>(w.decoration_count())].add_term(revmaj(w), 1);
      },
      [](Table& a, Table b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
      });
}
}  // namespace detail

/// Row k holds S_{n,k} for k = 0..n-1.
inline std::vector<TPolynomial> S_fast_table(int n, int jobs = 1) {
  if (n < 1) throw Error(ErrorKind::DomainViolation, "S_fast needs n >= 1");
  auto rows = detail::revmaj_by_decorations(n, jobs, [](const DecoratedPermutation& p) { return parity_decorate(p); });
  for (int k = 0; k < n; ++k)
    if ((n - k) % 2 == 0) rows[static_cast<size_t>(k)] = TPolynomial();
  return rows;
}

/// Row k holds D_{n,k}; D_{0,0} = 1.
inline std::vector<TPolynomial> D_fast_table(int n, int jobs = 1) {
  if (n < 0) throw Error(ErrorKind::DomainViolation, "D_fast needs n >= 0");
  return detail::revmaj_by_decorations(n, jobs, [](const DecoratedPermutation& p) { return dyck_decorate(p); });
}

inline TPolynomial S_fast(int n, int k, int jobs = 1) {
  if (k < 0 || k >= n) return {};
  return S_fast_table(n, jobs)[static_cast<size_t>(k)];
}

inline TPolynomial D_fast(int n, int k, int jobs = 1) {
  if (k < 0 || k >= std::max(n, 1)) return {};
  return D_fast_table(n, jobs)[static_cast<size_t>(k)];
}

/// [n]_t (D_{n-1,k} + D_{n-1,k-1}) when n - k is odd, otherwise 0.
inline TPolynomial S_recursive(int n, int k, int jobs = 1) {
  if (n < 1) throw Error(ErrorKind::DomainViolation, "S_recursive needs n >= 1");
  if ((n - k) % 2 == 0 || k < 0) return {};
  return t_analog(n) * (D_fast(n - 1, k, jobs) + D_fast(n - 1, k - 1, jobs));
}

/// [n]_t t^{floor((n-1)^2/4)} E_{n-1}(t) for odd n, with E_0 = 1.
inline TPolynomial euler_specialization(int n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorKind::DomainViolation, "euler_specialization needs odd n >= 1");
  const TPolynomial e = n == 1 ? TPolynomial::constant(1) : euler_t(n - 1);
  return t_analog(n) * TPolynomial::monomial((n - 1) * (n - 1) / 4) * e;
}

/// Every decorated permutation of size n that is an ADR, with its valid
/// shifts, by the exhaustive shift sweep. Sorted by word.
inline std::vector<ADRWitness> all_adrs(int n) {
  std::vector<ADRWitness> out;
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> dec(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) dec[static_cast<size_t>(i)] = (mask >> i) & 1u;
      auto wit = is_adr(DecoratedPermutation(v, std::move(dec)));
      if (wit.is_adr()) out.push_back(std::move(wit));
    }
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

/// ADR_{n,k}, or DADR_{n,k} when dyck_only. Sorted.
inline std::vector<DecoratedPermutation> enumerate_adrs(int n, int k, bool dyck_only = false) {
  std::vector<DecoratedPermutation> out;
  for (auto& wit : all_adrs(n))
    if (wit.word.decoration_count() == k && (!dyck_only || wit.is_dyck())) out.push_back(std::move(wit.word));
  return out;
}

}  // namespace pathlab
