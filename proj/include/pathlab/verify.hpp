#pragma once

// Verification suites: each check runs one identity exhaustively for every
// size up to a bound and reports per size, with a counterexample in the
// canonical text formats on failure.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathlab/adr.hpp"
#include "pathlab/bridge.hpp"
#include "pathlab/cutting.hpp"
#include "pathlab/enumeration.hpp"
#include "pathlab/error.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/poly.hpp"
#include "pathlab/schedule.hpp"

namespace pathlab {

struct VerificationReport {
  std::string check_id;
  nlohmann::json params;
  bool pass = true;
  std::optional<std::string> witness;  // set iff !pass
  double elapsed_seconds = 0;
};

/// Elapsed time is diagnostics only and stays out of the JSON form.
inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check_id", r.check_id}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}};
  if (r.witness) j["witness"] = *r.witness;
}

namespace verify_detail {

using Witness = std::optional<std::string>;

inline std::string sdw_text(const ShiftedDiagonalWord& w) { return to_text(w.word) + " @ shift " + std::to_string(w.shift); }

inline std::string poly_mismatch(const std::string& what, const TPolynomial& got, const TPolynomial& want) {
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

inline std::vector<DecoratedLabeledPath> sched_one_paths(int n, int k, int jobs) {
  using V = std::vector<DecoratedLabeledPath>;
  auto v = fold_paths<V>(
      {n, k, PathKind::Square}, jobs, [] { return V(); },
      [](V& acc, const DecoratedLabeledPath& p) {
        if (all_ones(sched(p))) acc.push_back(p);
      },
      [](V& a, V b) { a.insert(a.end(), b.begin(), b.end()); });
  std::sort(v.begin(), v.end());
  return v;
}

// Calls f on every decorated permutation of size n until it returns a witness.
inline Witness for_each_decorated_permutation(int n, const std::function<Witness(const DecoratedPermutation&)>& f) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> dec(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) dec[static_cast<size_t>(i)] = (mask >> i) & 1u;
      if (auto w = f(DecoratedPermutation(v, std::move(dec)))) return w;
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return std::nullopt;
}

inline std::vector<DecoratedPermutation> permutations(int n) {
  std::vector<DecoratedPermutation> out;
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Witness schedule_formula(int n, int jobs) {
  struct Fiber {
    QTPolynomial poly;
    Coeff count = 0;
  };
  using Fibers = std::map<ShiftedDiagonalWord, Fiber>;
  for (int k = 0; k < n; ++k) {
    const auto fibers = fold_paths<Fibers>(
        {n, k, PathKind::Square}, jobs, [] { return Fibers(); },
        [](Fibers& acc, const DecoratedLabeledPath& p) {
          auto& f = acc[diagonal_word(p)];
          f.poly.add_term(dinv(p), area(p), 1);
          ++f.count;
        },
        [](Fibers& a, Fibers b) {
          for (auto& [key, f] : b) {
            a[key].poly += f.poly;
            a[key].count += f.count;
          }
        });
    for (const auto& [key, f] : fibers) {
      if (!(f.poly == schedule_rhs(key)))
        return "fiber " + sdw_text(key) + ": enumerated " + f.poly.to_string() + ", formula " + schedule_rhs(key).to_string();
      if (f.count != count_by_sdw(key))
        return "fiber " + sdw_text(key) + ": " + std::to_string(f.count) + " paths, schedule product " +
               std::to_string(count_by_sdw(key));
    }
  }
  return std::nullopt;
}

inline Witness interval(int n, int /*jobs*/) {
  return for_each_decorated_permutation(n, [](const DecoratedPermutation& w) -> Witness {
    const int runs = static_cast<int>(decreasing_runs(w).size());
    for (int s = 0; s < runs; ++s) {
      const ShiftedDiagonalWord sdw{w, s};
      const auto sch = schedule_numbers(sdw);
      const auto cyc = schedule_numbers_cyclic(sdw);
      for (size_t i = 0; i < sch.size(); ++i)
        if (cyc[i] && *cyc[i] != sch[i]) return "cyclic-run schedule differs at letter " + std::to_string(i + 1) + " of " + sdw_text(sdw);
      if (std::find(sch.begin(), sch.end(), 0) != sch.end()) continue;
      const std::set<int> values(sch.begin(), sch.end());
      if (*values.begin() != 1 || *values.rbegin() != static_cast<int>(values.size()))
        return "schedule values of " + sdw_text(sdw) + " are not an interval 1..j";
    }
    return std::nullopt;
  });
}

inline Witness cancellation_word(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    const auto s = S_brute(n, k, jobs);
    TPolynomial want;
    if ((n - k) % 2 == 1)
      for (const auto& w : enumerate_adrs(n, k)) want.add_term(revmaj(w), 1);
    if (!(s == want)) return poly_mismatch("S(" + std::to_string(n) + "," + std::to_string(k) + ")", s, want);
    if (!s.nonnegative()) return "S(" + std::to_string(n) + "," + std::to_string(k) + ") has a negative coefficient";
  }
  return std::nullopt;
}

inline Witness cancellation_path(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    const auto s = S_brute(n, k, jobs);
    TPolynomial want;
    if ((n - k) % 2 == 1)
      for (const auto& c : classes(n, k, jobs)) want.add_term(c.area, 1);
    if (!(s == want)) return poly_mismatch("S(" + std::to_string(n) + "," + std::to_string(k) + ") vs classes", s, want);
    if (!theorem_equivalence_check(n, k, jobs))
      return "classes(" + std::to_string(n) + "," + std::to_string(k) + ") are not in area-preserving bijection with ADR words";
  }
  return std::nullopt;
}

inline Witness dinv_ladder(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    for (const auto& p : sched_one_paths(n, k, jobs)) {
      const std::string at = " at " + to_text(p);
      const auto cycle = cutting_cycle(p);
      if (static_cast<int>(cycle.members.size()) != n - k) return "cycle size differs from n - k" + at;
      const auto dw = diagonal_word(p).word;
      for (const auto& m : cycle.members)
        if (area(m) != area(p) || !(diagonal_word(m).word == dw)) return "cycle members differ in area or diagonal word" + at;
      if (!std::binary_search(cycle.members.begin(), cycle.members.end(), cycle.canonical)) return "canonical not in cycle" + at;
      if (dinv(cycle.canonical) != 0) return "canonical representative has nonzero dinv" + at;
      std::vector<DecoratedLabeledPath> ladder;
      try {
        ladder = ordered_cycle(p);
      } catch (const Error& e) {
        return std::string(e.what());
      }
      if (!(ladder.front() == cycle.canonical)) return "Q_0 is not the canonical representative" + at;
      QTPolynomial qsum;
      for (const auto& m : cycle.members) qsum.add_term(dinv(m), 0, 1);
      if (!(qsum == QTPolynomial::q_analog(n - k))) return "sum of q^dinv over the cycle is not [n-k]_q" + at;
      for (const auto& m : cycle.members) {
        const bool one = all_ones(sched(m));
        if (one != (undecorated_on_zero_diagonal(m) == 1)) return "schedule-one membership mismatch at " + to_text(m);
        if (one && !(canonical_rep(m) == cycle.canonical)) return "canonical representative not constant on cycle at " + to_text(m);
      }
    }
  }
  return std::nullopt;
}

inline Witness shape(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    for (const auto& p : sched_one_paths(n, k, jobs)) {
      try {
        shape_stretches(p);
        const auto c = canonical_rep(p);
        if (!has_canonical_shape(c)) return "canonical representative leaves diagonal -1 in its first stretch: " + to_text(c);
      } catch (const Error& e) {
        return std::string(e.what());
      }
    }
  }
  return std::nullopt;
}

inline Witness partition(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    const auto family = generate({n, k, PathKind::Square});
    std::map<DecoratedLabeledPath, std::vector<DecoratedLabeledPath>> cycle_of;
    for (const auto& p : family) cycle_of[p] = cutting_cycle(p).members;
    (void)jobs;
    for (const auto& [p, members] : cycle_of) {
      if (!std::binary_search(members.begin(), members.end(), p)) return "path missing from its own cycle: " + to_text(p);
      if (static_cast<int>(members.size()) != n - k) return "cycle size differs from n - k at " + to_text(p);
      for (const auto& m : members) {
        auto it = cycle_of.find(m);
        if (it == cycle_of.end()) return "cycle leaves the family at " + to_text(m);
        if (it->second != members) return "cycles overlap without coinciding at " + to_text(p) + " and " + to_text(m);
        if (area(m) != area(p) || !(diagonal_word(m).word == diagonal_word(p).word))
          return "cycle members differ in area or diagonal word at " + to_text(p);
      }
    }
  }
  return std::nullopt;
}

inline Witness decorate_unique(int n, int /*jobs*/) {
  for (const auto& perm : permutations(n)) {
    const auto d = dyck_decorate(perm);
    const auto p = parity_decorate(perm);
    if (!is_adr(d).is_dyck()) return "Dyck decoration is not a Dyck ADR: " + to_text(d);
    if (!is_adr(p).is_adr() || p.undecorated_count() % 2 == 0) return "parity decoration is not an odd ADR: " + to_text(p);
    if (n > 6) continue;
    int dyck_count = 0, odd_count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> dec(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) dec[static_cast<size_t>(i)] = (mask >> i) & 1u;
      const DecoratedPermutation w(perm.values(), std::move(dec));
      const auto wit = is_adr(w);
      if (wit.is_dyck()) {
        ++dyck_count;
        if (!(w == d)) return "second Dyck ADR " + to_text(w) + " besides " + to_text(d);
      }
      if (wit.is_adr() && w.undecorated_count() % 2 == 1) {
        ++odd_count;
        if (!(w == p)) return "second odd ADR " + to_text(w) + " besides " + to_text(p);
      }
    }
    if (dyck_count != 1 || odd_count != 1) return "decorations of " + to_text(perm) + " miss a representative";
  }
  return std::nullopt;
}

inline Witness phi_bijection(int n, int /*jobs*/) {
  const auto catalog = all_adrs(n);
  std::set<DecoratedPermutation> dadrs, image;
  for (const auto& wit : catalog)
    if (wit.is_dyck()) dadrs.insert(wit.word);
  for (const auto& wit : catalog) {
    if (wit.word.undecorated_count() % 2 == 0) continue;
    const auto out = phi(wit.word);
    if (out.values() != wit.word.values() || revmaj(out) != revmaj(wit.word)) return "phi changed the permutation of " + to_text(wit.word);
    if (!dadrs.count(out)) return "phi(" + to_text(wit.word) + ") = " + to_text(out) + " is not a Dyck ADR";
    if (!image.insert(out).second) return "phi is not injective at " + to_text(out);
  }
  if (image != dadrs) return "phi misses a Dyck ADR of size " + std::to_string(n);
  return std::nullopt;
}

inline Witness delta_bijection(int n, int /*jobs*/) {
  std::set<DecoratedPermutation> image;
  for (const auto& perm : permutations(n - 1)) {
    const auto sigma = dyck_decorate(perm);
    for (int m = 1; m <= n; ++m) {
      const auto tau = delta(m, sigma);
      const std::string at = "delta_" + std::to_string(m) + "(" + to_text(sigma) + ") = " + to_text(tau);
      if (revmaj(tau) != revmaj(sigma) + n - m) return "revmaj shift fails for " + at;
      if (!is_adr(tau).is_adr() || tau.undecorated_count() % 2 == 0) return "not an odd ADR: " + at;
      if (!image.insert(tau).second) return "repeated output " + at;
    }
  }
  if (n <= 7) {
    std::set<DecoratedPermutation> odd;
    for (const auto& wit : all_adrs(n))
      if (wit.word.undecorated_count() % 2 == 1) odd.insert(wit.word);
    if (image != odd) return "delta images differ from the odd ADRs of size " + std::to_string(n);
  }
  return std::nullopt;
}

inline Witness recursion(int n, int jobs) {
  const auto s = S_fast_table(n, jobs);
  const auto d = D_fast_table(n - 1, jobs);
  auto row = [&](int k) { return k >= 0 && k < static_cast<int>(d.size()) ? d[static_cast<size_t>(k)] : TPolynomial(); };
  for (int k = 0; k < n; ++k) {
    const TPolynomial want = (n - k) % 2 == 1 ? t_analog(n) * (row(k) + row(k - 1)) : TPolynomial();
    if (!(s[static_cast<size_t>(k)] == want))
      return poly_mismatch("S_fast(" + std::to_string(n) + "," + std::to_string(k) + ")", s[static_cast<size_t>(k)], want);
  }
  return std::nullopt;
}

inline Witness sum_factorial(int n, int jobs) {
  TPolynomial s, d;
  for (const auto& p : S_fast_table(n, jobs)) s += p;
  for (const auto& p : D_fast_table(n, jobs)) d += p;
  const auto f = t_factorial(n);
  if (!(s == f)) return poly_mismatch("sum of S_fast", s, f);
  if (!(d == f)) return poly_mismatch("sum of D_fast", d, f);
  if (n <= 5) {
    TPolynomial sb, db;
    for (int k = 0; k < n; ++k) {
      sb += S_brute(n, k, jobs);
      db += D_brute(n, k, jobs);
    }
    if (!(sb == f)) return poly_mismatch("sum of S_brute", sb, f);
    if (!(db == f)) return poly_mismatch("sum of D_brute", db, f);
  }
  return std::nullopt;
}

inline Witness euler(int n, int jobs) {
  if (n % 2 == 0) return std::nullopt;
  const auto s = S_fast(n, 0, jobs);
  const auto e = euler_specialization(n);
  if (!(s == e)) return poly_mismatch("S_fast(" + std::to_string(n) + ",0)", s, e);
  const Coeff count = n == 1 ? 1 : euler_t(n - 1).eval(1);
  if (s.eval(1) != n * count) return "S(" + std::to_string(n) + ",0) at t=1 is " + std::to_string(s.eval(1));
  return std::nullopt;
}

inline Witness sdw_area(int n, int jobs) {
  for (int k = 0; k < n; ++k) {
    using W = Witness;
    auto w = fold_paths<W>(
        {n, k, PathKind::Square}, jobs, [] { return W(); },
        [](W& acc, const DecoratedLabeledPath& p) {
          if (!acc && area(p) != revmaj(diagonal_word(p).word)) acc = "area differs from revmaj at " + to_text(p);
        },
        [](W& a, W b) {
          if (!a) a = std::move(b);
        });
    if (w) return w;
  }
  return std::nullopt;
}

struct Check {
  const char* id;
  int min_n;
  int default_max_n;
  Witness (*run)(int n, int jobs);
};

inline const std::vector<Check>& checks() {
  static const std::vector<Check> table{
      {"schedule-formula", 1, 5, schedule_formula},
      {"interval", 1, 7, interval},
      {"cancellation-word", 1, 5, cancellation_word},
      {"cancellation-path", 1, 6, cancellation_path},
      {"dinv-ladder", 1, 6, dinv_ladder},
      {"shape", 1, 6, shape},
      {"partition", 1, 5, partition},
      {"decorate-unique", 1, 8, decorate_unique},
      {"phi-bijection", 1, 7, phi_bijection},
      {"delta-bijection", 2, 8, delta_bijection},
      {"recursion", 1, 8, recursion},
      {"sum-factorial", 1, 8, sum_factorial},
      {"euler", 1, 7, euler},
      {"sdw-area", 1, 6, sdw_area},
  };
  return table;
}

inline const Check& find_check(const std::string& id) {
  for (const auto& c : checks())
    if (id == c.id) return c;
  throw Error(ErrorKind::DomainViolation, "unknown check id '" + id + "'");
}

}  // namespace verify_detail

inline std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& c : verify_detail::checks()) out.emplace_back(c.id);
  return out;
}

inline int default_max_n(const std::string& id) { return verify_detail::find_check(id).default_max_n; }

/// One report per size from the check's smallest size up to max_n; throws
/// DomainViolation for an unknown id.
inline std::vector<VerificationReport> run_check(const std::string& id, int max_n, int jobs = 1) {
  const auto& check = verify_detail::find_check(id);
  std::vector<VerificationReport> out;
  for (int n = check.min_n; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.check_id = id;
    r.params = {{"n", n}};
    r.witness = check.run(n, jobs);
    r.pass = !r.witness;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pathlab
