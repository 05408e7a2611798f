#pragma once

// Exact integer polynomials in t (dense) and in q,t (sparse), plus the
// t-analogs used by the enumerators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pathlab {

using Coeff = std::int64_t;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("pathlab: coefficient overflow in addition");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("pathlab: coefficient overflow in multiplication");
  return r;
}

inline Coeff checked_pow(Coeff base, int exp) {
  Coeff r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Appends "c·x^d" to a polynomial rendering; first term carries no leading "+".
inline void append_term(std::string& out, Coeff c, const std::string& mono) {
  if (c == 0) return;
  const bool first = out.empty();
  const Coeff mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += std::to_string(mag);
  } else {
    if (mag != 1) out += std::to_string(mag);
    out += mono;
  }
}

inline std::string power(const char* var, int d) {
  if (d == 0) return {};
  if (d == 1) return var;
  return std::string(var) + "^" + std::to_string(d);
}

}  // namespace detail

/// Univariate polynomial in t with overflow-checked int64 coefficients.
/// Dense, ascending degree; trailing zeros are always trimmed so the zero
/// polynomial is the empty coefficient vector.
class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static TPolynomial constant(Coeff c) { return TPolynomial(std::vector<Coeff>{c}); }

  static TPolynomial monomial(int degree, Coeff c = 1) {
    if (degree < 0) throw std::invalid_argument("pathlab: negative degree");
    std::vector<Coeff> v(static_cast<size_t>(degree) + 1, 0);
    v.back() = c;
    return TPolynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Coeff coeff(int d) const noexcept {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(d)] : 0;
  }

  /// Adds c·t^d in place.
  void add_term(int d, Coeff c) {
    if (c == 0) return;
    if (d < 0) throw std::invalid_argument("pathlab: negative degree");
    if (d >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<size_t>(d) + 1, 0);
    coeffs_[static_cast<size_t>(d)] = detail::checked_add(coeffs_[static_cast<size_t>(d)], c);
    trim();
  }

  Coeff eval(Coeff t) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = detail::checked_add(detail::checked_mul(acc, t), *it);
    return acc;
  }

  bool nonnegative() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
  }

  TPolynomial& operator+=(const TPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = detail::checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
  }

  TPolynomial operator-() const {
    TPolynomial r = *this;
    for (auto& c : r.coeffs_) c = detail::checked_mul(c, -1);
    return r;
  }

  TPolynomial& operator-=(const TPolynomial& o) { return *this += -o; }

  TPolynomial& operator*=(const TPolynomial& o) { return *this = *this * o; }

  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }

  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return TPolynomial(std::move(r));
  }

  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

  /// Descending-degree rendering, e.g. "t^3 + 2t^2 + 1"; "0" for zero.
  std::string to_string() const {
    std::string out;
    for (int d = degree(); d >= 0; --d) detail::append_term(out, coeff(d), detail::power("t", d));
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const TPolynomial& p) { return os << p.to_string(); }

/// Bivariate polynomial in q,t stored as a sparse map (dq, dt) -> coefficient.
/// No zero coefficient is ever stored.
class QTPolynomial {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Coeff>;

  QTPolynomial() = default;

  static QTPolynomial monomial(int dq, int dt, Coeff c = 1) {
    QTPolynomial p;
    p.add_term(dq, dt, c);
    return p;
  }

  /// [n]_q = 1 + q + ... + q^{n-1}.
  static QTPolynomial q_analog(int n) {
    QTPolynomial p;
    for (int i = 0; i < n; ++i) p.add_term(i, 0, 1);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int dq, int dt, Coeff c) {
    if (c == 0) return;
    if (dq < 0 || dt < 0) throw std::invalid_argument("pathlab: negative exponent");
    auto [it, inserted] = terms_.try_emplace({dq, dt}, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  QTPolynomial& operator+=(const QTPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }

  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }

  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, detail::checked_mul(ca, cb));
    return r;
  }

  QTPolynomial& operator*=(const QTPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const QTPolynomial&, const QTPolynomial&) = default;

  std::string to_string() const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [dq, dt] = it->first;
      detail::append_term(out, it->second, detail::power("q", dq) + detail::power("t", dt));
    }
    return out.empty() ? "0" : out;
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QTPolynomial& p) { return os << p.to_string(); }

/// Substitutes q = q0; t-degrees are preserved.
inline TPolynomial eval_q(const QTPolynomial& p, Coeff q0) {
  TPolynomial r;
  for (const auto& [e, c] : p.terms())
    r.add_term(e.second, detail::checked_mul(c, detail::checked_pow(q0, e.first)));
  return r;
}

/// [n]_t = 1 + t + ... + t^{n-1}; zero for n = 0.
inline TPolynomial t_analog(int n) {
  if (n < 0) throw std::invalid_argument("pathlab: t_analog requires n >= 0");
  return TPolynomial(std::vector<Coeff>(static_cast<size_t>(n), 1));
}

inline TPolynomial t_factorial(int n) {
  if (n < 0) throw std::invalid_argument("pathlab: t_factorial requires n >= 0");
  TPolynomial r = TPolynomial::constant(1);
  for (int i = 1; i <= n; ++i) r *= t_analog(i);
  return r;
}

/// E_n(t): alternating permutations s1 > s2 < s3 > ... of [n], each weighted by
/// t^{number of 31-2 patterns}. A 31-2 pattern is a pair (i, j) with
/// i + 1 < j and s_{i+1} < s_j < s_i.
inline TPolynomial euler_t(int n) {
  if (n < 1) throw std::invalid_argument("pathlab: euler_t requires n >= 1");
  std::vector<int> s(static_cast<size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  TPolynomial r;
  do {
    bool alternating = true;
    for (int i = 0; i + 1 < n && alternating; ++i)
      alternating = (i % 2 == 0) ? s[i] > s[i + 1] : s[i] < s[i + 1];
    if (!alternating) continue;
    int patterns = 0;
    for (int i = 0; i + 2 < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (s[i + 1] < s[j] && s[j] < s[i]) ++patterns;
    r.add_term(patterns, 1);
  } while (std::next_permutation(s.begin(), s.end()));
  return r;
}

// JSON: {"var":"t","coeffs":[...]} and {"vars":["q","t"],"terms":[[dq,dt,c],...]}.

inline void to_json(nlohmann::json& j, const TPolynomial& p) {
  j = nlohmann::json{{"var", "t"}, {"coeffs", p.coeffs()}};
}

inline void from_json(const nlohmann::json& j, TPolynomial& p) {
  if (j.at("var").get<std::string>() != "t") throw std::invalid_argument("pathlab: expected var \"t\"");
  p = TPolynomial(j.at("coeffs").get<std::vector<Coeff>>());
}

inline void to_json(nlohmann::json& j, const QTPolynomial& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c});
  j = nlohmann::json{{"vars", {"q", "t"}}, {"terms", std::move(terms)}};
}

inline void from_json(const nlohmann::json& j, QTPolynomial& p) {
  if (j.at("vars") != nlohmann::json{"q", "t"}) throw std::invalid_argument("pathlab: expected vars [\"q\",\"t\"]");
  p = QTPolynomial();
  for (const auto& term : j.at("terms")) p.add_term(term.at(0).get<int>(), term.at(1).get<int>(), term.at(2).get<Coeff>());
}

}  // namespace pathlab
