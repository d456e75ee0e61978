#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schub/errors.hpp"
#include "schub/integer.hpp"
#include "schub/monomial.hpp"

namespace schub {

// Sparse multivariate polynomial with exact integer coefficients.  Terms are
// kept sorted in ascending x1-major lexicographic order and never store a
// zero coefficient, so iteration order (and any output derived from it) is
// deterministic.
class SparsePolynomial {
 public:
  using Term = std::pair<Monomial, Integer>;
  using TermList = std::vector<Term>;

  SparsePolynomial() = default;

  static SparsePolynomial zero() { return SparsePolynomial(); }

  static SparsePolynomial constant(Integer c) {
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
    return p;
  }

  static SparsePolynomial monomial(Monomial m, Integer c) {
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static SparsePolynomial variable(int i, int power = 1) {
    return monomial(Monomial::variable(i, power), 1);
  }

  bool is_zero() const { return terms_.empty(); }

  std::size_t term_count() const { return terms_.size(); }

  const TermList& terms() const { return terms_; }

  // Stored coefficient of m, or 0 when the term is absent.
  Integer coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                 return lex_less(t.first, key);
                               });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  // Maximal total degree over the terms; 0 for the zero polynomial.
  int total_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const Term& t : terms_)
      if (t.first.degree() != d) return false;
    return true;
  }

  // Highest variable index appearing in any term.
  int num_vars() const {
    int n = 0;
    for (const Term& t : terms_) n = std::max(n, t.first.num_vars());
    return n;
  }

  // Accumulates c * m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    if (terms_.empty() || lex_less(terms_.back().first, m)) {
      terms_.emplace_back(m, c);
      return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) {
                                 return lex_less(t.first, key);
                               });
    if (it != terms_.end() && it->first == m) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term(m, c));
    }
  }

  // *this += scale * q, as a single sorted merge.
  void add_scaled(const SparsePolynomial& q, const Integer& scale) {
    if (scale == 0 || q.is_zero()) return;
    TermList merged;
    merged.reserve(terms_.size() + q.terms_.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < terms_.size() && b < q.terms_.size()) {
      if (lex_less(terms_[a].first, q.terms_[b].first)) {
        merged.push_back(std::move(terms_[a++]));
      } else if (lex_less(q.terms_[b].first, terms_[a].first)) {
        merged.emplace_back(q.terms_[b].first, q.terms_[b].second * scale);
        ++b;
      } else {
        Integer c = terms_[a].second + q.terms_[b].second * scale;
        if (c != 0) merged.emplace_back(std::move(terms_[a].first), std::move(c));
        ++a;
        ++b;
      }
    }
    for (; a < terms_.size(); ++a) merged.push_back(std::move(terms_[a]));
    for (; b < q.terms_.size(); ++b)
      merged.emplace_back(q.terms_[b].first, q.terms_[b].second * scale);
    terms_ = std::move(merged);
  }

  SparsePolynomial& operator+=(const SparsePolynomial& q) {
    add_scaled(q, 1);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& q) {
    add_scaled(q, -1);
    return *this;
  }

  SparsePolynomial& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (Term& t : terms_) t.second *= s;
    }
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    a += b;
    return a;
  }

  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    a -= b;
    return a;
  }

  friend SparsePolynomial operator-(SparsePolynomial a) {
    for (Term& t : a.terms_) t.second = -t.second;
    return a;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return SparsePolynomial();
    std::map<Monomial, Integer, MonomialLexLess> acc;
    for (const Term& ta : a.terms_) {
      for (const Term& tb : b.terms_) {
        Integer& slot = acc[ta.first * tb.first];
        slot += ta.second * tb.second;
      }
    }
    SparsePolynomial out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) out.terms_.emplace_back(m, std::move(c));
    return out;
  }

  friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) {
    a *= s;
    return a;
  }

  friend SparsePolynomial operator*(const Integer& s, SparsePolynomial a) {
    a *= s;
    return a;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Multiplies every term by x_i; a uniform exponent shift keeps the order.
  SparsePolynomial shifted_by_variable(int i) const {
    SparsePolynomial out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      out.terms_.emplace_back(t.first.with_exponent(i, t.first.exponent(i) + 1),
                              t.second);
    return out;
  }

 private:
  TermList terms_;
};

// Exchanges x_i and x_{i+1} in every term.
inline SparsePolynomial swap_variables(const SparsePolynomial& p, int i) {
  if (i < 1) throw invalid_input_error("swap_variables: index must be >= 1");
  std::vector<SparsePolynomial::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.emplace_back(t.first.swapped(i), t.second);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  SparsePolynomial out;
  for (auto& t : terms) out.add_term(t.first, t.second);
  return out;
}

// Divided difference (p - s_i p) / (x_i - x_{i+1}).  The numerator is
// antisymmetric in x_i, x_{i+1}, so long division along the x_i direction is
// exact; a nonzero remainder would mean broken arithmetic.
inline SparsePolynomial divided_difference(const SparsePolynomial& p, int i) {
  if (i < 1) throw invalid_input_error("divided_difference: index must be >= 1");
  SparsePolynomial rem = p;
  rem -= swap_variables(p, i);
  SparsePolynomial quotient;
  while (!rem.is_zero()) {
    int d = 0;
    for (const auto& t : rem.terms()) d = std::max(d, t.first.exponent(i));
    if (d == 0)
      throw internal_error("divided_difference: nonzero remainder survived");
    SparsePolynomial layer;
    for (const auto& t : rem.terms()) {
      if (t.first.exponent(i) == d)
        layer.add_term(t.first.with_exponent(i, d - 1), t.second);
    }
    quotient += layer;
    rem.add_scaled(layer.shifted_by_variable(i), -1);
    rem.add_scaled(layer.shifted_by_variable(i + 1), 1);
  }
  return quotient;
}

// Substitutes x_i = 1 for every variable.
inline Integer evaluate_all_ones(const SparsePolynomial& p) {
  Integer total = 0;
  for (const auto& t : p.terms()) total += t.second;
  return total;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, int exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t reduce_mod(const Integer& c, std::uint64_t m) {
  Integer r = c % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

// Evaluates p at the given residues modulo `modulus` (>= 2).  The point must
// cover every variable appearing in p.
inline std::uint64_t evaluate_mod_p(const SparsePolynomial& p,
                                    const std::vector<std::uint64_t>& point,
                                    std::uint64_t modulus) {
  if (modulus < 2) throw invalid_input_error("modulus must be >= 2");
  if (p.num_vars() > static_cast<int>(point.size()))
    throw invalid_input_error("evaluation point shorter than the variable set");
  std::uint64_t acc = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = reduce_mod(t.second, modulus);
    const auto& e = t.first.exponents();
    for (std::size_t k = 0; k < e.size() && v != 0; ++k) {
      if (e[k] > 0) v = mul_mod(v, pow_mod(point[k] % modulus, e[k], modulus), modulus);
    }
    acc = (acc + v) % modulus;
  }
  return acc;
}

// Minimal monomial under the x1-major lexicographic order.
inline const Monomial& lex_min_monomial(const SparsePolynomial& p) {
  if (p.is_zero())
    throw invalid_input_error("lex_min_monomial: zero polynomial");
  return p.terms().front().first;
}

// Splits p into homogeneous pieces, keyed (and therefore iterated) by
// ascending total degree.
inline std::map<int, SparsePolynomial> homogeneous_components(const SparsePolynomial& p) {
  std::map<int, SparsePolynomial> comps;
  for (const auto& t : p.terms()) comps[t.first.degree()].add_term(t.first, t.second);
  return comps;
}

// Human-readable form, leading terms first: "3*x1^2*x2 + x3 - 2".
inline std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Monomial& m = it->first;
    Integer c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    if (c != 1 || m.is_one()) body = to_decimal(c);
    const auto& e = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(k + 1);
      if (e[k] > 1) body += "^" + std::to_string(e[k]);
    }
    out += body;
  }
  return out;
}

namespace detail {

inline void parse_poly_factor(const std::string& tok, Integer& coeff, Monomial& mono) {
  if (tok.empty()) throw parse_error("empty factor in polynomial term");
  if (tok[0] == 'x') {
    std::size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (idx.empty()) throw parse_error("variable without index: " + tok);
    for (char ch : idx)
      if (ch < '0' || ch > '9') throw parse_error("bad variable: " + tok);
    int i = std::stoi(idx);
    if (i < 1) throw parse_error("variable index must be >= 1: " + tok);
    int e = 1;
    if (caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp.empty()) throw parse_error("missing exponent: " + tok);
      for (char ch : exp)
        if (ch < '0' || ch > '9') throw parse_error("bad exponent: " + tok);
      e = std::stoi(exp);
    }
    mono = mono * Monomial::variable(i, e);
  } else {
    coeff *= parse_integer(tok);
  }
}

}  // namespace detail

// Parses the textual form produced by to_string (whitespace is ignored).
inline SparsePolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw parse_error("empty polynomial");
  SparsePolynomial out;
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string chunk = s.substr(pos, end - pos);
    if (chunk.empty()) throw parse_error("empty term in polynomial: " + text);
    Integer coeff = sign;
    Monomial mono;
    std::size_t fpos = 0;
    while (fpos <= chunk.size()) {
      std::size_t star = chunk.find('*', fpos);
      std::string tok = chunk.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos);
      detail::parse_poly_factor(tok, coeff, mono);
      if (star == std::string::npos) break;
      fpos = star + 1;
    }
    out.add_term(mono, coeff);
    if (end == s.size()) break;
    sign = s[end] == '-' ? -1 : 1;
    pos = end + 1;
    if (pos == s.size()) throw parse_error("trailing sign in polynomial: " + text);
  }
  return out;
}

}  // namespace schub
