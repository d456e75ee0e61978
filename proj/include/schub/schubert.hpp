#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "schub/errors.hpp"
#include "schub/integer.hpp"
#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// Which ascent the downward recursion removes first.  Any fixed choice gives
// the same polynomials; keeping two lets tests check exactly that.
enum class DescentPolicy {
  kHighestAscent,
  kLowestAscent,
};

// Memoized construction of Schubert polynomials: the staircase monomial at
// the long permutation, pushed down by divided differences along descents.
// Reads take a shared lock; results are published once under an exclusive
// lock, so racing recomputations are benign and callers may share one cache
// across threads.  Returned references stay valid for the cache lifetime.
class SchubertCache {
 public:
  explicit SchubertCache(DescentPolicy policy = DescentPolicy::kHighestAscent)
      : policy_(policy) {}

  const SparsePolynomial& polynomial(const Permutation& w,
                                     int rank_bound = kDefaultRankBound) {
    std::vector<int> win = w.trimmed_window();
    if (static_cast<int>(win.size()) > rank_bound)
      throw rank_bound_error("rank " + std::to_string(win.size()) +
                             " exceeds bound " + std::to_string(rank_bound));
    return lookup_or_compute(win);
  }

 private:
  const SparsePolynomial& lookup_or_compute(const std::vector<int>& win) {
    {
      std::shared_lock<std::shared_mutex> lock(mu_);
      auto it = memo_.find(win);
      if (it != memo_.end()) return it->second;
    }
    SparsePolynomial value = compute(win);
    std::unique_lock<std::shared_mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(win, std::move(value));
    return it->second;
  }

  SparsePolynomial compute(const std::vector<int>& win) {
    const int n = static_cast<int>(win.size());
    if (n == 1) return SparsePolynomial::constant(1);
    bool is_longest = true;
    for (int i = 0; i < n; ++i) {
      if (win[static_cast<std::size_t>(i)] != n - i) {
        is_longest = false;
        break;
      }
    }
    if (is_longest) {
      std::vector<int> exps(static_cast<std::size_t>(n - 1));
      for (int i = 0; i < n - 1; ++i) exps[static_cast<std::size_t>(i)] = n - 1 - i;
      return SparsePolynomial::monomial(Monomial(std::move(exps)), 1);
    }
    // Any ascent i keeps the chain inside S_n: w s_i is longer and its
    // Schubert polynomial maps back down through the divided difference.
    int ascent = -1;
    for (int i = 1; i < n; ++i) {
      if (win[static_cast<std::size_t>(i - 1)] < win[static_cast<std::size_t>(i)]) {
        ascent = i;
        if (policy_ == DescentPolicy::kLowestAscent) break;
      }
    }
    std::vector<int> up = win;
    std::swap(up[static_cast<std::size_t>(ascent - 1)], up[static_cast<std::size_t>(ascent)]);
    while (up.size() > 1 && up.back() == static_cast<int>(up.size())) up.pop_back();
    return divided_difference(lookup_or_compute(up), ascent);
  }

  DescentPolicy policy_;
  std::shared_mutex mu_;
  std::map<std::vector<int>, SparsePolynomial> memo_;
};

inline SchubertCache& default_schubert_cache() {
  static SchubertCache cache;
  return cache;
}

inline const SparsePolynomial& schubert_polynomial(
    const Permutation& w, int rank_bound = kDefaultRankBound,
    SchubertCache& cache = default_schubert_cache()) {
  return cache.polynomial(w, rank_bound);
}

// Schubert-Kostka number [x^alpha] Sch_w.
inline Integer schubert_kostka(const Permutation& w, const Monomial& alpha,
                               int rank_bound = kDefaultRankBound,
                               SchubertCache& cache = default_schubert_cache()) {
  return cache.polynomial(w, rank_bound).coefficient(alpha);
}

// Expansion of a polynomial in the Schubert basis.  Coefficients are stored
// only when nonzero; `is_signed` marks expansions with a negative entry,
// which can only happen for general integer input.
struct SchubertExpansion {
  std::map<Permutation, Integer> terms;
  int ambient_rank = 1;
  bool is_signed = false;

  Integer coefficient(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const SchubertExpansion& a, const SchubertExpansion& b) {
    return a.terms == b.terms && a.is_signed == b.is_signed;
  }
};

namespace detail {

// Smallest rank whose Lehmer codes admit `exps` as a prefix.
inline Permutation permutation_of_lex_min(const Monomial& m) {
  const auto& exps = m.exponents();
  int n = static_cast<int>(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i)
    n = std::max(n, static_cast<int>(i) + 1 + exps[i]);
  if (n == 0) return Permutation::identity();
  LehmerCode c;
  c.entries.assign(exps.begin(), exps.end());
  c.entries.resize(static_cast<std::size_t>(n), 0);
  return code_inverse(c);
}

inline void peel_homogeneous(SparsePolynomial h, int rank_bound,
                             SchubertCache& cache,
                             std::map<Permutation, Integer>& out) {
  while (!h.is_zero()) {
    const Monomial m = lex_min_monomial(h);
    Permutation w = detail::permutation_of_lex_min(m);
    if (w.trimmed().rank() > rank_bound)
      throw rank_bound_error("expansion support left the configured rank bound");
    Integer c = h.coefficient(m);
    h.add_scaled(cache.polynomial(w, rank_bound), -c);
    if (h.coefficient(m) != 0)
      throw internal_error("peel failed to clear the lex-min monomial");
    out.emplace(std::move(w), std::move(c));
  }
}

}  // namespace detail

// Greedy peeling: repeatedly remove c * Sch_w for the permutation w whose
// code is the lex-min monomial.  Inhomogeneous input is peeled one
// homogeneous component at a time, lowest degree first.  The round-trip
// identity sum(c_w Sch_w) == p is re-checked before returning.
inline SchubertExpansion expand_in_schubert_basis(
    const SparsePolynomial& p, int rank_bound = kDefaultRankBound,
    SchubertCache& cache = default_schubert_cache()) {
  SchubertExpansion out;
  for (auto& [deg, comp] : homogeneous_components(p))
    detail::peel_homogeneous(comp, rank_bound, cache, out.terms);
  SparsePolynomial rebuilt;
  for (const auto& [w, c] : out.terms) {
    rebuilt.add_scaled(cache.polynomial(w, rank_bound), c);
    if (c < 0) out.is_signed = true;
    out.ambient_rank = std::max(out.ambient_rank, w.trimmed().rank());
  }
  if (!(rebuilt == p))
    throw internal_error("Schubert expansion failed its round-trip check");
  return out;
}

// Expansion of Sch_u * Sch_v.  The support lies in S_{n_u + n_v} (windows
// trimmed first); that rank is recorded and verified.
inline SchubertExpansion schubert_product_expansion(
    const Permutation& u, const Permutation& v,
    int rank_bound = kDefaultRankBound,
    SchubertCache& cache = default_schubert_cache()) {
  const int ambient = u.trimmed().rank() + v.trimmed().rank();
  if (ambient > rank_bound)
    throw rank_bound_error("product ambient rank " + std::to_string(ambient) +
                           " exceeds bound " + std::to_string(rank_bound));
  SparsePolynomial prod = cache.polynomial(u, rank_bound) * cache.polynomial(v, rank_bound);
  SchubertExpansion e = expand_in_schubert_basis(prod, rank_bound, cache);
  if (e.is_signed)
    throw internal_error("product expansion produced a negative coefficient");
  for (const auto& [w, c] : e.terms) {
    if (w.trimmed().rank() > ambient)
      throw internal_error("product expansion support exceeds S_{n_u+n_v}");
  }
  e.ambient_rank = ambient;
  return e;
}

// Structure constant c^w_{u,v} in Sch_u * Sch_v = sum c^w_{u,v} Sch_w.
inline Integer schubert_coefficient(const Permutation& u, const Permutation& v,
                                    const Permutation& w,
                                    int rank_bound = kDefaultRankBound,
                                    SchubertCache& cache = default_schubert_cache()) {
  if (w.length() != u.length() + v.length()) return 0;
  return schubert_product_expansion(u, v, rank_bound, cache).coefficient(w);
}

// Decides c^w_{u,v} > 0.  The full expansion (available via
// schubert_product_expansion) is the desk-scale evidence object.
inline bool is_positive(const Permutation& u, const Permutation& v,
                        const Permutation& w,
                        int rank_bound = kDefaultRankBound,
                        SchubertCache& cache = default_schubert_cache()) {
  return schubert_coefficient(u, v, w, rank_bound, cache) > 0;
}

// Monk's rule: Sch_{s_r} * Sch_w = sum of Sch_{w t_{ik}} over i <= r < k
// with length(w t_{ik}) = length(w) + 1.  Used as an independent oracle for
// the expansion path.
inline SchubertExpansion monk_multiply(int r, const Permutation& w,
                                       int rank_bound = kDefaultRankBound) {
  if (r < 1) throw invalid_input_error("monk_multiply: r must be >= 1");
  const Permutation base = w.trimmed();
  const int top = std::max(base.rank(), r) + 1;
  if (top > rank_bound)
    throw rank_bound_error("monk_multiply needs rank " + std::to_string(top) +
                           " above bound " + std::to_string(rank_bound));
  const int len = base.length();
  SchubertExpansion out;
  out.ambient_rank = top;
  for (int i = 1; i <= r; ++i) {
    for (int k = r + 1; k <= top; ++k) {
      Permutation cand = base.right_multiply_transposition(i, k);
      if (cand.length() == len + 1) out.terms.emplace(cand.trimmed(), 1);
    }
  }
  return out;
}

}  // namespace schub
