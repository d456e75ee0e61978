#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schub/errors.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// Largest number of points an exhaustive scan may evaluate.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Integer polynomial system f_1 = ... = f_m = 0 in variables x_1..x_s.
struct PolySystem {
  int num_vars = 0;
  std::vector<SparsePolynomial> polynomials;

  PolySystem(int s, std::vector<SparsePolynomial> polys)
      : num_vars(s), polynomials(std::move(polys)) {
    if (num_vars < 0) throw invalid_input_error("num_vars must be >= 0");
    if (polynomials.empty())
      throw invalid_input_error("a polynomial system needs at least one polynomial");
    for (const SparsePolynomial& f : polynomials) {
      if (f.num_vars() > num_vars)
        throw invalid_input_error("polynomial uses a variable beyond x_" +
                                  std::to_string(num_vars));
    }
  }
};

// Certificate: a prime p and a point of F_p^s where the system vanishes.
struct ModPWitness {
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> point;

  friend bool operator==(const ModPWitness& a, const ModPWitness& b) = default;
};

// Deterministic trial-division primality check; ample at desk scale.
inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw composite_prime_error(std::to_string(p) + " is not prime");
}

// p^s, or nullopt on overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, int s) {
  std::uint64_t r = 1;
  for (int i = 0; i < s; ++i) {
    if (r > UINT64_MAX / p) return std::nullopt;
    r *= p;
  }
  return r;
}

// Terms reduced into [0, p); terms whose coefficient vanishes mod p drop out.
struct ReducedSystem {
  struct Poly {
    std::vector<std::pair<std::uint64_t, std::vector<int>>> terms;
  };
  std::vector<Poly> polys;

  ReducedSystem(const PolySystem& sys, std::uint64_t p) {
    polys.reserve(sys.polynomials.size());
    for (const SparsePolynomial& f : sys.polynomials) {
      Poly rf;
      for (const auto& [m, c] : f.terms()) {
        std::uint64_t cr = reduce_mod(c, p);
        if (cr != 0) rf.terms.emplace_back(cr, m.exponents());
      }
      polys.push_back(std::move(rf));
    }
  }

  bool vanishes_at(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    for (const Poly& f : polys) {
      std::uint64_t acc = 0;
      for (const auto& [c, exps] : f.terms) {
        std::uint64_t v = c;
        for (std::size_t k = 0; k < exps.size() && v != 0; ++k)
          if (exps[k] > 0) v = mul_mod(v, pow_mod(point[k], exps[k], p), p);
        acc = (acc + v) % p;
      }
      if (acc != 0) return false;
    }
    return true;
  }
};

// Calls visit on every point of F_p^s in lexicographic order (last
// coordinate fastest); stops early when visit returns false.
template <typename Visitor>
void scan_points(int s, std::uint64_t p, Visitor&& visit) {
  std::vector<std::uint64_t> point(static_cast<std::size_t>(s), 0);
  while (true) {
    if (!visit(point)) return;
    int k = s - 1;
    while (k >= 0 && point[static_cast<std::size_t>(k)] + 1 == p) {
      point[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return;
    ++point[static_cast<std::size_t>(k)];
  }
}

}  // namespace detail

// True iff every f_j vanishes at the certified point mod the certified
// prime.  Rejects composite moduli and dimension mismatches outright.
inline bool verify_witness(const PolySystem& sys, const ModPWitness& cert) {
  detail::require_prime(cert.prime);
  if (static_cast<int>(cert.point.size()) != sys.num_vars)
    throw invalid_input_error("witness point length does not match num_vars");
  for (std::uint64_t v : cert.point) {
    if (v >= cert.prime)
      throw invalid_input_error("witness residue out of range [0, prime)");
  }
  detail::ReducedSystem reduced(sys, cert.prime);
  return reduced.vanishes_at(cert.point, cert.prime);
}

// Exact number of common zeros of the system in F_p^s.  Refuses to scan more
// than `budget` points.
inline std::uint64_t count_solutions_mod_p(const PolySystem& sys, std::uint64_t prime,
                                           std::uint64_t budget = kDefaultBudget) {
  detail::require_prime(prime);
  auto total = detail::checked_pow(prime, sys.num_vars);
  if (!total || *total > budget)
    throw budget_error("scanning " + std::to_string(prime) + "^" +
                       std::to_string(sys.num_vars) + " points exceeds the budget of " +
                       std::to_string(budget));
  detail::ReducedSystem reduced(sys, prime);
  std::uint64_t count = 0;
  detail::scan_points(sys.num_vars, prime, [&](const std::vector<std::uint64_t>& pt) {
    if (reduced.vanishes_at(pt, prime)) ++count;
    return true;
  });
  return count;
}

// Scans F_p^s for each listed prime in order and returns the first point
// where the whole system vanishes (re-verified before returning).  Primes
// whose scan would blow the budget are skipped; if no witness turns up and
// anything was skipped, that is reported as a budget error rather than a
// (possibly wrong) "none".
inline std::optional<ModPWitness> search_witness(const PolySystem& sys,
                                                 const std::vector<std::uint64_t>& primes,
                                                 std::uint64_t budget = kDefaultBudget) {
  bool skipped = false;
  for (std::uint64_t p : primes) {
    detail::require_prime(p);
    auto total = detail::checked_pow(p, sys.num_vars);
    if (!total || *total > budget) {
      skipped = true;
      continue;
    }
    detail::ReducedSystem reduced(sys, p);
    std::optional<ModPWitness> found;
    detail::scan_points(sys.num_vars, p, [&](const std::vector<std::uint64_t>& pt) {
      if (reduced.vanishes_at(pt, p)) {
        found = ModPWitness{p, pt};
        return false;
      }
      return true;
    });
    if (found) {
      if (!verify_witness(sys, *found))
        throw internal_error("search produced a witness that fails verification");
      return found;
    }
  }
  if (skipped)
    throw budget_error("some listed primes exceeded the budget of " +
                       std::to_string(budget) + " points and no witness was found");
  return std::nullopt;
}

}  // namespace schub
