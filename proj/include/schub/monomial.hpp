#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "schub/errors.hpp"

namespace schub {

// Exponent vector in canonical form: entry i-1 is the power of x_i and
// trailing zeros are trimmed, so equal monomials compare equal bytewise.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_)
      if (v < 0) throw invalid_input_error("negative exponent in monomial");
    trim();
  }

  static Monomial one() { return Monomial(); }

  static Monomial variable(int i, int power = 1) {
    if (i < 1) throw invalid_input_error("variable index must be >= 1");
    if (power < 0) throw invalid_input_error("negative exponent in monomial");
    std::vector<int> e(static_cast<std::size_t>(i), 0);
    e[static_cast<std::size_t>(i - 1)] = power;
    return Monomial(std::move(e));
  }

  const std::vector<int>& exponents() const { return e_; }

  bool is_one() const { return e_.empty(); }

  // Power of x_i; zero beyond the stored vector.
  int exponent(int i) const {
    if (i < 1) throw invalid_input_error("variable index must be >= 1");
    return i <= static_cast<int>(e_.size()) ? e_[static_cast<std::size_t>(i - 1)] : 0;
  }

  // Highest variable index with a nonzero exponent (0 for the unit monomial).
  int num_vars() const { return static_cast<int>(e_.size()); }

  int degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
  }

  Monomial with_exponent(int i, int value) const {
    std::vector<int> e = e_;
    if (static_cast<int>(e.size()) < i) e.resize(static_cast<std::size_t>(i), 0);
    e[static_cast<std::size_t>(i - 1)] = value;
    return Monomial(std::move(e));
  }

  // Exchange the powers of x_i and x_{i+1}.
  Monomial swapped(int i) const {
    int a = exponent(i);
    int b = exponent(i + 1);
    if (a == b) return *this;
    return with_exponent(i, b).with_exponent(i + 1, a);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }

  std::vector<int> e_;
};

// x1-major lexicographic order: compare the power of x1 first, smaller power
// sorts first; ties move to x2, and so on.  Missing entries count as zero.
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
      int va = i < ea.size() ? ea[i] : 0;
      int vb = i < eb.size() ? eb[i] : 0;
      if (va != vb) return va < vb;
    }
    return false;
  }
};

inline bool lex_less(const Monomial& a, const Monomial& b) {
  return MonomialLexLess{}(a, b);
}

}  // namespace schub
