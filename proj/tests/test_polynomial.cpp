#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schub/polynomial.hpp"
#include "test_util.hpp"

using schub::divided_difference;
using schub::evaluate_all_ones;
using schub::evaluate_mod_p;
using schub::Integer;
using schub::lex_min_monomial;
using schub::Monomial;
using schub::parse_polynomial;
using schub::SparsePolynomial;
using schub::swap_variables;
using schub::to_string;
using testutil::random_polynomial;

namespace {
const SparsePolynomial x1 = SparsePolynomial::variable(1);
const SparsePolynomial x2 = SparsePolynomial::variable(2);
const SparsePolynomial x3 = SparsePolynomial::variable(3);
}  // namespace

TEST_CASE("ring operation examples") {
  CHECK(x1 * x1 == SparsePolynomial::variable(1, 2));
  CHECK((x1 + SparsePolynomial::zero()) == x1);
  SparsePolynomial sq = (x1 + x2) * (x1 + x2);
  CHECK(sq == SparsePolynomial::variable(1, 2) + 2 * (x1 * x2) +
                  SparsePolynomial::variable(2, 2));
  CHECK((x1 - x1).is_zero());
}

TEST_CASE("coefficient lookup") {
  SparsePolynomial p = SparsePolynomial::variable(1, 2) + 3 * (x1 * x2);
  CHECK(p.coefficient(Monomial({1, 1})) == 3);
  CHECK(SparsePolynomial::variable(1, 2).coefficient(Monomial({0, 2})) == 0);
}

TEST_CASE("swap_variables exchanges adjacent exponents") {
  CHECK(swap_variables(x1, 1) == x2);
  CHECK(swap_variables(x1 * x2, 1) == x1 * x2);
  CHECK(swap_variables(SparsePolynomial::variable(1, 2) * x2, 2) ==
        SparsePolynomial::variable(1, 2) * x3);
}

TEST_CASE("divided difference examples") {
  CHECK(divided_difference(x1, 1) == SparsePolynomial::constant(1));
  CHECK(divided_difference(x1 * x2, 1).is_zero());
  CHECK(divided_difference(SparsePolynomial::variable(1, 2), 1) == x1 + x2);
}

TEST_CASE("divided difference relations on random polynomials") {
  std::mt19937 rng(20240701);
  for (int trial = 0; trial < 60; ++trial) {
    SparsePolynomial p = random_polynomial(rng, 6, 6, 50);
    // nilpotence
    CHECK(divided_difference(divided_difference(p, 2), 2).is_zero());
    // commutation at distance >= 2
    CHECK(divided_difference(divided_difference(p, 1), 3) ==
          divided_difference(divided_difference(p, 3), 1));
    // braid relation
    SparsePolynomial lhs =
        divided_difference(divided_difference(divided_difference(p, 1), 2), 1);
    SparsePolynomial rhs =
        divided_difference(divided_difference(divided_difference(p, 2), 1), 2);
    CHECK(lhs == rhs);
    // annihilation exactly on symmetric input
    int i = 1 + trial % 4;
    bool symmetric = swap_variables(p, i) == p;
    CHECK(divided_difference(p, i).is_zero() == symmetric);
  }
}

TEST_CASE("divided difference drops homogeneous degree by one") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    // random homogeneous polynomial of degree d
    std::uniform_int_distribution<int> deg(1, 5);
    int d = deg(rng);
    SparsePolynomial p;
    for (int t = 0; t < 5; ++t) {
      std::vector<int> exps(4, 0);
      int left = d;
      for (int k = 0; k < 3; ++k) {
        int e = std::uniform_int_distribution<int>(0, left)(rng);
        exps[static_cast<std::size_t>(k)] = e;
        left -= e;
      }
      exps[3] = left;
      p.add_term(Monomial(std::move(exps)),
                 std::uniform_int_distribution<int>(-9, 9)(rng));
    }
    SparsePolynomial q = divided_difference(p, 2);
    if (!q.is_zero()) {
      CHECK(q.is_homogeneous());
      CHECK(q.total_degree() == d - 1);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    SparsePolynomial a = random_polynomial(rng, 4, 4, 20);
    SparsePolynomial b = random_polynomial(rng, 4, 4, 20);
    SparsePolynomial c = random_polynomial(rng, 4, 4, 20);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate_all_ones(x1 + x2) == 2);
  CHECK(evaluate_all_ones(SparsePolynomial::variable(1, 2) * x2) == 1);
  SparsePolynomial p = SparsePolynomial::variable(1, 2) + SparsePolynomial::constant(1);
  CHECK(evaluate_mod_p(p, {1}, 2) == 0);
  CHECK(evaluate_mod_p(p, {1}, 3) == 2);
  CHECK_THROWS_AS(evaluate_mod_p(p, {1}, 1), schub::invalid_input_error);
  CHECK_THROWS_AS(evaluate_mod_p(x1 * x2, {1}, 5), schub::invalid_input_error);
  // negative coefficients reduce into [0, p)
  CHECK(evaluate_mod_p(SparsePolynomial::constant(-1), {}, 7) == 6);
}

TEST_CASE("lex-min monomial") {
  SparsePolynomial p = SparsePolynomial::variable(1, 2) + x1 * x2 +
                       SparsePolynomial::variable(2, 2);
  CHECK(lex_min_monomial(p) == Monomial({0, 2}));
  CHECK(lex_min_monomial(x1) == Monomial({1}));
  SparsePolynomial q = SparsePolynomial::variable(1, 2) + x1 * x2 + x1 * x3;
  CHECK(lex_min_monomial(q) == Monomial({1, 0, 1}));
  CHECK_THROWS_AS(lex_min_monomial(SparsePolynomial::zero()), schub::invalid_input_error);
}

TEST_CASE("printer output") {
  CHECK(to_string(SparsePolynomial::zero()) == "0");
  CHECK(to_string(SparsePolynomial::constant(-7)) == "-7");
  CHECK(to_string(SparsePolynomial::variable(1, 2) * x2) == "x1^2*x2");
  CHECK(to_string(x1 + x2) == "x1 + x2");
  CHECK(to_string(x2 - x1) == "-x1 + x2");
  CHECK(to_string(3 * (SparsePolynomial::variable(1, 2) * x2) + x3) ==
        "3*x1^2*x2 + x3");
}

TEST_CASE("parser accepts the printed form and rejects garbage") {
  CHECK(parse_polynomial("3*x1^2*x2 + x3") ==
        3 * (SparsePolynomial::variable(1, 2) * x2) + x3);
  CHECK(parse_polynomial("0").is_zero());
  CHECK(parse_polynomial(" - x1 + x2 ") == x2 - x1);
  CHECK(parse_polynomial("x12") == SparsePolynomial::variable(12));
  CHECK_THROWS_AS(parse_polynomial(""), schub::parse_error);
  CHECK_THROWS_AS(parse_polynomial("x"), schub::parse_error);
  CHECK_THROWS_AS(parse_polynomial("2x1"), schub::parse_error);
  CHECK_THROWS_AS(parse_polynomial("x1^"), schub::parse_error);
  CHECK_THROWS_AS(parse_polynomial("x1 +"), schub::parse_error);
  CHECK_THROWS_AS(parse_polynomial("x0"), schub::parse_error);
}

TEST_CASE("print/parse round-trip on random polynomials") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    SparsePolynomial p = random_polynomial(rng, 5, 6, 50);
    CHECK(parse_polynomial(to_string(p)) == p);
  }
}
