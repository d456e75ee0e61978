#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schub/schubert.hpp"
#include "test_util.hpp"

using schub::DescentPolicy;
using schub::expand_in_schubert_basis;
using schub::Integer;
using schub::is_positive;
using schub::Monomial;
using schub::monk_multiply;
using schub::parse_permutation;
using schub::Permutation;
using schub::schubert_coefficient;
using schub::schubert_kostka;
using schub::schubert_polynomial;
using schub::schubert_product_expansion;
using schub::SchubertCache;
using schub::SchubertExpansion;
using schub::SparsePolynomial;
using testutil::all_permutations;

TEST_CASE("base cases") {
  CHECK(schubert_polynomial(Permutation::identity()) == SparsePolynomial::constant(1));
  CHECK(schub::to_string(schubert_polynomial(parse_permutation("321"))) == "x1^2*x2");
  CHECK(schub::to_string(schubert_polynomial(parse_permutation("132"))) == "x1 + x2");
  CHECK(schubert_polynomial(parse_permutation("312")) == SparsePolynomial::variable(1, 2));
  CHECK(schubert_polynomial(parse_permutation("213")) == SparsePolynomial::variable(1));
}

TEST_CASE("construction is stable under trailing fixed points") {
  CHECK(schubert_polynomial(parse_permutation("2134")) ==
        schubert_polynomial(parse_permutation("21")));
}

TEST_CASE("Schubert-Kostka numbers") {
  CHECK(schubert_kostka(parse_permutation("321"), Monomial({2, 1})) == 1);
  CHECK(schubert_kostka(parse_permutation("132"), Monomial({1, 0})) == 1);
  CHECK(schubert_kostka(parse_permutation("132"), Monomial({2, 0})) == 0);
}

TEST_CASE("homogeneity, nonnegativity, and the lex-min code property up to S_5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const SparsePolynomial& p = schubert_polynomial(w);
      CHECK(p.is_homogeneous());
      if (!p.is_zero()) CHECK(p.total_degree() == w.length());
      for (const auto& [m, c] : p.terms()) CHECK(c > 0);
      std::vector<int> code = w.code().entries;
      while (!code.empty() && code.back() == 0) code.pop_back();
      CHECK(schub::lex_min_monomial(p) == Monomial(std::move(code)));
      CHECK(p.coefficient(schub::lex_min_monomial(p)) == 1);
    }
  }
}

TEST_CASE("descent-choice policy does not matter, exhaustively in S_4") {
  SchubertCache high(DescentPolicy::kHighestAscent);
  SchubertCache low(DescentPolicy::kLowestAscent);
  for (const Permutation& w : all_permutations(4))
    CHECK(high.polynomial(w) == low.polynomial(w));
}

TEST_CASE("expansion examples") {
  SchubertExpansion e = expand_in_schubert_basis(SparsePolynomial::variable(1, 2));
  CHECK(e.terms.size() == 1);
  CHECK(e.coefficient(parse_permutation("312")) == 1);
  CHECK_FALSE(e.is_signed);

  SparsePolynomial s = SparsePolynomial::variable(1) + SparsePolynomial::variable(2);
  SchubertExpansion sq = expand_in_schubert_basis(s * s);
  CHECK(sq.terms.size() == 2);
  CHECK(sq.coefficient(parse_permutation("1423")) == 1);
  CHECK(sq.coefficient(parse_permutation("231")) == 1);

  CHECK(expand_in_schubert_basis(SparsePolynomial::zero()).terms.empty());
}

TEST_CASE("inhomogeneous input peels by component") {
  SparsePolynomial p = SparsePolynomial::constant(1) + SparsePolynomial::variable(1) +
                       SparsePolynomial::variable(1, 2);
  SchubertExpansion e = expand_in_schubert_basis(p);
  CHECK(e.terms.size() == 3);
  CHECK(e.coefficient(Permutation::identity()) == 1);
  CHECK(e.coefficient(parse_permutation("21")) == 1);
  CHECK(e.coefficient(parse_permutation("312")) == 1);
  CHECK_FALSE(e.is_signed);
}

TEST_CASE("signed expansions are flagged") {
  SchubertExpansion e = expand_in_schubert_basis(SparsePolynomial::variable(2));
  CHECK(e.is_signed);
  CHECK(e.coefficient(parse_permutation("132")) == 1);
  CHECK(e.coefficient(parse_permutation("21")) == -1);
}

TEST_CASE("structure constants") {
  CHECK(schubert_coefficient(parse_permutation("213"), parse_permutation("213"),
                             parse_permutation("312")) == 1);
  CHECK(schubert_coefficient(parse_permutation("132"), parse_permutation("132"),
                             parse_permutation("231")) == 1);
  Permutation v = parse_permutation("3142");
  CHECK(schubert_coefficient(Permutation::identity(), v, v) == 1);
  // degree mismatch short-circuits to zero
  CHECK(schubert_coefficient(parse_permutation("213"), parse_permutation("213"),
                             parse_permutation("321")) == 0);
}

TEST_CASE("positivity decisions") {
  CHECK(is_positive(parse_permutation("213"), parse_permutation("213"),
                    parse_permutation("312")));
  CHECK_FALSE(is_positive(parse_permutation("213"), parse_permutation("213"),
                          parse_permutation("231")));
  Permutation v = parse_permutation("231");
  CHECK(is_positive(Permutation::identity(), v, v));
}

TEST_CASE("product expansions are positive, homogeneous, and fit S_{n_u+n_v}") {
  std::mt19937 rng(31337);
  std::vector<Permutation> s4 = all_permutations(4);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation& u = s4[pick(rng)];
    const Permutation& v = s4[pick(rng)];
    SchubertExpansion e = schubert_product_expansion(u, v);
    CHECK_FALSE(e.is_signed);
    CHECK(e.ambient_rank == u.trimmed().rank() + v.trimmed().rank());
    for (const auto& [w, c] : e.terms) {
      CHECK(c > 0);
      CHECK(w.length() == u.length() + v.length());
      CHECK(w.trimmed().rank() <= e.ambient_rank);
    }
  }
}

TEST_CASE("basis round-trip on random nonnegative combinations") {
  std::mt19937 rng(555);
  std::vector<Permutation> s4 = all_permutations(4);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<Permutation, Integer> combo;
    int supports = 1 + trial % 6;
    for (int t = 0; t < supports; ++t) combo[s4[pick(rng)]] = coeff(rng);
    SparsePolynomial p;
    for (const auto& [w, c] : combo) p.add_scaled(schubert_polynomial(w), c);
    SchubertExpansion e = expand_in_schubert_basis(p);
    CHECK_FALSE(e.is_signed);
    CHECK(e.terms == combo);
  }
}

TEST_CASE("coefficients are stable under stabilization") {
  Permutation u = parse_permutation("132");
  Permutation v = parse_permutation("132");
  Permutation w = parse_permutation("231");
  Integer base = schubert_coefficient(u, v, w);
  CHECK(schubert_coefficient(u.stabilized(6), v.stabilized(5), w.stabilized(7)) == base);
}

TEST_CASE("Monk rule") {
  SchubertExpansion a = monk_multiply(1, Permutation::identity());
  CHECK(a.terms.size() == 1);
  CHECK(a.coefficient(parse_permutation("21")) == 1);

  SchubertExpansion b = monk_multiply(1, parse_permutation("213"));
  CHECK(b.terms.size() == 1);
  CHECK(b.coefficient(parse_permutation("312")) == 1);

  SchubertExpansion c = monk_multiply(2, parse_permutation("1324"));
  CHECK(c.terms.size() == 2);
  CHECK(c.coefficient(parse_permutation("2314")) == 1);
  CHECK(c.coefficient(parse_permutation("1423")) == 1);
}

TEST_CASE("Monk rule agrees with the expansion route, exhaustively in S_3") {
  for (const Permutation& w : all_permutations(3)) {
    for (int r = 1; r <= 2; ++r) {
      SchubertExpansion monk = monk_multiply(r, w);
      SchubertExpansion via =
          schubert_product_expansion(Permutation::simple_transposition(r), w);
      CHECK(monk.terms == via.terms);
    }
  }
}

TEST_CASE("rank bound violations are hard errors") {
  CHECK_THROWS_AS(schubert_polynomial(Permutation::long_permutation(5), 4),
                  schub::rank_bound_error);
  CHECK_THROWS_AS(schubert_product_expansion(parse_permutation("321"),
                                             parse_permutation("321"), 5),
                  schub::rank_bound_error);
  CHECK_THROWS_AS(monk_multiply(9, Permutation::identity(), 8), schub::rank_bound_error);
  CHECK_THROWS_AS(
      expand_in_schubert_basis(SparsePolynomial::variable(1, 9), 8),
      schub::rank_bound_error);
}
