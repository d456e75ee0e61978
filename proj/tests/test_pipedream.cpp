#include <catch2/catch_amalgamated.hpp>

#include "schub/pipedream.hpp"
#include "schub/schubert.hpp"
#include "test_util.hpp"

using schub::evaluate_all_ones;
using schub::Monomial;
using schub::parse_permutation;
using schub::Permutation;
using schub::pipe_dream_polynomial;
using schub::pipe_dreams;
using schub::PipeDream;
using testutil::all_permutations;

TEST_CASE("identity has the single empty dream") {
  std::vector<PipeDream> dreams = pipe_dreams(Permutation::identity());
  REQUIRE(dreams.size() == 1);
  CHECK(dreams[0].crossings.empty());
  CHECK(dreams[0].weight() == Monomial::one());
}

TEST_CASE("long permutation in S_3 fills the whole staircase") {
  std::vector<PipeDream> dreams = pipe_dreams(parse_permutation("321"));
  REQUIRE(dreams.size() == 1);
  CHECK(dreams[0].crossings ==
        std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(dreams[0].weight() == Monomial({2, 1}));
}

TEST_CASE("132 has exactly the two one-crossing dreams") {
  std::vector<PipeDream> dreams = pipe_dreams(parse_permutation("132"));
  REQUIRE(dreams.size() == 2);
  bool saw_row1 = false;
  bool saw_row2 = false;
  for (const PipeDream& d : dreams) {
    REQUIRE(d.crossings.size() == 1);
    if (d.crossings[0] == std::pair<int, int>{1, 2}) saw_row1 = true;
    if (d.crossings[0] == std::pair<int, int>{2, 1}) saw_row2 = true;
  }
  CHECK(saw_row1);
  CHECK(saw_row2);
}

TEST_CASE("weighted sums rebuild the Schubert polynomial, exhaustively in S_4") {
  for (const Permutation& w : all_permutations(4)) {
    const auto& sch = schub::schubert_polynomial(w);
    CHECK(pipe_dream_polynomial(w) == sch);
    CHECK(static_cast<long long>(pipe_dreams(w).size()) == evaluate_all_ones(sch));
    for (const PipeDream& d : pipe_dreams(w))
      CHECK(static_cast<int>(d.crossings.size()) == w.length());
  }
}

TEST_CASE("counts match the all-ones specialization") {
  CHECK(pipe_dreams(parse_permutation("321")).size() == 1);
  CHECK(pipe_dreams(parse_permutation("132")).size() == 2);
}

TEST_CASE("rank bound") {
  CHECK_THROWS_AS(pipe_dreams(Permutation::long_permutation(7), 6),
                  schub::rank_bound_error);
}
