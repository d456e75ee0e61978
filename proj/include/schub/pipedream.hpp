#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schub/monomial.hpp"
#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// Reduced pipe dream (RC-graph) for a permutation in S_n: a set of "cross"
// tiles inside the staircase { (i,j) : i + j <= n }, every other staircase
// cell an "elbow".  Strands enter on the left of row i and leave from the
// top of column w(i); reduced means no two strands cross twice, which for a
// realizing filling is equivalent to #crossings = length(w).
struct PipeDream {
  int n = 1;
  std::vector<std::pair<int, int>> crossings;  // row-major order

  // prod over crossings (i, j) of x_i
  Monomial weight() const {
    std::vector<int> e;
    for (const auto& [i, j] : crossings) {
      if (static_cast<int>(e.size()) < i) e.resize(static_cast<std::size_t>(i), 0);
      ++e[static_cast<std::size_t>(i - 1)];
    }
    return Monomial(std::move(e));
  }

  friend bool operator==(const PipeDream& a, const PipeDream& b) = default;
};

namespace detail {

// Follows every strand through the tiles.  Cells on the anti-diagonal
// i + j = n + 1 are forced elbows; a strand moving east through an elbow
// turns north, a strand moving north through an elbow turns east.
inline std::vector<int> pipe_dream_wiring(const std::vector<char>& cross, int n) {
  auto is_cross = [&](int i, int j) {
    return i + j <= n && cross[static_cast<std::size_t>((i - 1) * n + (j - 1))] != 0;
  };
  std::vector<int> wiring(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    int i = r;
    int j = 1;
    bool east = true;
    while (i >= 1) {
      if (is_cross(i, j)) {
        if (east) {
          ++j;
        } else {
          --i;
        }
      } else if (east) {
        --i;
        east = false;
      } else {
        ++j;
        east = true;
      }
    }
    wiring[static_cast<std::size_t>(r - 1)] = j;
  }
  return wiring;
}

}  // namespace detail

// Enumerates all reduced pipe dreams for w by depth-first search over the
// staircase cells, pruning branches whose crossing count can no longer reach
// length(w); complete fillings are kept when the traced wiring realizes w.
// Exponential in n, intended for small ranks.
inline std::vector<PipeDream> pipe_dreams(const Permutation& w,
                                          int rank_bound = kDefaultRankBound) {
  const Permutation t = w.trimmed();
  const int n = t.rank();
  if (n > rank_bound)
    throw rank_bound_error("pipe_dreams: rank " + std::to_string(n) +
                           " exceeds bound " + std::to_string(rank_bound));
  const int target = t.length();
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);

  std::vector<PipeDream> dreams;
  std::vector<char> cross(static_cast<std::size_t>(n * n), 0);
  std::vector<std::pair<int, int>> chosen;
  const std::vector<int> want = t.window();

  auto emit_if_realizes = [&]() {
    if (detail::pipe_dream_wiring(cross, n) == want)
      dreams.push_back(PipeDream{n, chosen});
  };

  auto dfs = [&](auto&& self, std::size_t idx, int used) -> void {
    if (used == target) {
      emit_if_realizes();
      return;
    }
    if (idx == cells.size()) return;
    if (used + static_cast<int>(cells.size() - idx) < target) return;
    self(self, idx + 1, used);
    const auto [i, j] = cells[idx];
    cross[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
    chosen.emplace_back(i, j);
    self(self, idx + 1, used + 1);
    chosen.pop_back();
    cross[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 0;
  };
  dfs(dfs, 0, 0);
  return dreams;
}

// Sum of weight monomials over all reduced pipe dreams; an independent route
// to the Schubert polynomial.
inline SparsePolynomial pipe_dream_polynomial(const Permutation& w,
                                              int rank_bound = kDefaultRankBound) {
  SparsePolynomial sum;
  for (const PipeDream& d : pipe_dreams(w, rank_bound)) sum.add_term(d.weight(), 1);
  return sum;
}

}  // namespace schub
