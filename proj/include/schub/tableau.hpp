#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "schub/errors.hpp"
#include "schub/integer.hpp"
#include "schub/permutation.hpp"

namespace schub {

// Integer partition: weakly decreasing nonnegative parts.  Trailing zeros
// are accepted on input and trimmed by normalization.
using Partition = std::vector<int>;

inline Partition normalized_partition(const Partition& p) {
  Partition out = p;
  while (!out.empty() && out.back() == 0) out.pop_back();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] <= 0 || (i > 0 && out[i] > out[i - 1]))
      throw invalid_input_error("malformed partition");
  }
  return out;
}

inline int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

// The unique permutation with at most one descent, at position k, whose
// Lehmer code reads lambda from position k downward:
// w(k+1-i) = lambda_i + (k+1-i) for the first k entries, the rest increasing.
// Its Schubert polynomial is the Schur polynomial s_lambda(x_1..x_k).
inline Permutation grassmannian_permutation(const Partition& lambda, int k) {
  if (k < 1) throw invalid_input_error("descent position must be >= 1");
  Partition lam = normalized_partition(lambda);
  if (static_cast<int>(lam.size()) > k)
    throw invalid_input_error("partition has more parts than the descent position");
  if (lam.empty()) return Permutation::identity();
  const int n = k + lam[0];
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> win(static_cast<std::size_t>(n));
  for (int j = 1; j <= k; ++j) {
    int part = k + 1 - j <= static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(k - j)] : 0;
    int value = part + j;
    win[static_cast<std::size_t>(j - 1)] = value;
    used[static_cast<std::size_t>(value)] = 1;
  }
  int fill = k;
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) win[static_cast<std::size_t>(fill++)] = v;
  }
  return Permutation(std::move(win));
}

// Littlewood-Richardson coefficient c^nu_{lambda,mu}: counts semistandard
// skew tableaux of shape nu/lambda and content mu whose reverse reading word
// (rows top to bottom, each read right to left) is a lattice word.  Direct
// backtracking enumeration; the fill order is exactly reading order, so the
// lattice and semistandard constraints are checked as cells are placed.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
  const Partition lam = normalized_partition(lambda);
  const Partition m = normalized_partition(mu);
  const Partition n = normalized_partition(nu);
  if (partition_weight(n) != partition_weight(lam) + partition_weight(m)) return 0;
  if (lam.size() > n.size()) return 0;
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > n[i]) return 0;

  const int rows = static_cast<int>(n.size());
  const int values = static_cast<int>(m.size());
  auto lam_at = [&](int r) {
    return r < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(r)] : 0;
  };

  // Reading order: rows top to bottom, columns right to left.
  std::vector<std::pair<int, int>> order;
  for (int r = 0; r < rows; ++r)
    for (int c = n[static_cast<std::size_t>(r)] - 1; c >= lam_at(r); --c)
      order.emplace_back(r, c);
  if (order.empty()) return 1;  // nu == lambda and mu empty
  if (values == 0) return 0;

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(n[static_cast<std::size_t>(r)]), 0);
  std::vector<int> count(static_cast<std::size_t>(values + 1), 0);

  Integer total = 0;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      ++total;
      return;
    }
    const auto [r, c] = order[idx];
    for (int v = 1; v <= values; ++v) {
      if (count[static_cast<std::size_t>(v)] >= m[static_cast<std::size_t>(v - 1)]) continue;
      if (v > 1 && count[static_cast<std::size_t>(v)] >= count[static_cast<std::size_t>(v - 1)]) continue;
      if (c + 1 < n[static_cast<std::size_t>(r)] &&
          grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)] != 0 &&
          v > grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)])
        continue;  // rows weakly increase left to right
      if (r > 0 && c >= lam_at(r - 1) &&
          v <= grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])
        continue;  // columns strictly increase top to bottom
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++count[static_cast<std::size_t>(v)];
      self(self, idx + 1);
      --count[static_cast<std::size_t>(v)];
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }
  };
  fill(fill, 0);
  return total;
}

}  // namespace schub
