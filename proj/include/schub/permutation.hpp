#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schub/errors.hpp"

namespace schub {

// Ranks above this bound make the enumeration kernels refuse to run unless
// the caller raises the limit explicitly.
inline constexpr int kDefaultRankBound = 16;

// Lehmer code c with c_i = #{ j > i : w(j) < w(i) }.  Sum of entries is the
// inversion number; codes with c_i <= n - i are in bijection with S_n.
struct LehmerCode {
  std::vector<int> entries;

  int sum() const {
    int s = 0;
    for (int c : entries) s += c;
    return s;
  }

  friend bool operator==(const LehmerCode& a, const LehmerCode& b) = default;
};

// Permutation in one-line notation.  The stored window keeps whatever ambient
// rank it was built with; equality, ordering and hashing ignore trailing
// fixed points, which realizes the S_infinity convention w(i) = i beyond the
// window.
class Permutation {
 public:
  Permutation() : win_{1} {}

  explicit Permutation(std::vector<int> window) : win_(std::move(window)) {
    validate();
  }

  static Permutation identity() { return Permutation(); }

  // (n, n-1, ..., 1), the longest element of S_n.
  static Permutation long_permutation(int n) {
    if (n < 1) throw invalid_input_error("long_permutation: rank must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
  }

  // s_i = (i, i+1) as an element of S_{i+1}.
  static Permutation simple_transposition(int i) {
    if (i < 1) throw invalid_input_error("simple_transposition: i must be >= 1");
    std::vector<int> w(static_cast<std::size_t>(i + 1));
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return Permutation(std::move(w));
  }

  int rank() const { return static_cast<int>(win_.size()); }

  const std::vector<int>& window() const { return win_; }

  // w(i) for any i >= 1; positions beyond the window are fixed points.
  int operator()(int i) const {
    if (i < 1) throw invalid_input_error("permutation applied to position < 1");
    return i <= rank() ? win_[static_cast<std::size_t>(i - 1)] : i;
  }

  // Inversion number ell(w) = #{ (i,j) : i < j, w(i) > w(j) }.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < win_.size(); ++i)
      for (std::size_t j = i + 1; j < win_.size(); ++j)
        if (win_[i] > win_[j]) ++inv;
    return inv;
  }

  // { i : w(i) > w(i+1) }.
  std::set<int> descents() const {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < win_.size(); ++i)
      if (win_[i] > win_[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
  }

  LehmerCode code() const {
    LehmerCode c;
    c.entries.resize(win_.size());
    for (std::size_t i = 0; i < win_.size(); ++i) {
      int cnt = 0;
      for (std::size_t j = i + 1; j < win_.size(); ++j)
        if (win_[j] < win_[i]) ++cnt;
      c.entries[i] = cnt;
    }
    return c;
  }

  std::vector<int> trimmed_window() const {
    std::vector<int> w = win_;
    while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
    return w;
  }

  Permutation trimmed() const { return Permutation(trimmed_window()); }

  // Embedding S_n -> S_N by appending fixed points.
  Permutation stabilized(int n) const {
    if (n < rank())
      throw invalid_input_error("stabilize: target rank below window length");
    std::vector<int> w = win_;
    w.reserve(static_cast<std::size_t>(n));
    for (int v = rank() + 1; v <= n; ++v) w.push_back(v);
    return Permutation(std::move(w));
  }

  // w * t_{ik}, i.e. exchange the window entries at positions i and k.
  Permutation right_multiply_transposition(int i, int k) const {
    if (i < 1 || k <= i)
      throw invalid_input_error("transposition requires 1 <= i < k");
    std::vector<int> w = stabilized(std::max(rank(), k)).window();
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(k - 1)]);
    return Permutation(std::move(w));
  }

  // Composition (u * v)(i) = u(v(i)) after stabilizing to a common rank.
  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    int n = std::max(u.rank(), v.rank());
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.trimmed_window() == b.trimmed_window();
  }

  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

  // Orders by trimmed one-line notation, lexicographically.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    std::vector<int> ta = a.trimmed_window();
    std::vector<int> tb = b.trimmed_window();
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
  }

 private:
  void validate() const {
    if (win_.empty())
      throw invalid_input_error("permutation window must be nonempty");
    std::vector<int> sorted = win_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1)
        throw invalid_input_error("window is not a rearrangement of 1..n");
    }
  }

  std::vector<int> win_;
};

inline int length(const Permutation& w) { return w.length(); }
inline std::set<int> descents(const Permutation& w) { return w.descents(); }
inline LehmerCode code(const Permutation& w) { return w.code(); }
inline Permutation stabilize(const Permutation& w, int n) { return w.stabilized(n); }

// Inverse of the code map: picks the (c_i + 1)-th smallest unused value at
// each position.  Rejects codes with c_i > n - i.
inline Permutation code_inverse(const LehmerCode& c) {
  const int n = static_cast<int>(c.entries.size());
  if (n == 0) return Permutation::identity();
  for (int i = 0; i < n; ++i) {
    if (c.entries[static_cast<std::size_t>(i)] < 0 ||
        c.entries[static_cast<std::size_t>(i)] > n - i - 1)
      throw invalid_input_error("Lehmer code entry out of range");
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto it = unused.begin() + c.entries[static_cast<std::size_t>(i)];
    w.push_back(*it);
    unused.erase(it);
  }
  return Permutation(std::move(w));
}

// Canonical text form of the trimmed window: contiguous digits when every
// entry is a single digit, comma-separated otherwise.
inline std::string format_permutation(const Permutation& w) {
  std::vector<int> win = w.trimmed_window();
  bool digits = std::all_of(win.begin(), win.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(win[i]);
  }
  return out;
}

// Accepts "1423" (digits, n <= 9) or "1,4,2,3" (commas, any n).
inline Permutation parse_permutation(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw parse_error("empty permutation");
  std::vector<int> win;
  try {
    if (s.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw parse_error("empty entry in permutation: " + text);
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw parse_error("bad permutation entry: " + tok);
        win.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
      }
    } else {
      for (char ch : s) {
        if (ch < '1' || ch > '9')
          throw parse_error("permutation digits must be 1..9: " + text);
        win.push_back(ch - '0');
      }
    }
    return Permutation(std::move(win));
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error("invalid permutation \"" + text + "\": " + e.what());
  }
}

}  // namespace schub
