#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat_rook/error.hpp"
#include "bruhat_rook/laurent_poly.hpp"

namespace bruhat_rook {

/// Permutation of [n] in one-line notation, 1-indexed: p(i) = j means a rook
/// in row i, column j.
class Permutation {
 public:
  Permutation() = default;

  // Validates that word is a bijection on [word.size()].
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw ParseError("not a permutation of [" + std::to_string(n) + "]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw RangeError("negative permutation size");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), Unchecked{});
  }

  /// Accepts "3 5 1 2 4" (whitespace or comma separated) or the compact
  /// digit string "35124" (n <= 9).
  static Permutation parse(std::string_view text) {
    std::string s(text);
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    if (s.empty()) throw ParseError("empty permutation");
    std::vector<int> w;
    const bool separated = s.find_first_of(" \t,") != std::string::npos;
    if (separated) {
      std::replace(s.begin(), s.end(), ',', ' ');
      std::istringstream in(s);
      std::string tok;
      while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            tok.size() > 6)
          throw ParseError("bad permutation entry \"" + tok + "\"");
        w.push_back(std::stoi(tok));
      }
    } else {
      if (s.size() > 9) throw ParseError("compact permutation strings are limited to n <= 9");
      for (char c : s) {
        if (c < '1' || c > '9') throw ParseError(std::string("bad permutation digit '") + c + "'");
        w.push_back(c - '0');
      }
    }
    return Permutation(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const noexcept { return word_; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv), Unchecked{});
  }

  // Compact digits for n <= 9, space separated otherwise.
  std::string to_string() const {
    std::string s;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (!compact && i > 0) s += ' ';
      s += std::to_string(word_[i]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.word_ <=> b.word_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend Permutation make_unchecked(std::vector<int> word);

  std::vector<int> word_;
};

// Skips validation; callers guarantee a bijection.
inline Permutation make_unchecked(std::vector<int> word) { return Permutation(std::move(word), Permutation::Unchecked{}); }

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

inline int inversions(const Permutation& p) {
  int count = 0;
  const auto& w = p.word();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

inline int descent_number(const Permutation& p) {
  int d = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ++d;
  return d;
}

/// |{a <= i : p(a) >= j}|, the number of rooks weakly north-east of (i, j).
inline int rank_count(const Permutation& p, int i, int j) {
  const int n = p.size();
  if (i < 1 || i > n || j < 1 || j > n) throw RangeError("rank_count: index out of range");
  int c = 0;
  for (int a = 1; a <= i; ++a)
    if (p(a) >= j) ++c;
  return c;
}

namespace detail {

// All rank counts p[i,j] as a flat n*n table, row-major in (i-1, j-1).
inline std::vector<int> rank_table(const Permutation& p) {
  const int n = p.size();
  std::vector<int> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<int> col(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= p(i); ++j) ++col[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      t[static_cast<std::size_t>((i - 1) * n + (j - 1))] = col[static_cast<std::size_t>(j)];
  }
  return t;
}

// Tests lower <= v <= upper row by row without materializing v's table.
inline bool between(const std::vector<int>& lower, const std::vector<int>& upper, const std::vector<int>& word,
                    std::vector<int>& scratch) {
  const int n = static_cast<int>(word.size());
  std::fill(scratch.begin(), scratch.end(), 0);
  for (int i = 0; i < n; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    for (int j = 0; j < v; ++j) ++scratch[static_cast<std::size_t>(j)];
    const std::size_t base = static_cast<std::size_t>(i * n);
    for (int j = 0; j < n; ++j) {
      const int c = scratch[static_cast<std::size_t>(j)];
      if (c < lower[base + static_cast<std::size_t>(j)] || c > upper[base + static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

inline void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw SizeMismatch("permutations of different sizes (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
}

}  // namespace detail

/// Bruhat comparison p <= r via the rank-count criterion.
inline bool bruhat_leq(const Permutation& p, const Permutation& r) {
  detail::require_same_size(p, r);
  const auto tp = detail::rank_table(p);
  const auto tr = detail::rank_table(r);
  for (std::size_t i = 0; i < tp.size(); ++i)
    if (tp[i] > tr[i]) return false;
  return true;
}

// Calls f(const Permutation&) for every element of S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(make_unchecked(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// Calls f(word) for every v in [u, w], scanning all of S_n.
template <class F>
void for_each_in_interval(const Permutation& u, const Permutation& w, F&& f) {
  detail::require_same_size(u, w);
  const int n = u.size();
  const auto lo = detail::rank_table(u);
  const auto hi = detail::rank_table(w);
  std::vector<int> scratch(static_cast<std::size_t>(n), 0);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    if (detail::between(lo, hi, word, scratch)) f(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

/// The closed Bruhat interval [u, w], by filtering all n! permutations.
/// Sorted lexicographically.
inline std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& w) {
  std::vector<Permutation> out;
  for_each_in_interval(u, w, [&](const std::vector<int>& v) { out.push_back(make_unchecked(v)); });
  return out;
}

// Sum of q^inv(v) over [u, w]; zero when u is not below w.
inline LaurentPoly poincare_brute(const Permutation& u, const Permutation& w) {
  std::vector<BigInt> by_length;
  for_each_in_interval(u, w, [&](const std::vector<int>& v) {
    const auto len = static_cast<std::size_t>(inversions(make_unchecked(v)));
    if (by_length.size() <= len) by_length.resize(len + 1);
    ++by_length[len];
  });
  return LaurentPoly(0, std::move(by_length));
}

// Sum of t^d(v) q^inv(v) over [u, w].
inline BiPoly eulerian_gf(const Permutation& u, const Permutation& w) {
  BiPoly r;
  for_each_in_interval(u, w, [&](const std::vector<int>& v) {
    const auto p = make_unchecked(v);
    r += BiPoly::monomial(inversions(p), descent_number(p));
  });
  return r;
}

/// Positions (1-based, increasing) of the first occurrence of pat in p, in
/// lexicographic order of index sets.
inline std::optional<std::vector<int>> find_pattern(const Permutation& p, const Permutation& pat) {
  const int n = p.size();
  const int k = pat.size();
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<int>{};
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b) {
        const bool lhs = p(idx[static_cast<std::size_t>(a)]) < p(idx[static_cast<std::size_t>(b)]);
        const bool rhs = pat(a + 1) < pat(b + 1);
        ok = lhs == rhs;
      }
    if (ok) return idx;
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
    if (t < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s) idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
  }
}

inline bool contains_pattern(const Permutation& p, const Permutation& pat) { return find_pattern(p, pat).has_value(); }

// 4231, 35142, 42513, 351624: the obstructions to [id, p] being the rook
// configurations on the right hull of p.
inline const std::array<Permutation, 4>& forbidden_patterns() {
  static const std::array<Permutation, 4> pats = {Permutation::parse("4231"), Permutation::parse("35142"),
                                                  Permutation::parse("42513"), Permutation::parse("351624")};
  return pats;
}

struct PatternMatch {
  Permutation pattern;
  std::vector<int> positions;
};

// First forbidden pattern (in the order above) contained in p, if any.
inline std::optional<PatternMatch> find_forbidden(const Permutation& p) {
  for (const auto& pat : forbidden_patterns())
    if (auto pos = find_pattern(p, pat)) return PatternMatch{pat, std::move(*pos)};
  return std::nullopt;
}

inline bool avoids_forbidden(const Permutation& p) { return !find_forbidden(p).has_value(); }

// Row reversal: result(i) = p(n - i + 1).
inline Permutation flip_ud(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return make_unchecked(std::move(w));
}

// result(i) = n + 1 - p(n - i + 1).
inline Permutation rotate180(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = n + 1 - p(n - i + 1);
  return make_unchecked(std::move(w));
}

}  // namespace bruhat_rook
