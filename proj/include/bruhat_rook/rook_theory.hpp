#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bruhat_rook/board.hpp"
#include "bruhat_rook/error.hpp"
#include "bruhat_rook/laurent_poly.hpp"
#include "bruhat_rook/permutation.hpp"
#include "bruhat_rook/q_numbers.hpp"

namespace bruhat_rook {

/// inv statistic of a rook configuration on b: the number of cells (i, j) of
/// the matrix, zero-entries included, with no rook at (i, j') for j' >= j and
/// no rook at (i', j) for i' > i.
inline int inv_stat(const Board& b, const RookConfig& c) {
  if (!covers(b, c)) throw PreconditionError("inv_stat: configuration is not covered by the board");
  std::vector<int> row_rook(static_cast<std::size_t>(b.rows()) + 1, 0);
  std::vector<int> col_rook(static_cast<std::size_t>(b.cols()) + 1, 0);
  for (const auto& [i, j] : c.cells()) {
    row_rook[static_cast<std::size_t>(i)] = j;
    col_rook[static_cast<std::size_t>(j)] = i;
  }
  int count = 0;
  for (int i = 1; i <= b.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) {
      const int r = row_rook[static_cast<std::size_t>(i)];
      if (r != 0 && r >= j) continue;
      if (col_rook[static_cast<std::size_t>(j)] > i) continue;
      ++count;
    }
  return count;
}

/// Oracle: sum of q^inv over all k-rook configurations, by enumeration.
inline LaurentPoly q_rook_number_enumerated(const Board& b, int k) {
  std::vector<BigInt> by_inv;
  for_each_rook_config(b, k, [&](const std::vector<std::pair<int, int>>& cells) {
    const auto v = static_cast<std::size_t>(inv_stat(b, RookConfig(cells)));
    if (by_inv.size() <= v) by_inv.resize(v + 1);
    ++by_inv[v];
  });
  return LaurentPoly(0, std::move(by_inv));
}

namespace detail {

struct CoefficientOverflow {};

inline void checked_add(std::uint64_t& a, std::uint64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw CoefficientOverflow{};
}
inline void checked_add(BigInt& a, const BigInt& b) { a += b; }

// Rows are scanned bottom to top. A row's contribution to inv depends only on
// the columns already taken below it and on its own rook, so the state is the
// column-occupancy mask and the value is a polynomial in q (dense, indexed by
// exponent).
template <class Coeff>
std::vector<Coeff> q_rook_mask_dp(const Board& b, int k) {
  using Poly = std::vector<Coeff>;
  const int n = b.cols();
  const std::uint64_t full = Board::full_mask(n);
  std::unordered_map<std::uint64_t, Poly> cur{{0, Poly{Coeff(1)}}};
  for (int i = b.rows(); i >= 1; --i) {
    const int rows_left = i - 1;
    std::unordered_map<std::uint64_t, Poly> next;
    next.reserve(cur.size() * 2);
    auto add_to = [&](std::uint64_t mask, const Poly& p, int shift) {
      Poly& dst = next[mask];
      if (dst.size() < p.size() + static_cast<std::size_t>(shift)) dst.resize(p.size() + static_cast<std::size_t>(shift));
      for (std::size_t e = 0; e < p.size(); ++e) checked_add(dst[e + static_cast<std::size_t>(shift)], p[e]);
    };
    for (const auto& [mask, poly] : cur) {
      const int placed = std::popcount(mask);
      const std::uint64_t free_cols = full & ~mask;
      if (placed + rows_left >= k) add_to(mask, poly, std::popcount(free_cols));
      if (placed >= k) continue;
      std::uint64_t choices = b.row_mask(i) & free_cols;
      while (choices) {
        const int c = std::countr_zero(choices);
        choices &= choices - 1;
        const std::uint64_t right_of_c = free_cols & ~Board::full_mask(c + 1);
        add_to(mask | (std::uint64_t{1} << c), poly, std::popcount(right_of_c));
      }
    }
    cur = std::move(next);
  }
  Poly total;
  for (const auto& [mask, poly] : cur) {
    if (std::popcount(mask) != k) continue;
    if (total.size() < poly.size()) total.resize(poly.size());
    for (std::size_t e = 0; e < poly.size(); ++e) checked_add(total[e], poly[e]);
  }
  return total;
}

}  // namespace detail

/// k-th q-rook number R_k(q) = sum over k-rook configurations of q^inv.
inline LaurentPoly q_rook_number(const Board& b, int k) {
  if (k < 0) throw RangeError("negative rook count");
  if (k > b.rows() || k > b.cols()) return {};
  try {
    auto dense = detail::q_rook_mask_dp<std::uint64_t>(b, k);
    std::vector<BigInt> c(dense.begin(), dense.end());
    return LaurentPoly(0, std::move(c));
  } catch (const detail::CoefficientOverflow&) {
    return LaurentPoly(0, detail::q_rook_mask_dp<BigInt>(b, k));
  }
}

inline BigInt rook_number(const Board& b, int k) { return evaluate_at_one(q_rook_number(b, k)); }

// sum_{k=0}^{n} R_{n-k}(q) [x]_q [x-1]_q ... [x-k+1]_q
inline LaurentPoly q_rook_poly(const Board& b, int n, int x) {
  if (n < 0) throw RangeError("q_rook_poly: negative n");
  LaurentPoly r;
  for (int k = 0; k <= n; ++k) {
    auto rn = q_rook_number(b, n - k);
    if (rn.is_zero()) continue;
    r += rn * q_falling(x, k);
  }
  return r;
}

/// Factorization of the ordinary rook polynomial of a right-aligned Ferrers
/// board with n columns: prod_{j=1}^{n} (x + c_j - j + 1).
inline BigInt gjw_product(const Board& lambda, int n, int x) {
  if (!is_ferrers(lambda, Alignment::right)) throw ShapeError("gjw_product: board is not right-aligned Ferrers");
  if (n != lambda.cols()) throw RangeError("gjw_product: n must equal the number of columns");
  const auto c = col_lengths(lambda);
  BigInt r = 1;
  for (int j = 1; j <= n; ++j) r *= x + c[static_cast<std::size_t>(j - 1)] - j + 1;
  return r;
}

/// q-factorization for a left-aligned Ferrers board with n columns:
/// q^z prod_{j=1}^{n} [x + c_j + j - n]_q, z = number of zero-entries.
inline LaurentPoly garsia_remmel_product(const Board& a, int n, int x) {
  if (!is_ferrers(a, Alignment::left)) throw ShapeError("garsia_remmel_product: board is not left-aligned Ferrers");
  if (n != a.cols()) throw RangeError("garsia_remmel_product: n must equal the number of columns");
  const auto c = col_lengths(a);
  const int zeros = a.rows() * a.cols() - a.count_ones();
  LaurentPoly r = LaurentPoly::monomial(zeros);
  for (int j = 1; j <= n && !r.is_zero(); ++j) r *= q_int(x + c[static_cast<std::size_t>(j - 1)] + j - n);
  return r;
}

// q-rook numbers of the staircase: R^{T_n}_k(q) = q^{C(n,2)} S_{n+1,n+1-k}(q).
inline LaurentPoly t_board_q_rook(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw RangeError("t_board_q_rook: need 0 <= k <= n");
  return q_stirling(n + 1, n + 1 - k).shifted(n * (n - 1) / 2);
}

/// Full q-rook number of block_sharp(B, A) for square A (m x m), B (n x n):
/// sum_i R^A_{m-i}(q) R^{rot B}_{n-i}(q) ([i]!_q)^2 q^{-i^2}.
inline LaurentPoly sharp_q_rook(const Board& a, const Board& b) {
  if (!a.is_square() || !b.is_square()) throw ShapeError("sharp_q_rook needs square boards");
  const int m = a.rows();
  const int n = b.rows();
  const Board b_rot = rotate180(b);
  LaurentPoly r;
  for (int i = 0; i <= std::min(m, n); ++i) {
    const auto fi = q_factorial(i);
    r += (q_rook_number(a, m - i) * q_rook_number(b_rot, n - i) * fi * fi).shifted(-i * i);
  }
  return r;
}

// |{i in [n+1, 2n] : p(i) <= n}| for p in S_{2n}.
inline int neg_count(const Permutation& p) {
  const int n = p.size() / 2;
  int c = 0;
  for (int i = n + 1; i <= 2 * n; ++i)
    if (p(i) <= n) ++c;
  return c;
}

/// sum of q^inv(p) t^neg(p) over rotationally symmetric full configurations on
/// a 2n x 2n board.
inline BiPoly rb_polynomial(const Board& a) {
  if (!a.is_square()) throw ShapeError("rb_polynomial needs a square board");
  if (a.rows() % 2 != 0) throw ShapeError("rb_polynomial needs an even-sized board");
  BiPoly r;
  for (const auto& p : max_configs(a)) {
    if (rotate180(p) != p) continue;
    r += BiPoly::monomial(inversions(p), neg_count(p));
  }
  return r;
}

/// Closed form of rb_polynomial(block_sharp(rotate180(A), A)) for square A (n x n):
/// sum_{i=0}^{n} R^A_{n-i}(q^2) [i]!_{q^2} q^{-i^2} t^i.
inline BiPoly sharp_rb(const Board& a) {
  if (!a.is_square()) throw ShapeError("sharp_rb needs a square board");
  const int n = a.rows();
  BiPoly r;
  for (int i = 0; i <= n; ++i) {
    auto term = substitute_q_power(q_rook_number(a, n - i), 2) * substitute_q_power(q_factorial(i), 2);
    r += BiPoly::with_t_power(term.shifted(-i * i), i);
  }
  return r;
}

}  // namespace bruhat_rook
