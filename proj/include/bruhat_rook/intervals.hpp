#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bruhat_rook/board.hpp"
#include "bruhat_rook/error.hpp"
#include "bruhat_rook/laurent_poly.hpp"
#include "bruhat_rook/permutation.hpp"
#include "bruhat_rook/q_numbers.hpp"
#include "bruhat_rook/rook_theory.hpp"

namespace bruhat_rook {

/// A minimal left coset representative of S_n modulo the parabolic subgroup
/// generated by all s_i except s_k: w(1) < ... < w(k) and w(k+1) < ... < w(n).
///
/// k == n is accepted as the degenerate case with an empty second block
/// (w = id); it arises when reducing a representative whose first block is
/// [k] itself.
class CosetRepA {
 public:
  CosetRepA(Permutation w, int k) : w_(std::move(w)), k_(k) {
    const int n = w_.size();
    if (n < 1 || k < 1 || k > n) throw RangeError("coset representative needs 1 <= k <= n");
    for (int i = 1; i < n; ++i) {
      if (i == k) continue;
      if (w_(i) > w_(i + 1))
        throw PreconditionError("not a minimal coset representative: " + w_.to_string() + " with k = " +
                                std::to_string(k));
    }
  }

  int n() const noexcept { return w_.size(); }
  int k() const noexcept { return k_; }
  const Permutation& w() const noexcept { return w_; }

  friend bool operator==(const CosetRepA&, const CosetRepA&) = default;

 private:
  Permutation w_;
  int k_;
};

// Every representative for the given n and k, lexicographic by word.
inline std::vector<CosetRepA> all_coset_reps_A(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw RangeError("all_coset_reps_A: need 1 <= k <= n");
  std::vector<CosetRepA> out;
  // Choose the first block's values as a subset of size k.
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<int> w;
    for (int v = 1; v <= n; ++v)
      if ((s >> (v - 1)) & 1U) w.push_back(v);
    for (int v = 1; v <= n; ++v)
      if (!((s >> (v - 1)) & 1U)) w.push_back(v);
    out.emplace_back(make_unchecked(std::move(w)), k);
  }
  std::sort(out.begin(), out.end(), [](const CosetRepA& a, const CosetRepA& b) { return a.w() < b.w(); });
  return out;
}

/// Element of the hyperoctahedral group B_n, embedded as a permutation of
/// [2n] fixed by rotate180.
class SignedPermutation {
 public:
  explicit SignedPermutation(Permutation p) : p_(std::move(p)) {
    if (p_.size() % 2 != 0) throw ShapeError("signed permutation needs an even-sized word");
    if (rotate180(p_) != p_) throw PreconditionError("permutation is not rotationally symmetric: " + p_.to_string());
  }

  int n() const noexcept { return p_.size() / 2; }
  const Permutation& permutation() const noexcept { return p_; }
  int neg() const { return neg_count(p_); }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  Permutation p_;
};

inline bool is_hull_interval(const Permutation& p) { return avoids_forbidden(p); }

namespace detail {

inline void require_avoids(const Permutation& p, const std::string& subject) {
  if (auto m = find_forbidden(p)) {
    std::string pos;
    for (int i : m->positions) pos += (pos.empty() ? "" : ",") + std::to_string(i);
    throw PatternViolation(subject + " = " + p.to_string() + " contains the pattern " + m->pattern.to_string() +
                               " at positions " + pos,
                           subject, m->pattern.to_string(), m->positions);
  }
}

}  // namespace detail

/// The full rook configurations on right_hull(p); this is [id, p] exactly
/// when p avoids the forbidden patterns, and an error otherwise.
inline std::vector<Permutation> hull_interval_elements(const Permutation& p) {
  detail::require_avoids(p, "p");
  return max_configs(right_hull(p));
}

/// Poincare polynomial of [u, w] as the n-th q-rook number of
/// right_hull(w) & left_hull(u). Requires w and flip_ud(u) to avoid the
/// forbidden patterns.
inline LaurentPoly poincare_via_rook(const Permutation& u, const Permutation& w) {
  detail::require_same_size(u, w);
  detail::require_avoids(w, "w");
  detail::require_avoids(flip_ud(u), "flip_ud(u)");
  return q_rook_number(intersect(right_hull(w), left_hull(u)), w.size());
}

// (n-k+1, ..., n, 1, ..., n-k)
inline CosetRepA max_coset_rep_A(int n, int k) {
  if (k < 1 || k > n - 1) throw RangeError("max_coset_rep_A: need 1 <= k <= n-1");
  std::vector<int> w;
  for (int v = n - k + 1; v <= n; ++v) w.push_back(v);
  for (int v = 1; v <= n - k; ++v) w.push_back(v);
  return CosetRepA(make_unchecked(std::move(w)), k);
}

/// Poincare polynomial of [id, max coset representative] in S_n:
/// q^{(n-k)k} sum_{i=0}^{k} S_{k+1,i+1}(1/q) S_{n-k+1,i+1}(1/q) ([i]!_q)^2 q^i.
inline LaurentPoly theoremA_poincare(int n, int k) {
  if (k < 1 || k > n - 1) throw RangeError("theoremA_poincare: need 1 <= k <= n-1");
  LaurentPoly sum;
  for (int i = 0; i <= k; ++i) {
    const auto fi = q_factorial(i);
    sum += (substitute_q_inverse(q_stirling(k + 1, i + 1)) * substitute_q_inverse(q_stirling(n - k + 1, i + 1)) * fi *
            fi)
               .shifted(i);
  }
  return sum.shifted((n - k) * k);
}

// The word (n+1, ..., 2n, 1, ..., n) in S_{2n}.
inline SignedPermutation max_coset_rep_B(int n) {
  if (n < 1) throw RangeError("max_coset_rep_B: need n >= 1");
  std::vector<int> w;
  for (int v = n + 1; v <= 2 * n; ++v) w.push_back(v);
  for (int v = 1; v <= n; ++v) w.push_back(v);
  return SignedPermutation(make_unchecked(std::move(w)));
}

// Coxeter length in B_n: (inv + neg) / 2.
inline int rank_B(const SignedPermutation& s) {
  const int total = inversions(s.permutation()) + s.neg();
  if (total % 2 != 0) throw InternalError("rank_B: inv + neg is odd for " + s.permutation().to_string());
  return total / 2;
}

/// Oracle: sum of q^rank_B over rotationally symmetric v <= w in S_{2n}.
inline LaurentPoly poincare_brute_B(const SignedPermutation& w) {
  const Permutation id = Permutation::identity(w.permutation().size());
  std::vector<BigInt> by_rank;
  for_each_in_interval(id, w.permutation(), [&](const std::vector<int>& word) {
    const auto v = make_unchecked(word);
    if (rotate180(v) != v) return;
    const auto r = static_cast<std::size_t>(rank_B(SignedPermutation(v)));
    if (by_rank.size() <= r) by_rank.resize(r + 1);
    ++by_rank[r];
  });
  return LaurentPoly(0, std::move(by_rank));
}

// Collapses q^inv t^neg to q^{(inv+neg)/2}.
inline LaurentPoly rank_B_polynomial(const BiPoly& rb) {
  LaurentPoly r;
  for (int t = 0; t <= rb.t_degree(); ++t) {
    const auto& p = rb.coeff(t);
    for (int e = p.min_exp(); !p.is_zero() && e <= p.max_exp(); ++e) {
      if (p.coeff(e) == 0) continue;
      if ((e + t) % 2 != 0) throw InternalError("rank_B_polynomial: inv + neg is odd");
      r += LaurentPoly::monomial((e + t) / 2, p.coeff(e));
    }
  }
  return r;
}

/// Poincare polynomial of the lower interval of max_coset_rep_B(n) from the
/// rotationally symmetric full configurations on its right hull.
inline LaurentPoly poincare_B_via_rook(int n) {
  return rank_B_polynomial(rb_polynomial(right_hull(max_coset_rep_B(n).permutation())));
}

/// q^{C(n+1,2)} sum_{i=0}^{n} S_{n+1,i+1}(1/q) [i]!_q
inline LaurentPoly theoremB_poincare(int n) {
  if (n < 1) throw RangeError("theoremB_poincare: need n >= 1");
  LaurentPoly sum;
  for (int i = 0; i <= n; ++i) sum += substitute_q_inverse(q_stirling(n + 1, i + 1)) * q_factorial(i);
  return sum.shifted(n * (n + 1) / 2);
}

/// When w(k) < n the tail of w is fixed pointwise and [id, w] is isomorphic
/// to [id, w'] for w' = w restricted to [w(k)]. Idempotent; the result has
/// w'(k) = n'.
inline CosetRepA reduce_coset_rep(const CosetRepA& rep) {
  const int top = rep.w()(rep.k());
  if (top == rep.n()) return rep;
  std::vector<int> w(rep.w().word().begin(), rep.w().word().begin() + top);
  return CosetRepA(Permutation(std::move(w)), rep.k());
}

namespace detail {

// f(a, b) for a = 1..n (index a; row 0 unused) and b = 0..k, on a reduced
// representative. Column lengths of the outer shape are
// c_j = k + |{i > k : w(i) <= j}|.
inline std::vector<std::vector<BigInt>> interval_dp_table(const CosetRepA& reduced) {
  const int n = reduced.n();
  const int k = reduced.k();
  const auto& w = reduced.w();
  if (w(k) != n) throw PreconditionError("interval_dp_table: representative is not reduced");
  std::vector<int> col(static_cast<std::size_t>(n) + 1, k);
  std::vector<bool> in_first_block(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= k; ++i) in_first_block[static_cast<std::size_t>(w(i))] = true;
  for (int i = k + 1; i <= n; ++i)
    for (int j = w(i); j <= n; ++j) ++col[static_cast<std::size_t>(j)];

  std::vector<std::vector<BigInt>> f(static_cast<std::size_t>(n) + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(k) + 1, 0));
  f[static_cast<std::size_t>(n)][0] = 1;
  for (int a = n - 1; a >= 1; --a) {
    const auto ua = static_cast<std::size_t>(a);
    for (int b = 0; b <= k; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      BigInt inner = f[ua + 1][ub];
      if (in_first_block[ua] && b >= 1) inner += f[ua + 1][ub - 1];
      f[ua][ub] = BigInt(col[ua] - a - b + 1) * inner;
    }
  }
  return f;
}

}  // namespace detail

/// |[id, w]| in polynomial time: reduce, then the alternating sum
/// sum_b (-1)^b f(1, b) of the inclusion-exclusion recurrence.
inline BigInt count_lower_interval_dp(const CosetRepA& rep) {
  const auto reduced = reduce_coset_rep(rep);
  const auto f = detail::interval_dp_table(reduced);
  BigInt total = 0;
  for (int b = 0; b <= reduced.k(); ++b) {
    if (b % 2 == 0) total += f[1][static_cast<std::size_t>(b)];
    else total -= f[1][static_cast<std::size_t>(b)];
  }
  return total;
}

/// Three independent evaluations of |[id, max_coset_rep_A(n, k)]|.
struct Theorem8Counts {
  BigInt stirling_product_sum;  // sum_i S(k+1,i+1) S(n-k+1,i+1) (i!)^2
  BigInt alternating_sum;       // (-1)^k sum_i (-1)^i (i+1)^{n-k} i! S(k,i)
  BigInt poly_bernoulli;        // B_{n-k}^{-k}

  friend bool operator==(const Theorem8Counts&, const Theorem8Counts&) = default;
};

inline Theorem8Counts theorem8_counts(int n, int k) {
  if (k < 1 || k > n - 1) throw RangeError("theorem8_counts: need 1 <= k <= n-1");
  Theorem8Counts r;
  for (int i = 0; i <= k; ++i) {
    const BigInt fi = factorial(i);
    r.stirling_product_sum += stirling2(k + 1, i + 1) * stirling2(n - k + 1, i + 1) * fi * fi;
  }
  BigInt alt = 0;
  for (int i = 0; i <= k; ++i) {
    BigInt term = boost::multiprecision::pow(BigInt(i + 1), static_cast<unsigned>(n - k)) * factorial(i) * stirling2(k, i);
    if (i % 2 == 0) alt += term;
    else alt -= term;
  }
  r.alternating_sum = k % 2 == 0 ? alt : BigInt(-alt);
  r.poly_bernoulli = bruhat_rook::poly_bernoulli(n - k, -k);
  return r;
}

/// Rook count of right_hull(w) & left_hull(flip_ud(w)) for
/// w = max_coset_rep_A(2n, n); the board is the Aztec diamond of order n.
inline BigInt aztec_interval_size(int n) {
  if (n < 1) throw RangeError("aztec_interval_size: need n >= 1");
  const auto w = max_coset_rep_A(2 * n, n).w();
  return rook_number(intersect(right_hull(w), left_hull(flip_ud(w))), 2 * n);
}

/// Coefficient inequality f_i <= f_j for 0 <= i < j <= d - i, where
/// f_i = [q^{e+i}] P, e = min_exp and d = max_exp - min_exp. For a lower
/// interval e = 0 and d is the length of the top element.
inline bool satisfies_bjorner_ekedahl(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  const int e = p.min_exp();
  const int d = p.max_exp() - e;
  for (int i = 0; 2 * i < d; ++i)
    for (int j = i + 1; j <= d - i; ++j)
      if (p.coeff(e + i) > p.coeff(e + j)) return false;
  return true;
}

}  // namespace bruhat_rook
