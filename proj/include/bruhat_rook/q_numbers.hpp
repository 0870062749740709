#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "bruhat_rook/error.hpp"
#include "bruhat_rook/laurent_poly.hpp"

namespace bruhat_rook {

/// q-analogue [m]_q = (1 - q^m)/(1 - q), expanded as a Laurent polynomial.
/// For m >= 0 this is 1 + q + ... + q^(m-1); for m < 0 it is
/// -(q^m + q^(m+1) + ... + q^-1).
inline LaurentPoly q_int(int m) {
  if (m == 0) return {};
  if (m > 0) return LaurentPoly(0, std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
  return LaurentPoly(m, std::vector<BigInt>(static_cast<std::size_t>(-m), BigInt(-1)));
}

inline LaurentPoly q_factorial(int i) {
  if (i < 0) throw RangeError("q_factorial: negative argument");
  LaurentPoly r = 1;
  for (int j = 2; j <= i; ++j) r *= q_int(j);
  return r;
}

// [x]_q [x-1]_q ... [x-k+1]_q
inline LaurentPoly q_falling(int x, int k) {
  if (k < 0) throw RangeError("q_falling: negative length");
  LaurentPoly r = 1;
  for (int j = 0; j < k && !r.is_zero(); ++j) r *= q_int(x - j);
  return r;
}

namespace detail {

// Rows of the q-Stirling triangle, grown on demand and shared by all threads.
class QStirlingTable {
 public:
  LaurentPoly get(int n, int k) {
    const auto row = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return rows_[row][static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({LaurentPoly(1)});
    while (rows_.size() <= row) {
      const auto& prev = rows_.back();
      const int m = static_cast<int>(rows_.size()) - 1;  // prev holds S_{m,*}
      std::vector<LaurentPoly> next(static_cast<std::size_t>(m) + 2);
      // S_{m+1,j} = q^(j-1) S_{m,j-1} + [j]_q S_{m,j}
      for (int j = 1; j <= m + 1; ++j) {
        LaurentPoly v = prev[static_cast<std::size_t>(j - 1)].shifted(j - 1);
        if (j <= m) v += q_int(j) * prev[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(j)] = std::move(v);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[row][static_cast<std::size_t>(k)];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

inline QStirlingTable& q_stirling_table() {
  static QStirlingTable table;
  return table;
}

}  // namespace detail

/// q-Stirling number of the second kind S_{n,k}(q):
/// S_{n+1,k} = q^(k-1) S_{n,k-1} + [k]_q S_{n,k}, S_{0,0} = 1, zero outside 0 <= k <= n.
inline LaurentPoly q_stirling(int n, int k) {
  if (n < 0) throw RangeError("q_stirling: negative n");
  if (k < 0 || k > n) return {};
  return detail::q_stirling_table().get(n, k);
}

/// Stirling numbers of the second kind via the integer recurrence
/// S(n+1,k) = S(n,k-1) + k S(n,k). Independent of q_stirling.
inline BigInt stirling2(int n, int k) {
  if (n < 0) throw RangeError("stirling2: negative n");
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int m = 0; m < n; ++m) {
    for (int j = m + 1; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + BigInt(j) * row[static_cast<std::size_t>(j)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

inline BigInt factorial(int n) {
  if (n < 0) throw RangeError("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Poly-Bernoulli number B_n^k for k <= 0 (standard indexing, symmetric in
/// n and -k). Uses the alternating Stirling sum
///   B_n^{-m} = (-1)^n sum_{i=0}^{n} (-1)^i (i+1)^m i! S(n,i).
inline BigInt poly_bernoulli(int n, int k) {
  if (n < 0) throw RangeError("poly_bernoulli: negative n");
  if (k > 0) throw UnsupportedArgument("poly_bernoulli: only nonpositive upper index is supported");
  const int m = -k;
  BigInt sum = 0;
  BigInt fact = 1;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= i;
    BigInt term = boost::multiprecision::pow(BigInt(i + 1), static_cast<unsigned>(m)) * fact * stirling2(n, i);
    if (i % 2 == 0) sum += term;
    else sum -= term;
  }
  return n % 2 == 0 ? sum : BigInt(-sum);
}

}  // namespace bruhat_rook
