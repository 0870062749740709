#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat_rook/error.hpp"
#include "bruhat_rook/permutation.hpp"

namespace bruhat_rook {

enum class Alignment { left, right };

/// Rectangular zero-one matrix. Rows and columns are 1-indexed from the top
/// left; each row is held as a column bitmask (bit j-1 for column j), which
/// caps the width at 64.
class Board {
 public:
  static constexpr int max_cols = 64;

  Board() = default;
  Board(int rows, int cols) : rows_(rows), cols_(cols), masks_(static_cast<std::size_t>(rows), 0) {
    if (rows < 0 || cols < 0) throw RangeError("negative board dimension");
    if (cols > max_cols) throw RangeError("boards wider than 64 columns are not supported");
  }

  // Builds a board from per-row column masks.
  static Board from_masks(int cols, std::vector<std::uint64_t> masks) {
    Board b(static_cast<int>(masks.size()), cols);
    const std::uint64_t full = full_mask(cols);
    for (auto m : masks)
      if (m & ~full) throw RangeError("row mask exceeds board width");
    b.masks_ = std::move(masks);
    return b;
  }

  /// One line per row, '#' for a one-entry and '.' for a zero. A trailing
  /// newline is optional; rows must have equal length.
  static Board parse(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
      start = end + 1;
    }
    if (lines.empty()) return Board(0, 0);
    const int cols = static_cast<int>(lines.front().size());
    if (cols > max_cols) throw RangeError("boards wider than 64 columns are not supported");
    Board b(static_cast<int>(lines.size()), cols);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (static_cast<int>(lines[i].size()) != cols) throw ParseError("ragged board rows");
      for (int j = 0; j < cols; ++j) {
        const char c = lines[i][static_cast<std::size_t>(j)];
        if (c == '#') b.masks_[i] |= std::uint64_t{1} << j;
        else if (c != '.') throw ParseError(std::string("bad board character '") + c + "'");
      }
    }
    return b;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool at(int i, int j) const {
    check(i, j);
    return (masks_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
  }
  void set(int i, int j, bool value = true) {
    check(i, j);
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    auto& m = masks_[static_cast<std::size_t>(i - 1)];
    m = value ? (m | bit) : (m & ~bit);
  }

  std::uint64_t row_mask(int i) const { return masks_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::uint64_t>& row_masks() const noexcept { return masks_; }

  int count_ones() const {
    int c = 0;
    for (auto m : masks_) c += std::popcount(m);
    return c;
  }

  // Cellwise containment: every one of *this is a one of other.
  bool subset_of(const Board& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      if (masks_[i] & ~other.masks_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= rows_; ++i) {
      for (int j = 1; j <= cols_; ++j) s += at(i, j) ? '#' : '.';
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const Board&, const Board&) = default;

  static std::uint64_t full_mask(int cols) {
    return cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  }

 private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw RangeError("board cell out of range");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> masks_;
};

inline std::ostream& operator<<(std::ostream& os, const Board& b) { return os << b.to_string(); }

/// Cells (row, column) with pairwise distinct rows and columns.
class RookConfig {
 public:
  RookConfig() = default;
  explicit RookConfig(std::vector<std::pair<int, int>> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t a = 0; a < cells_.size(); ++a) {
      if (cells_[a].first < 1 || cells_[a].second < 1) throw RangeError("rook cell indices are 1-based");
      for (std::size_t b = a + 1; b < cells_.size(); ++b)
        if (cells_[a].first == cells_[b].first || cells_[a].second == cells_[b].second)
          throw PreconditionError("rooks share a row or column");
    }
  }

  static RookConfig from_permutation(const Permutation& p) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= p.size(); ++i) cells.emplace_back(i, p(i));
    RookConfig c;
    c.cells_ = std::move(cells);
    return c;
  }

  const std::vector<std::pair<int, int>>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }

  friend bool operator==(const RookConfig&, const RookConfig&) = default;

 private:
  std::vector<std::pair<int, int>> cells_;  // sorted
};

inline Board ones(int m, int n) {
  Board b(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) b.set(i, j);
  return b;
}

// T_n: ones exactly where i <= n - j + 1.
inline Board triangular(int n) {
  Board b(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) b.set(i, j);
  return b;
}

inline Board flip_ud(const Board& b) {
  std::vector<std::uint64_t> m(b.row_masks().rbegin(), b.row_masks().rend());
  return Board::from_masks(b.cols(), std::move(m));
}

// Column reversal; not one of the named operations but both alignments are
// related through it.
inline Board mirror_lr(const Board& b) {
  Board r(b.rows(), b.cols());
  for (int i = 1; i <= b.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j)
      if (b.at(i, j)) r.set(i, b.cols() - j + 1);
  return r;
}

inline Board rotate180(const Board& b) { return mirror_lr(flip_ud(b)); }

inline std::vector<int> row_lengths(const Board& b) {
  std::vector<int> r;
  for (auto m : b.row_masks()) r.push_back(std::popcount(m));
  return r;
}

inline std::vector<int> col_lengths(const Board& b) {
  std::vector<int> c(static_cast<std::size_t>(b.cols()), 0);
  for (auto m : b.row_masks())
    for (int j = 0; j < b.cols(); ++j)
      if ((m >> j) & 1U) ++c[static_cast<std::size_t>(j)];
  return c;
}

// Every one-entry has one-entries directly beside it (towards the alignment
// side) and directly above it, where those positions exist.
inline bool is_ferrers(const Board& b, Alignment align) {
  const int dj = align == Alignment::left ? -1 : 1;
  for (int i = 1; i <= b.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) {
      if (!b.at(i, j)) continue;
      const int side = j + dj;
      if (side >= 1 && side <= b.cols() && !b.at(i, side)) return false;
      if (i > 1 && !b.at(i - 1, j)) return false;
    }
  return true;
}

/// Row lengths of a right- or left-aligned Ferrers pair lambda >= mu.
struct SkewShape {
  std::vector<int> outer;  // lambda
  std::vector<int> inner;  // mu
};

namespace detail {

// Column interval [lo, hi] (1-based) of a contiguous row, or nullopt when the
// row has a gap. Empty rows give {1, 0}.
inline std::optional<std::pair<int, int>> row_interval(std::uint64_t m) {
  if (m == 0) return std::pair{1, 0};
  const int lo = std::countr_zero(m) + 1;
  const int hi = 64 - std::countl_zero(m);
  const std::uint64_t run = Board::full_mask(hi) & ~Board::full_mask(lo - 1);
  if (run != m) return std::nullopt;
  return std::pair{lo, hi};
}

inline bool skew_search(const std::vector<std::optional<std::pair<int, int>>>& forced, int cols, std::size_t row,
                        int prev_outer, int prev_inner, SkewShape& shape) {
  if (row == forced.size()) return true;
  if (forced[row]) {
    const auto [outer, inner] = *forced[row];
    if (outer > prev_outer || inner > prev_inner) return false;
    shape.outer[row] = outer;
    shape.inner[row] = inner;
    return skew_search(forced, cols, row + 1, outer, inner, shape);
  }
  for (int v = std::min(prev_outer, prev_inner); v >= 0; --v) {
    shape.outer[row] = shape.inner[row] = v;
    if (skew_search(forced, cols, row + 1, v, v, shape)) return true;
  }
  return false;
}

}  // namespace detail

/// Searches for right-aligned (resp. left-aligned) Ferrers lambda >= mu with
/// b = lambda - mu. This is the defining test for skew Ferrers boards; rows are
/// justified to the alignment side and row lengths weakly decrease downward.
inline std::optional<SkewShape> skew_ferrers_decomposition(const Board& b, Alignment align) {
  const Board r = align == Alignment::right ? b : mirror_lr(b);
  const int n = r.cols();
  std::vector<std::optional<std::pair<int, int>>> forced(static_cast<std::size_t>(r.rows()));
  for (int i = 1; i <= r.rows(); ++i) {
    const auto iv = detail::row_interval(r.row_mask(i));
    if (!iv) return std::nullopt;
    if (iv->second >= iv->first) forced[static_cast<std::size_t>(i - 1)] = std::pair{n - iv->first + 1, n - iv->second};
  }
  SkewShape shape{std::vector<int>(forced.size()), std::vector<int>(forced.size())};
  if (!detail::skew_search(forced, n, 0, n, n, shape)) return std::nullopt;
  return shape;
}

/// Fast interval test, equivalent to skew_ferrers_decomposition succeeding:
/// rows are contiguous, the two ends of nonempty rows move weakly towards the
/// alignment side going down, and a run of empty rows between two nonempty
/// rows needs the lower row's outer length to fit under the upper row's inner
/// length.
inline bool is_skew_ferrers(const Board& b, Alignment align) {
  const int n = b.cols();
  bool have_prev = false;
  bool gap = false;
  int prev_outer = 0, prev_inner = 0;
  for (int i = 1; i <= b.rows(); ++i) {
    std::uint64_t m = b.row_mask(i);
    if (align == Alignment::left) {
      std::uint64_t rev = 0;
      for (int j = 0; j < n; ++j)
        if ((m >> j) & 1U) rev |= std::uint64_t{1} << (n - 1 - j);
      m = rev;
    }
    const auto iv = detail::row_interval(m);
    if (!iv) return false;
    if (iv->second < iv->first) {
      gap = have_prev;
      continue;
    }
    const int outer = n - iv->first + 1;
    const int inner = n - iv->second;
    if (have_prev) {
      if (outer > prev_outer || inner > prev_inner) return false;
      if (gap && outer > prev_inner) return false;
    }
    have_prev = true;
    gap = false;
    prev_outer = outer;
    prev_inner = inner;
  }
  return true;
}

inline Board intersect(const Board& a, const Board& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch("intersect: board dimensions differ");
  std::vector<std::uint64_t> m(a.row_masks());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] &= b.row_masks()[i];
  return Board::from_masks(a.cols(), std::move(m));
}

/// [[B, J], [J, A]] for square B (n x n) and A (m x m).
inline Board block_sharp(const Board& top_left, const Board& bottom_right) {
  if (!top_left.is_square() || !bottom_right.is_square()) throw ShapeError("block_sharp needs square boards");
  const int n = top_left.rows();
  const int m = bottom_right.rows();
  Board r(m + n, m + n);
  for (int i = 1; i <= m + n; ++i)
    for (int j = 1; j <= m + n; ++j) {
      bool v = true;
      if (i <= n && j <= n) v = top_left.at(i, j);
      else if (i > n && j > n) v = bottom_right.at(i - n, j - n);
      if (v) r.set(i, j);
    }
  return r;
}

/// Smallest right-aligned skew Ferrers board covering p: row i spans columns
/// min_{i' >= i} p(i') through max_{i' <= i} p(i').
inline Board right_hull(const Permutation& p) {
  const int n = p.size();
  Board b(n, n);
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int i = n; i >= 1; --i)
    suffix_min[static_cast<std::size_t>(i)] = std::min(suffix_min[static_cast<std::size_t>(i) + 1], p(i));
  int prefix_max = 0;
  for (int i = 1; i <= n; ++i) {
    prefix_max = std::max(prefix_max, p(i));
    for (int j = suffix_min[static_cast<std::size_t>(i)]; j <= prefix_max; ++j) b.set(i, j);
  }
  return b;
}

inline Board left_hull(const Permutation& p) { return flip_ud(right_hull(flip_ud(p))); }

inline bool covers(const Board& b, const RookConfig& c) {
  for (const auto& [i, j] : c.cells()) {
    if (i < 1 || i > b.rows() || j < 1 || j > b.cols() || !b.at(i, j)) return false;
  }
  return true;
}

inline bool covers(const Board& b, const Permutation& p) { return covers(b, RookConfig::from_permutation(p)); }

namespace detail {

template <class F>
void rook_backtrack(const Board& b, int k, int row, std::uint64_t used, std::vector<std::pair<int, int>>& cur,
                    F& f) {
  const int remaining = k - static_cast<int>(cur.size());
  if (remaining == 0) {
    f(const_cast<const std::vector<std::pair<int, int>>&>(cur));
    return;
  }
  if (b.rows() - row + 1 < remaining) return;
  // Place a rook in this row on a free column, or leave the row empty.
  std::uint64_t free = b.row_mask(row) & ~used;
  while (free) {
    const int j = std::countr_zero(free);
    free &= free - 1;
    cur.emplace_back(row, j + 1);
    rook_backtrack(b, k, row + 1, used | (std::uint64_t{1} << j), cur, f);
    cur.pop_back();
  }
  if (b.rows() - row >= remaining) rook_backtrack(b, k, row + 1, used, cur, f);
}

}  // namespace detail

// Calls f(cells) once for each k-rook configuration on b; cells are sorted by row.
template <class F>
void for_each_rook_config(const Board& b, int k, F&& f) {
  if (k < 0) throw RangeError("negative rook count");
  std::vector<std::pair<int, int>> cur;
  cur.reserve(static_cast<std::size_t>(k));
  if (k == 0) {
    f(const_cast<const std::vector<std::pair<int, int>>&>(cur));
    return;
  }
  if (b.rows() == 0) return;
  detail::rook_backtrack(b, k, 1, 0, cur, f);
}

inline std::vector<RookConfig> enumerate_rook_configs(const Board& b, int k) {
  std::vector<RookConfig> out;
  for_each_rook_config(b, k, [&](const std::vector<std::pair<int, int>>& cells) { out.emplace_back(cells); });
  return out;
}

/// Full rook configurations on a square board, as permutations, sorted.
inline std::vector<Permutation> max_configs(const Board& b) {
  if (!b.is_square()) throw ShapeError("max_configs needs a square board");
  std::vector<Permutation> out;
  std::vector<int> word(static_cast<std::size_t>(b.rows()));
  for_each_rook_config(b, b.rows(), [&](const std::vector<std::pair<int, int>>& cells) {
    for (const auto& [i, j] : cells) word[static_cast<std::size_t>(i - 1)] = j;
    out.push_back(make_unchecked(word));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhat_rook
