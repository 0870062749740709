#include <random>

#include <gtest/gtest.h>

#include "bruhat_rook/board.hpp"
#include "bruhat_rook/verify.hpp"

using namespace bruhat_rook;

namespace {

Board B(const char* text) { return Board::parse(text); }
Permutation W(const char* s) { return Permutation::parse(s); }

Board random_board(std::mt19937& rng, int m, int n) {
  std::bernoulli_distribution coin(0.6);
  Board b(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (coin(rng)) b.set(i, j);
  return b;
}

std::size_t config_count(const Board& b, int k) {
  std::size_t c = 0;
  for_each_rook_config(b, k, [&](const auto&) { ++c; });
  return c;
}

}  // namespace

TEST(Board, ParseAndPrint) {
  const Board b = B("##.\n.#.\n");
  EXPECT_EQ(b.rows(), 2);
  EXPECT_EQ(b.cols(), 3);
  EXPECT_TRUE(b.at(1, 2));
  EXPECT_FALSE(b.at(2, 1));
  EXPECT_EQ(b.to_string(), "##.\n.#.\n");
  EXPECT_EQ(B("##.\n.#."), b);
  EXPECT_EQ(Board::parse(b.to_string()), b);
  EXPECT_THROW(B("##\n#"), ParseError);
  EXPECT_THROW(B("#x"), ParseError);
  EXPECT_THROW(b.at(3, 1), RangeError);
  EXPECT_THROW(Board(1, 65), RangeError);
  EXPECT_EQ(Board(2, 64).cols(), 64);
}

TEST(Board, Constructors) {
  EXPECT_EQ(ones(2, 2).count_ones(), 4);
  EXPECT_EQ(triangular(1), B("#"));
  EXPECT_EQ(triangular(3), B("###\n##.\n#.."));
  EXPECT_EQ(flip_ud(triangular(3)), B("#..\n##.\n###"));
  EXPECT_EQ(rotate180(ones(2, 3)), ones(2, 3));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Board b = random_board(rng, 3, 5);
    EXPECT_EQ(rotate180(rotate180(b)), b);
    EXPECT_EQ(flip_ud(flip_ud(b)), b);
    EXPECT_EQ(intersect(b, ones(3, 5)), b);
    EXPECT_EQ(intersect(b, b), b);
  }
  EXPECT_THROW(intersect(ones(2, 2), ones(2, 3)), SizeMismatch);
}

TEST(Board, RowAndColumnLengths) {
  const Board lambda = B("###.\n##..\n....");
  EXPECT_EQ(row_lengths(lambda), (std::vector<int>{3, 2, 0}));
  EXPECT_EQ(col_lengths(lambda), (std::vector<int>{2, 2, 1, 0}));
  const Board mu = B("###\n###\n..#");
  EXPECT_EQ(row_lengths(mu), (std::vector<int>{3, 3, 1}));
  EXPECT_EQ(col_lengths(mu), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(row_lengths(ones(2, 3)), (std::vector<int>{3, 3}));
  EXPECT_EQ(col_lengths(ones(2, 3)), (std::vector<int>{2, 2, 2}));
}

TEST(Board, FerrersShapes) {
  const Board lambda = B("###.\n##..\n....");
  const Board mu = B("###\n###\n..#");
  EXPECT_TRUE(is_ferrers(lambda, Alignment::left));
  EXPECT_FALSE(is_ferrers(lambda, Alignment::right));
  EXPECT_TRUE(is_ferrers(mu, Alignment::right));
  EXPECT_TRUE(is_skew_ferrers(lambda, Alignment::left));
  EXPECT_TRUE(is_skew_ferrers(mu, Alignment::right));
  EXPECT_FALSE(is_skew_ferrers(B("#.#"), Alignment::right));
  const auto d = skew_ferrers_decomposition(right_hull(W("35124")), Alignment::right);
  ASSERT_TRUE(d);
  const Board outer = verify::ferrers_board(d->outer, 5, Alignment::right);
  const Board inner = verify::ferrers_board(d->inner, 5, Alignment::right);
  EXPECT_TRUE(is_ferrers(outer, Alignment::right));
  EXPECT_TRUE(is_ferrers(inner, Alignment::right));
  EXPECT_TRUE(inner.subset_of(outer));
  Board diff = outer;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (inner.at(i, j)) diff.set(i, j, false);
  EXPECT_EQ(diff, right_hull(W("35124")));
}

TEST(Board, SkewFastPathMatchesSearch) {
  const auto r = verify::check_skew_ferrers_fast_path(4);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Board, BlockSharp) {
  EXPECT_EQ(block_sharp(ones(1, 1), ones(1, 1)), ones(2, 2));
  EXPECT_EQ(block_sharp(triangular(1), triangular(1)), ones(2, 2));
  const Board s = block_sharp(triangular(2), ones(3, 3));
  EXPECT_EQ(s.rows(), 5);
  EXPECT_EQ(s, B("#####\n#.###\n#####\n#####\n#####"));
  EXPECT_EQ(block_sharp(Board(0, 0), triangular(2)), triangular(2));
  EXPECT_THROW(block_sharp(ones(1, 2), ones(1, 1)), ShapeError);
}

TEST(Board, Hulls) {
  EXPECT_EQ(right_hull(Permutation::identity(3)), B("#..\n.#.\n..#"));
  EXPECT_EQ(right_hull(W("35124")), B("###..\n#####\n#####\n.####\n...##"));
  EXPECT_EQ(right_hull(W("1")), B("#"));
  EXPECT_EQ(left_hull(W("21")), B(".#\n#."));
  EXPECT_EQ(left_hull(W("12")), B("##\n##"));
  EXPECT_EQ(right_hull(W("21")), B("##\n##"));
  const Board aztec = intersect(right_hull(W("56781234")), left_hull(W("43218765")));
  EXPECT_EQ(aztec, verify::aztec_diamond(4));
  EXPECT_EQ(aztec.to_string(),
            "...##...\n"
            "..####..\n"
            ".######.\n"
            "########\n"
            "########\n"
            ".######.\n"
            "..####..\n"
            "...##...\n");
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      EXPECT_EQ(left_hull(p), flip_ud(right_hull(flip_ud(p))));
      EXPECT_TRUE(covers(right_hull(p), p));
      EXPECT_TRUE(covers(left_hull(p), p));
    });
}

TEST(Board, HullMinimality) {
  const auto r = verify::check_hull_minimality(4);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Board, OrderIdeals) {
  const auto r = verify::check_order_ideal(4);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Board, RookConfigs) {
  EXPECT_TRUE(covers(triangular(2), RookConfig{}));
  EXPECT_FALSE(covers(triangular(2), RookConfig({{2, 2}})));
  EXPECT_THROW(RookConfig({{1, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(RookConfig({{1, 1}, {2, 1}}), PreconditionError);
  EXPECT_EQ(enumerate_rook_configs(triangular(3), 0).size(), 1u);
  EXPECT_EQ(enumerate_rook_configs(ones(2, 2), 1).size(), 4u);
  EXPECT_EQ(enumerate_rook_configs(ones(3, 3), 3).size(), 6u);
  EXPECT_TRUE(enumerate_rook_configs(ones(2, 3), 3).empty());
  EXPECT_THROW(enumerate_rook_configs(ones(2, 2), -1), RangeError);
}

TEST(Board, MaxConfigs) {
  EXPECT_EQ(max_configs(ones(3, 3)), all_permutations(3));
  EXPECT_EQ(max_configs(triangular(2)), std::vector<Permutation>{W("21")});
  EXPECT_EQ(max_configs(right_hull(W("231"))),
            (std::vector<Permutation>{W("123"), W("132"), W("213"), W("231")}));
  EXPECT_THROW(max_configs(ones(2, 3)), ShapeError);
}

TEST(Board, ConfigCountsInvariantUnderSymmetries) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Board b = random_board(rng, 1 + t % 4, 1 + t % 5);
    for (int k = 0; k <= 4; ++k) {
      const auto c = config_count(b, k);
      EXPECT_EQ(config_count(flip_ud(b), k), c);
      EXPECT_EQ(config_count(rotate180(b), k), c);
      EXPECT_EQ(config_count(mirror_lr(b), k), c);
    }
  }
}
