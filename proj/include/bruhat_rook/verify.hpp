#pragma once

// Exhaustive and sampled cross-checks of the closed forms against
// brute-force oracles. Every check is deterministic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_rook/board.hpp"
#include "bruhat_rook/intervals.hpp"
#include "bruhat_rook/laurent_poly.hpp"
#include "bruhat_rook/permutation.hpp"
#include "bruhat_rook/q_numbers.hpp"
#include "bruhat_rook/rook_theory.hpp"

namespace bruhat_rook::verify {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, if any

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void expect(bool ok, const std::string& why) {
    ++cases;
    if (!ok) fail(why);
  }
};

// ---------------------------------------------------------------------------
// Oracles and enumerators

// Ordinary rook polynomial sum_k R_{n-k} x(x-1)...(x-k+1), with the rook
// numbers counted by enumeration.
inline BigInt brute_rook_poly_at_one(const Board& b, int n, int x) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt count = 0;
    for_each_rook_config(b, n - k, [&](const auto&) { ++count; });
    BigInt falling = 1;
    for (int j = 0; j < k; ++j) falling *= x - j;
    total += count * falling;
  }
  return total;
}

inline LaurentPoly brute_q_rook_poly(const Board& b, int n, int x) {
  LaurentPoly r;
  for (int k = 0; k <= n; ++k) r += q_rook_number_enumerated(b, n - k) * q_falling(x, k);
  return r;
}

// Weakly decreasing sequences of length len with entries in [0, max].
inline std::vector<std::vector<int>> partitions_in_box(int len, int max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(max);
  return out;
}

inline Board ferrers_board(const std::vector<int>& rows, int cols, Alignment align) {
  Board b(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int t = 0; t < rows[i]; ++t) {
      const int j = align == Alignment::left ? t + 1 : cols - t;
      b.set(static_cast<int>(i) + 1, j);
    }
  return b;
}

inline std::vector<Board> all_ferrers_boards(int m, int n, Alignment align) {
  std::vector<Board> out;
  for (const auto& r : partitions_in_box(m, n)) out.push_back(ferrers_board(r, n, align));
  return out;
}

// Distinct boards lambda - mu for right-aligned Ferrers mu <= lambda in n x n.
inline std::vector<Board> all_right_skew_boards(int n) {
  const auto shapes = partitions_in_box(n, n);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Board> out;
  for (const auto& outer : shapes)
    for (const auto& inner : shapes) {
      bool nested = true;
      for (int i = 0; i < n; ++i) nested = nested && inner[static_cast<std::size_t>(i)] <= outer[static_cast<std::size_t>(i)];
      if (!nested) continue;
      std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const auto lam = Board::full_mask(n) & ~Board::full_mask(n - outer[static_cast<std::size_t>(i)]);
        const auto mu = Board::full_mask(n) & ~Board::full_mask(n - inner[static_cast<std::size_t>(i)]);
        masks[static_cast<std::size_t>(i)] = lam & ~mu;
      }
      if (seen.insert(masks).second) out.push_back(Board::from_masks(n, masks));
    }
  return out;
}

inline std::vector<Board> all_boards(int m, int n) {
  std::vector<Board> out;
  const int cells = m * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) masks[static_cast<std::size_t>(i)] = (bits >> (i * n)) & Board::full_mask(n);
    out.push_back(Board::from_masks(n, std::move(masks)));
  }
  return out;
}

// Bruhat relation on S_n as a dense matrix over the lexicographic listing.
struct BruhatRelation {
  std::vector<Permutation> perms;
  std::vector<std::vector<bool>> leq;  // leq[a][b] : perms[a] <= perms[b]

  explicit BruhatRelation(int n) : perms(all_permutations(n)) {
    std::vector<std::vector<int>> tables;
    for (const auto& p : perms) tables.push_back(detail::rank_table(p));
    const std::size_t N = perms.size();
    leq.assign(N, std::vector<bool>(N, false));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        bool ok = true;
        for (std::size_t t = 0; t < tables[a].size() && ok; ++t) ok = tables[a][t] <= tables[b][t];
        leq[a][b] = ok;
      }
  }

  std::size_t index_of(const Permutation& p) const {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  }
};

inline std::string show(const LaurentPoly& p) { return p.to_string(); }

// ---------------------------------------------------------------------------
// Permutation-level properties

inline CheckResult check_bruhat_partial_order(int max_n) {
  CheckResult r{"Bruhat order is a partial order (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const BruhatRelation rel(n);
    const std::size_t N = rel.perms.size();
    for (std::size_t a = 0; a < N; ++a) {
      r.expect(rel.leq[a][a], "not reflexive at " + rel.perms[a].to_string());
      for (std::size_t b = 0; b < N; ++b) {
        if (a != b && rel.leq[a][b] && rel.leq[b][a])
          r.fail("not antisymmetric: " + rel.perms[a].to_string() + ", " + rel.perms[b].to_string());
        if (!rel.leq[a][b]) continue;
        for (std::size_t c = 0; c < N; ++c)
          if (rel.leq[b][c] && !rel.leq[a][c]) r.fail("not transitive through " + rel.perms[b].to_string());
      }
    }
    // bruhat_leq itself agrees with the table
    for (std::size_t a = 0; a < N; a += 7)
      for (std::size_t b = 0; b < N; b += 5)
        r.expect(bruhat_leq(rel.perms[a], rel.perms[b]) == rel.leq[a][b], "bruhat_leq disagrees with rank table");
  }
  return r;
}

inline CheckResult check_flip_antiautomorphism(int max_n) {
  CheckResult r{"flip_ud is a Bruhat antiautomorphism (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const BruhatRelation rel(n);
    const std::size_t N = rel.perms.size();
    std::vector<std::size_t> flipped(N);
    for (std::size_t a = 0; a < N; ++a) flipped[a] = rel.index_of(flip_ud(rel.perms[a]));
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        r.expect(rel.leq[a][b] == rel.leq[flipped[b]][flipped[a]],
                 "antiautomorphism fails for " + rel.perms[a].to_string() + ", " + rel.perms[b].to_string());
  }
  return r;
}

// Reachability along transpositions that increase the inversion count.
inline CheckResult check_transposition_closure(int max_n) {
  CheckResult r{"Bruhat order = closure of inversion-increasing transpositions (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const BruhatRelation rel(n);
    const std::size_t N = rel.perms.size();
    std::vector<std::vector<std::size_t>> up(N);
    for (std::size_t a = 0; a < N; ++a) {
      const int inv_a = inversions(rel.perms[a]);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto w = rel.perms[a].word();
          std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
          const auto p = make_unchecked(w);
          if (inversions(p) > inv_a) up[a].push_back(rel.index_of(p));
        }
    }
    for (std::size_t a = 0; a < N; ++a) {
      std::vector<bool> reach(N, false);
      std::vector<std::size_t> stack{a};
      reach[a] = true;
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (auto y : up[x])
          if (!reach[y]) {
            reach[y] = true;
            stack.push_back(y);
          }
      }
      for (std::size_t b = 0; b < N; ++b)
        r.expect(reach[b] == rel.leq[a][b],
                 "closure disagrees for " + rel.perms[a].to_string() + ", " + rel.perms[b].to_string());
    }
  }
  return r;
}

inline CheckResult check_interval_monotone(int max_n) {
  CheckResult r{"u <= w implies [id,u] subset of [id,w] (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const BruhatRelation rel(n);
    const std::size_t N = rel.perms.size();
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        if (!rel.leq[a][b]) continue;
        bool ok = true;
        for (std::size_t v = 0; v < N && ok; ++v) ok = !rel.leq[v][a] || rel.leq[v][b];
        r.expect(ok, "lower intervals not nested for " + rel.perms[a].to_string() + " <= " + rel.perms[b].to_string());
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Boards

inline CheckResult check_skew_ferrers_fast_path(int max_dim) {
  CheckResult r{"skew Ferrers interval test = lambda/mu search (boards <= " + std::to_string(max_dim) + "x" +
                std::to_string(max_dim) + ")"};
  for (int m = 0; m <= max_dim; ++m)
    for (int n = 0; n <= max_dim; ++n)
      for (const auto& b : all_boards(m, n))
        for (auto align : {Alignment::right, Alignment::left}) {
          const bool fast = is_skew_ferrers(b, align);
          const bool def = skew_ferrers_decomposition(b, align).has_value();
          r.expect(fast == def, "disagreement on board\n" + b.to_string());
          if (is_ferrers(b, align)) r.expect(fast, "Ferrers board not skew Ferrers\n" + b.to_string());
        }
  return r;
}

inline CheckResult check_hull_minimality(int max_n) {
  CheckResult r{"right hull is the smallest covering right skew Ferrers board (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Board> skew;
    for (const auto& b : all_boards(n, n))
      if (skew_ferrers_decomposition(b, Alignment::right)) skew.push_back(b);
    for_each_permutation(n, [&](const Permutation& p) {
      const Board hull = right_hull(p);
      r.expect(skew_ferrers_decomposition(hull, Alignment::right).has_value(),
               "hull is not right skew Ferrers for " + p.to_string());
      r.expect(covers(hull, p), "hull does not cover " + p.to_string());
      for (const auto& b : skew)
        if (covers(b, p) && !hull.subset_of(b)) r.fail("hull of " + p.to_string() + " is not minimal");
      const Board lh = left_hull(p);
      r.expect(skew_ferrers_decomposition(lh, Alignment::left).has_value() && covers(lh, p),
               "left hull malformed for " + p.to_string());
    });
  }
  return r;
}

inline CheckResult check_order_ideal(int max_n) {
  CheckResult r{"full configurations on right skew Ferrers boards form order ideals (n <= " + std::to_string(max_n) +
                ")"};
  for (int n = 1; n <= max_n; ++n) {
    const BruhatRelation rel(n);
    const std::size_t N = rel.perms.size();
    for (const auto& b : all_right_skew_boards(n)) {
      std::vector<bool> in(N, false);
      std::vector<std::size_t> members;
      for (const auto& p : max_configs(b)) {
        const auto idx = rel.index_of(p);
        in[idx] = true;
        members.push_back(idx);
      }
      bool ok = true;
      for (auto x : members)
        for (std::size_t v = 0; v < N && ok; ++v) ok = !rel.leq[v][x] || in[v];
      r.expect(ok, "not downward closed on board\n" + b.to_string());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rook theory

inline CheckResult check_rook_product_formula(int max_dim, int max_x) {
  CheckResult r{"rook polynomial product formula, right-aligned Ferrers (<= " + std::to_string(max_dim) + "x" +
                std::to_string(max_dim) + ", x <= " + std::to_string(max_x) + ")"};
  for (int m = 1; m <= max_dim; ++m)
    for (int n = 1; n <= max_dim; ++n)
      for (const auto& b : all_ferrers_boards(m, n, Alignment::right))
        for (int x = 0; x <= max_x; ++x) {
          const BigInt oracle = brute_rook_poly_at_one(b, n, x);
          r.expect(gjw_product(b, n, x) == oracle, "product formula fails at x=" + std::to_string(x) + "\n" + b.to_string());
          r.expect(evaluate_at_one(q_rook_poly(b, n, x)) == oracle, "q_rook_poly at q=1 disagrees\n" + b.to_string());
        }
  return r;
}

inline CheckResult check_q_rook_product_formula(int max_dim, int max_x) {
  CheckResult r{"q-rook polynomial product formula, left-aligned Ferrers (<= " + std::to_string(max_dim) + "x" +
                std::to_string(max_dim) + ", x <= " + std::to_string(max_x) + ")"};
  for (int m = 1; m <= max_dim; ++m)
    for (int n = 1; n <= max_dim; ++n)
      for (const auto& b : all_ferrers_boards(m, n, Alignment::left))
        for (int x = 0; x <= max_x; ++x) {
          const LaurentPoly oracle = brute_q_rook_poly(b, n, x);
          const LaurentPoly prod = garsia_remmel_product(b, n, x);
          r.expect(prod == oracle, "x=" + std::to_string(x) + ": " + show(prod) + " vs " + show(oracle) + "\n" + b.to_string());
          r.expect(q_rook_poly(b, n, x) == oracle, "mask DP disagrees with enumeration\n" + b.to_string());
        }
  return r;
}

inline CheckResult check_staircase_stirling(int max_n) {
  CheckResult r{"staircase q-rook numbers are shifted q-Stirling numbers (n <= " + std::to_string(max_n) + ")"};
  for (int n = 0; n <= max_n; ++n) {
    const Board t = triangular(n);
    for (int k = 0; k <= n; ++k) {
      const auto brute = q_rook_number_enumerated(t, k);
      const auto formula = t_board_q_rook(n, k);
      r.expect(formula == brute, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + show(formula) + " vs " + show(brute));
      r.expect(q_rook_number(t, k) == brute, "mask DP disagrees on T_" + std::to_string(n));
    }
  }
  return r;
}

inline CheckResult check_square_board(int max_n) {
  CheckResult r{"full q-rook number of the all-ones square is [n]!_q (n <= " + std::to_string(max_n) + ")"};
  for (int n = 0; n <= max_n; ++n) {
    r.expect(q_rook_number_enumerated(ones(n, n), n) == q_factorial(n), "enumeration fails at n=" + std::to_string(n));
    r.expect(q_rook_number(ones(n, n), n) == q_factorial(n), "mask DP fails at n=" + std::to_string(n));
  }
  return r;
}

namespace detail {

inline std::vector<Board> square_boards_up_to(int max_dim) {
  std::vector<Board> out;
  for (int d = 1; d <= max_dim; ++d)
    for (auto& b : all_boards(d, d)) out.push_back(std::move(b));
  return out;
}

}  // namespace detail

inline CheckResult check_block_q_rook(int max_dim) {
  CheckResult r{"block composition q-rook formula, all square pairs (<= " + std::to_string(max_dim) + "x" +
                std::to_string(max_dim) + ")"};
  const auto boards = detail::square_boards_up_to(max_dim);
  for (const auto& a : boards)
    for (const auto& b : boards) {
      const int total = a.rows() + b.rows();
      const auto closed = sharp_q_rook(a, b);
      const auto brute = q_rook_number_enumerated(block_sharp(b, a), total);
      if (closed != brute) {
        r.expect(false, "mismatch: " + show(closed) + " vs " + show(brute) + "\nA=\n" + a.to_string() + "B=\n" + b.to_string());
        continue;
      }
      ++r.cases;
    }
  return r;
}

inline CheckResult check_block_rb(int max_dim) {
  CheckResult r{"type-B block composition formula (<= " + std::to_string(max_dim) + "x" + std::to_string(max_dim) + ")"};
  for (const auto& a : detail::square_boards_up_to(max_dim)) {
    const auto closed = sharp_rb(a);
    const auto brute = rb_polynomial(block_sharp(rotate180(a), a));
    r.expect(closed == brute, "mismatch: " + closed.to_string() + " vs " + brute.to_string() + "\n" + a.to_string());
  }
  return r;
}

// RB of the flipped board equals q^{C(2n,2)} t^n RB(1/q, 1/t).
inline CheckResult check_rb_flip(int max_dim) {
  CheckResult r{"RB polynomial under upside-down flip (<= " + std::to_string(2 * max_dim) + "x" +
                std::to_string(2 * max_dim) + " sharp boards)"};
  for (const auto& a : detail::square_boards_up_to(max_dim)) {
    const Board big = block_sharp(rotate180(a), a);
    const int n = a.rows();
    const auto lhs = rb_polynomial(flip_ud(big));
    const auto rhs = rb_polynomial(big)
                         .map_q([&](const LaurentPoly& p) { return substitute_q_inverse(p).shifted(n * (2 * n - 1)); })
                         .reversed_t(n);
    r.expect(lhs == rhs, "flip identity fails\n" + a.to_string());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Intervals

inline CheckResult check_hull_pattern_characterization(int max_n) {
  CheckResult r{"hull configurations = [id,p] iff p avoids 4231,35142,42513,351624 (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const auto id = Permutation::identity(n);
    for_each_permutation(n, [&](const Permutation& p) {
      const bool equal = max_configs(right_hull(p)) == bruhat_interval(id, p);
      r.expect(equal == avoids_forbidden(p), "biconditional fails at " + p.to_string());
    });
  }
  // Witnesses for the "only if" direction.
  const std::pair<const char*, const char*> witnesses[] = {
      {"4231", "4321"}, {"35142", "15432"}, {"42513", "43215"}, {"351624", "154326"}};
  for (const auto& [pi, rho] : witnesses) {
    const auto p = Permutation::parse(pi);
    const auto w = Permutation::parse(rho);
    r.expect(covers(right_hull(p), w) && !bruhat_leq(w, p), std::string("witness fails for ") + pi);
  }
  return r;
}

inline CheckResult check_hull_intersection_poincare(int max_n, int samples_per_n, std::uint32_t seed = 12345) {
  CheckResult r{"hull intersection q-rook number = Poincare polynomial of [u,w] (sampled, n <= " +
                std::to_string(max_n) + ")"};
  std::mt19937 rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    const auto id = Permutation::identity(n);
    std::vector<Permutation> avoiders, flip_avoiders;
    for_each_permutation(n, [&](const Permutation& p) {
      if (avoids_forbidden(p)) avoiders.push_back(p);
      if (avoids_forbidden(flip_ud(p))) flip_avoiders.push_back(p);
    });
    for (const auto& w : avoiders) {
      LaurentPoly via_hull;
      for (const auto& v : hull_interval_elements(w)) via_hull += LaurentPoly::monomial(inversions(v));
      const auto rook = poincare_via_rook(id, w);
      r.expect(rook == poincare_brute(id, w) && rook == via_hull, "lower interval mismatch at " + w.to_string());
    }
    std::uniform_int_distribution<std::size_t> pick_w(0, avoiders.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_u(0, flip_avoiders.size() - 1);
    int done = 0;
    for (int attempt = 0; attempt < samples_per_n * 50 && done < samples_per_n; ++attempt) {
      const auto& w = avoiders[pick_w(rng)];
      const auto& u = flip_avoiders[pick_u(rng)];
      if (!bruhat_leq(u, w)) continue;
      ++done;
      const auto rook = poincare_via_rook(u, w);
      r.expect(rook == poincare_brute(u, w), "[" + u.to_string() + "," + w.to_string() + "]: " + show(rook));
    }
  }
  return r;
}

inline constexpr const char* s9_instance_u = "562314978";
inline constexpr const char* s9_instance_w = "687594123";

inline CheckResult check_s9_instance() {
  CheckResult r{"u=562314978, w=687594123 in S_9: hull q-rook number = brute-force Poincare polynomial"};
  const auto u = Permutation::parse(s9_instance_u);
  const auto w = Permutation::parse(s9_instance_w);
  r.expect(avoids_forbidden(w) && avoids_forbidden(flip_ud(u)), "pattern condition fails");
  r.expect(bruhat_leq(u, w), "u is not below w");
  const auto rook = poincare_via_rook(u, w);
  const auto brute = poincare_brute(u, w);
  r.expect(rook == brute, show(rook) + " vs " + show(brute));
  r.expect(max_configs(intersect(right_hull(w), left_hull(u))) == bruhat_interval(u, w),
           "configurations differ from the interval");
  r.expect(satisfies_bjorner_ekedahl(brute), "coefficient inequality fails: " + show(brute));
  r.detail = r.passed ? "|[u,w]| = " + evaluate_at_one(brute).str() + ", P = " + show(brute) : r.detail;
  return r;
}

inline Board aztec_diamond(int n) {
  Board b(2 * n, 2 * n);
  for (int i = 1; i <= 2 * n; ++i) {
    const int half = i <= n ? i : 2 * n + 1 - i;
    for (int j = n - half + 1; j <= n + half; ++j) b.set(i, j);
  }
  return b;
}

inline CheckResult check_aztec(int max_n, int brute_max) {
  CheckResult r{"|[w^flip, w]| = 2^n for the middle maximal representative (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const auto w = max_coset_rep_A(2 * n, n).w();
    const auto u = flip_ud(w);
    const BigInt expect = BigInt(1) << n;
    r.expect(aztec_interval_size(n) == expect, "rook count differs from 2^" + std::to_string(n));
    r.expect(intersect(right_hull(w), left_hull(u)) == aztec_diamond(n), "board is not the Aztec diamond");
    const auto rook = poincare_via_rook(u, w);
    r.expect(evaluate_at_one(rook) == expect && satisfies_bjorner_ekedahl(rook), "Poincare polynomial " + show(rook));
    if (n <= brute_max) {
      const auto brute = poincare_brute(u, w);
      r.expect(brute == rook && evaluate_at_one(brute) == expect, "brute force disagrees at n=" + std::to_string(n));
    }
  }
  return r;
}

inline CheckResult check_type_a_closed_form(int max_n) {
  CheckResult r{"type A closed form = brute force for the maximal representative (n <= " + std::to_string(max_n) + ")"};
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k) {
      const auto w = max_coset_rep_A(n, k).w();
      const auto closed = theoremA_poincare(n, k);
      const auto brute = poincare_brute(Permutation::identity(n), w);
      const std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
      r.expect(closed == brute, at + ": " + show(closed) + " vs " + show(brute));
      bool positive = closed.is_ordinary() && closed.coeff(0) == 1 && closed.max_exp() == k * (n - k);
      for (const auto& c : closed.coeffs()) positive = positive && c > 0;
      r.expect(positive, at + ": not a positive polynomial of degree k(n-k)");
      r.expect(satisfies_bjorner_ekedahl(brute), at + ": coefficient inequality fails");
      r.expect(right_hull(w) == flip_ud(block_sharp(rotate180(triangular(n - k)), triangular(k))),
               at + ": hull identity fails");
    }
  return r;
}

inline CheckResult check_type_b_closed_form(int max_n) {
  CheckResult r{"type B closed form = symmetric-element brute force (n <= " + std::to_string(max_n) + ")"};
  for (int n = 1; n <= max_n; ++n) {
    const auto w = max_coset_rep_B(n);
    const auto closed = theoremB_poincare(n);
    const auto brute = poincare_brute_B(w);
    const std::string at = "n=" + std::to_string(n);
    r.expect(closed == brute, at + ": " + show(closed) + " vs " + show(brute));
    r.expect(poincare_B_via_rook(n) == brute, at + ": rook route disagrees");
    r.expect(closed.is_ordinary() && closed.coeff(0) == 1 && closed.max_exp() == n * (n + 1) / 2,
             at + ": wrong degree or constant term");
    r.expect(rank_B(w) == n * (n + 1) / 2, at + ": rank of the top element");
    r.expect(satisfies_bjorner_ekedahl(brute), at + ": coefficient inequality fails");
    r.expect(right_hull(w.permutation()) == flip_ud(block_sharp(rotate180(triangular(n)), triangular(n))),
             at + ": hull identity fails");
  }
  return r;
}

inline CheckResult check_interval_count_identities(int max_n) {
  CheckResult r{"three Stirling/poly-Bernoulli counts agree with the DP and the q=1 closed form (n <= " +
                std::to_string(max_n) + ")"};
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k) {
      const auto c = theorem8_counts(n, k);
      const auto dp = count_lower_interval_dp(max_coset_rep_A(n, k));
      const auto at_one = evaluate_at_one(theoremA_poincare(n, k));
      const std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
      r.expect(c.stirling_product_sum == c.alternating_sum && c.alternating_sum == c.poly_bernoulli,
               at + ": " + c.stirling_product_sum.str() + ", " + c.alternating_sum.str() + ", " + c.poly_bernoulli.str());
      r.expect(dp == c.stirling_product_sum, at + ": DP gives " + dp.str());
      r.expect(at_one == c.stirling_product_sum, at + ": closed form at q=1 gives " + at_one.str());
    }
  return r;
}

inline CheckResult check_interval_dp(int max_n) {
  CheckResult r{"DP count = |[id,w]| for every minimal coset representative (n <= " + std::to_string(max_n) + ")"};
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& rep : all_coset_reps_A(n, k)) {
        std::size_t brute = 0;
        for_each_in_interval(Permutation::identity(n), rep.w(), [&](const auto&) { ++brute; });
        const auto dp = count_lower_interval_dp(rep);
        r.expect(dp == brute, "w=" + rep.w().to_string() + " k=" + std::to_string(k) + ": DP " + dp.str() + " vs " +
                                  std::to_string(brute));
        const auto reduced = reduce_coset_rep(rep);
        r.expect(reduce_coset_rep(reduced) == reduced && reduced.w()(reduced.k()) == reduced.n(),
                 "reduction not idempotent for " + rep.w().to_string());
      }
  return r;
}

inline CheckResult check_poly_bernoulli_symmetry(int max) {
  CheckResult r{"B_n^{-k} = B_k^{-n} (n, k <= " + std::to_string(max) + ")"};
  for (int n = 0; n <= max; ++n)
    for (int k = 0; k <= max; ++k)
      r.expect(poly_bernoulli(n, -k) == poly_bernoulli(k, -n), "asymmetric at " + std::to_string(n) + "," + std::to_string(k));
  return r;
}

inline CheckResult check_q_stirling_specialization(int max_n) {
  CheckResult r{"q-Stirling numbers specialize to Stirling numbers at q=1 (n <= " + std::to_string(max_n) + ")"};
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k)
      r.expect(evaluate_at_one(q_stirling(n, k)) == stirling2(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
  return r;
}

// ---------------------------------------------------------------------------
// Suites for the command-line driver

enum class Suite { all, rook, intervals, typeB, stirling };

struct SuiteLimits {
  int intervals = 7;
  int typeB = 4;
  int boards = 4;
  int stirling = 8;
};

struct SuiteReport {
  std::vector<std::string> warnings;
  std::vector<CheckResult> results;
  bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
  }
};

inline SuiteReport run_suite(Suite suite, int max_n, const SuiteLimits& limits = {}) {
  SuiteReport rep;
  auto clamp = [&](int limit, const char* what) {
    if (max_n > limit) {
      rep.warnings.push_back(std::string("max-n ") + std::to_string(max_n) + " exceeds the " + what + " limit; using " +
                             std::to_string(limit));
      return limit;
    }
    return max_n;
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::stirling) {
    const int n = clamp(limits.stirling, "stirling");
    rep.results.push_back(check_q_stirling_specialization(n));
    rep.results.push_back(check_staircase_stirling(n));
    rep.results.push_back(check_square_board(std::min(n, 7)));
    rep.results.push_back(check_poly_bernoulli_symmetry(n));
    rep.results.push_back(check_interval_count_identities(n));
  }
  if (all || suite == Suite::rook) {
    const int d = clamp(limits.boards, "board");
    rep.results.push_back(check_skew_ferrers_fast_path(d));
    rep.results.push_back(check_rook_product_formula(d, 4));
    rep.results.push_back(check_q_rook_product_formula(d, 4));
    rep.results.push_back(check_block_q_rook(std::min(d, 2)));
    rep.results.push_back(check_hull_minimality(d));
  }
  if (all || suite == Suite::intervals) {
    const int n = clamp(limits.intervals, "interval");
    rep.results.push_back(check_bruhat_partial_order(std::min(n, 5)));
    rep.results.push_back(check_flip_antiautomorphism(std::min(n, 5)));
    rep.results.push_back(check_transposition_closure(std::min(n, 5)));
    rep.results.push_back(check_order_ideal(std::min(n, 5)));
    rep.results.push_back(check_hull_pattern_characterization(n));
    rep.results.push_back(check_hull_intersection_poincare(std::min(n, 6), 30));
    rep.results.push_back(check_type_a_closed_form(n));
    rep.results.push_back(check_interval_dp(n));
    rep.results.push_back(check_aztec(std::max(1, n / 2), std::max(1, n / 2)));
  }
  if (all || suite == Suite::typeB) {
    const int n = clamp(limits.typeB, "type B");
    rep.results.push_back(check_type_b_closed_form(n));
    rep.results.push_back(check_block_rb(std::min(n, 3)));
    rep.results.push_back(check_rb_flip(std::min(n, 3)));
  }
  return rep;
}

}  // namespace bruhat_rook::verify
