#pragma once

// Command-line front end. run_cli() is callable in-process so the tests can
// drive it without spawning a shell.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bruhat_rook/bruhat_rook.hpp"

namespace bruhat_rook::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, pattern_violation = 3 };

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson poly_json(const LaurentPoly& p) { return ojson(p); }

inline Board read_board(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open board file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return Board::parse(text);
}

// k = the unique descent of w, or 0 for the identity; nullopt when w has
// more than one descent.
inline std::optional<int> grassmannian_descent(const Permutation& w) {
  int k = 0;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) {
      if (k != 0) return std::nullopt;
      k = i;
    }
  return k;
}

inline constexpr int brute_limit = 10;

inline void require_brute_size(int n) {
  if (n > brute_limit) throw RangeError("brute force is limited to n <= " + std::to_string(brute_limit));
}

struct PoincareArgs {
  std::string type;
  int n = -1;
  int k = -1;
  std::string u, w;
  std::string method;
  bool at_one = false;
};

inline int run_poincare(const PoincareArgs& a, std::ostream& out) {
  std::string type = a.type;
  if (type.empty()) type = a.w.empty() ? "A" : "pair";
  std::string method = a.method;
  if (method.empty()) method = type == "pair" ? "rook" : "formula";
  if (method == "dp" && !a.at_one) throw UnsupportedArgument("--method dp needs --at-one");

  auto emit = [&](const LaurentPoly& p) {
    if (a.at_one)
      out << evaluate_at_one(p).str() << '\n';
    else
      out << poly_json(p).dump() << '\n';
  };

  if (type == "A") {
    if (a.n < 0 || a.k < 0) throw UnsupportedArgument("--type A needs --n and --k");
    if (method == "dp") {
      out << count_lower_interval_dp(max_coset_rep_A(a.n, a.k)).str() << '\n';
      return ok;
    }
    if (method == "formula") {
      emit(theoremA_poincare(a.n, a.k));
    } else if (method == "rook") {
      const auto w = max_coset_rep_A(a.n, a.k).w();
      emit(poincare_via_rook(Permutation::identity(a.n), w));
    } else if (method == "brute") {
      const auto w = max_coset_rep_A(a.n, a.k).w();
      require_brute_size(a.n);
      emit(poincare_brute(Permutation::identity(a.n), w));
    } else {
      throw UnsupportedArgument("unknown method '" + method + "'");
    }
    return ok;
  }
  if (type == "B") {
    if (a.n < 0) throw UnsupportedArgument("--type B needs --n");
    if (method == "formula") {
      emit(theoremB_poincare(a.n));
    } else if (method == "rook") {
      require_brute_size(2 * a.n);
      emit(poincare_B_via_rook(a.n));
    } else if (method == "brute") {
      require_brute_size(2 * a.n);
      emit(poincare_brute_B(max_coset_rep_B(a.n)));
    } else {
      throw UnsupportedArgument("method '" + method + "' is not available for type B");
    }
    return ok;
  }
  if (type == "pair") {
    if (a.w.empty()) throw UnsupportedArgument("--type pair needs --w");
    const auto w = Permutation::parse(a.w);
    const auto u = a.u.empty() ? Permutation::identity(w.size()) : Permutation::parse(a.u);
    if (!bruhat_leq(u, w)) throw PreconditionError("u is not below w in Bruhat order");
    if (method == "rook") {
      emit(poincare_via_rook(u, w));
    } else if (method == "brute") {
      require_brute_size(w.size());
      emit(poincare_brute(u, w));
    } else if (method == "dp") {
      if (u != Permutation::identity(w.size())) throw UnsupportedArgument("--method dp counts lower intervals only");
      const auto k = grassmannian_descent(w);
      if (!k) throw UnsupportedArgument("--method dp needs w with at most one descent");
      out << (*k == 0 ? BigInt(1) : count_lower_interval_dp(CosetRepA(w, *k))).str() << '\n';
    } else {
      throw UnsupportedArgument("method '" + method + "' is not available for --type pair");
    }
    return ok;
  }
  throw UnsupportedArgument("unknown type '" + type + "'");
}

struct TableArgs {
  std::string kind;
  int n = -1;
  int max_n = 6;
  std::string format = "tsv";
};

inline int run_table(const TableArgs& a, std::ostream& out) {
  if (a.max_n < 0) throw RangeError("--max-n must be >= 0");
  const bool json = a.format == "json";
  if (!json && a.format != "tsv") throw UnsupportedArgument("unknown format '" + a.format + "'");
  if (a.kind == "qstirling") {
    const int lo = a.n >= 0 ? a.n : 0;
    const int hi = a.n >= 0 ? a.n : a.max_n;
    ojson rows = ojson::array();
    for (int n = lo; n <= hi; ++n) {
      const int first = n == 0 ? 0 : 1;
      ojson row = ojson::array();
      std::string line = std::to_string(n);
      for (int k = first; k <= n; ++k) {
        const auto s = q_stirling(n, k);
        row.push_back(poly_json(s));
        line += '\t' + s.to_string();
      }
      if (json)
        rows.push_back(ojson{{"n", n}, {"k_from", first}, {"values", std::move(row)}});
      else
        out << line << '\n';
    }
    if (json) out << rows.dump() << '\n';
    return ok;
  }
  if (a.kind == "polybernoulli") {
    const int hi = a.n >= 0 ? a.n : a.max_n;
    if (json) {
      ojson rows = ojson::array();
      for (int n = 0; n <= hi; ++n) {
        ojson row = ojson::array();
        for (int k = 0; k <= hi; ++k) row.push_back(poly_bernoulli(n, -k).str());
        rows.push_back(std::move(row));
      }
      out << rows.dump() << '\n';
    } else {
      out << "n\\k";
      for (int k = 0; k <= hi; ++k) out << '\t' << k;
      out << '\n';
      for (int n = 0; n <= hi; ++n) {
        out << n;
        for (int k = 0; k <= hi; ++k) out << '\t' << poly_bernoulli(n, -k).str();
        out << '\n';
      }
    }
    return ok;
  }
  if (a.kind == "theorem8") {
    const int hi = a.n >= 0 ? a.n : a.max_n;
    ojson rows = ojson::array();
    if (!json) out << "n\tk\tstirling_product_sum\talternating_sum\tpoly_bernoulli\tdp\n";
    for (int n = 2; n <= hi; ++n)
      for (int k = 1; k < n; ++k) {
        const auto c = theorem8_counts(n, k);
        const auto dp = count_lower_interval_dp(max_coset_rep_A(n, k));
        if (json)
          rows.push_back(ojson{{"n", n},
                               {"k", k},
                               {"stirling_product_sum", c.stirling_product_sum.str()},
                               {"alternating_sum", c.alternating_sum.str()},
                               {"poly_bernoulli", c.poly_bernoulli.str()},
                               {"dp", dp.str()}});
        else
          out << n << '\t' << k << '\t' << c.stirling_product_sum.str() << '\t' << c.alternating_sum.str() << '\t'
              << c.poly_bernoulli.str() << '\t' << dp.str() << '\n';
      }
    if (json) out << rows.dump() << '\n';
    return ok;
  }
  throw UnsupportedArgument("unknown table kind '" + a.kind + "'");
}

inline int run_verify(const std::string& suite_name, int max_n, std::ostream& out, std::ostream& err) {
  using verify::Suite;
  Suite suite;
  if (suite_name == "all")
    suite = Suite::all;
  else if (suite_name == "rook")
    suite = Suite::rook;
  else if (suite_name == "intervals")
    suite = Suite::intervals;
  else if (suite_name == "typeB")
    suite = Suite::typeB;
  else if (suite_name == "stirling")
    suite = Suite::stirling;
  else
    throw UnsupportedArgument("unknown suite '" + suite_name + "'");
  if (max_n < 1) throw RangeError("--max-n must be >= 1");
  const auto report = verify::run_suite(suite, max_n);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  std::size_t failed = 0;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]\n";
    if (!r.passed) {
      ++failed;
      out << "     " << r.detail << '\n';
    }
  }
  out << (failed == 0 ? "all " + std::to_string(report.results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(report.results.size()) + " checks failed")
      << '\n';
  return failed == 0 ? ok : verification_failed;
}

}  // namespace detail

/// Runs the tool on args (without the program name). Structured output goes
/// to out, diagnostics to err.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CLI::App app{"Bruhat interval Poincare polynomials via q-rook theory", "bruhat-rook"};
  app.require_subcommand(1);

  std::string perm;
  std::string side = "right";
  auto* hull = app.add_subcommand("hull", "print the right or left hull of a permutation");
  hull->add_option("perm", perm, "permutation")->required();
  hull->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}));

  auto* check = app.add_subcommand("check", "test avoidance of 4231, 35142, 42513, 351624");
  check->add_option("perm", perm, "permutation")->required();

  detail::PoincareArgs pa;
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a Bruhat interval");
  poincare->add_option("--type", pa.type, "A, B or pair")->check(CLI::IsMember({"A", "B", "pair"}));
  poincare->add_option("--n", pa.n, "rank");
  poincare->add_option("--k", pa.k, "parabolic index (type A)");
  poincare->add_option("--u", pa.u, "lower permutation (pair)");
  poincare->add_option("--w", pa.w, "upper permutation (pair)");
  poincare->add_option("--method", pa.method, "formula, rook, brute or dp")
      ->check(CLI::IsMember({"formula", "rook", "brute", "dp"}));
  poincare->add_flag("--at-one", pa.at_one, "print the value at q = 1");

  std::string board_path, count_w;
  int count_k = -1;
  bool count_q = false;
  auto* count = app.add_subcommand("count", "rook numbers of a board, or |[id,w]|");
  count->add_option("--board", board_path, "board file in #/. format, '-' for stdin");
  count->add_option("--k", count_k, "number of rooks");
  count->add_flag("--q", count_q, "print the q-rook number");
  count->add_option("--w", count_w, "permutation w; prints |[id,w]|");

  int qs_n = -1, qs_k = -1;
  bool qs_at_one = false;
  auto* qstirling = app.add_subcommand("qstirling", "q-Stirling number S_{n,k}(q)");
  qstirling->add_option("--n", qs_n)->required();
  qstirling->add_option("--k", qs_k)->required();
  qstirling->add_flag("--at-one", qs_at_one, "print the Stirling number");

  int pb_n = -1, pb_k = -1;
  auto* polyb = app.add_subcommand("polybernoulli", "poly-Bernoulli number B_n^{-k}");
  polyb->add_option("--n", pb_n)->required();
  polyb->add_option("--k", pb_k, "k >= 0; the upper index is -k")->required();

  detail::TableArgs ta;
  auto* table = app.add_subcommand("table", "emit a table");
  table->add_option("kind", ta.kind, "qstirling, polybernoulli or theorem8")
      ->required()
      ->check(CLI::IsMember({"qstirling", "polybernoulli", "theorem8"}));
  table->add_option("--n", ta.n, "single row (qstirling) or bound");
  table->add_option("--max-n", ta.max_n, "bound");
  table->add_option("--format", ta.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  std::string suite = "all";
  int max_n = 5;
  auto* verify_cmd = app.add_subcommand("verify", "run oracle cross-checks");
  verify_cmd->add_option("--suite", suite, "all, rook, intervals, typeB or stirling")
      ->check(CLI::IsMember({"all", "rook", "intervals", "typeB", "stirling"}));
  verify_cmd->add_option("--max-n", max_n, "size bound (clamped per suite)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (*hull) {
      const auto p = Permutation::parse(perm);
      out << (side == "right" ? right_hull(p) : left_hull(p)).to_string();
      return ok;
    }
    if (*check) {
      const auto p = Permutation::parse(perm);
      detail::ojson j;
      if (const auto m = find_forbidden(p)) {
        j["avoids"] = false;
        j["violating_pattern"] = m->pattern.to_string();
        j["positions"] = m->positions;
      } else {
        j["avoids"] = true;
        j["violating_pattern"] = nullptr;
        j["positions"] = nullptr;
      }
      out << j.dump() << '\n';
      return ok;
    }
    if (*poincare) return detail::run_poincare(pa, out);
    if (*count) {
      if (!count_w.empty()) {
        if (!board_path.empty()) throw UnsupportedArgument("count takes either --board or --w");
        const auto w = Permutation::parse(count_w);
        if (const auto k = detail::grassmannian_descent(w)) {
          out << (*k == 0 ? BigInt(1) : count_lower_interval_dp(CosetRepA(w, *k))).str() << '\n';
        } else if (avoids_forbidden(w)) {
          out << rook_number(right_hull(w), w.size()).str() << '\n';
        } else {
          detail::require_brute_size(w.size());
          std::size_t c = 0;
          for_each_in_interval(Permutation::identity(w.size()), w, [&](const auto&) { ++c; });
          out << c << '\n';
        }
        return ok;
      }
      if (board_path.empty()) throw UnsupportedArgument("count needs --board or --w");
      const Board b = detail::read_board(board_path, in);
      const int k = count_k >= 0 ? count_k : std::min(b.rows(), b.cols());
      if (count_q)
        out << detail::poly_json(q_rook_number(b, k)).dump() << '\n';
      else
        out << rook_number(b, k).str() << '\n';
      return ok;
    }
    if (*qstirling) {
      const auto s = q_stirling(qs_n, qs_k);
      if (qs_at_one)
        out << evaluate_at_one(s).str() << '\n';
      else
        out << detail::poly_json(s).dump() << '\n';
      return ok;
    }
    if (*polyb) {
      if (pb_k < 0) throw RangeError("--k must be >= 0");
      out << poly_bernoulli(pb_n, -pb_k).str() << '\n';
      return ok;
    }
    if (*table) return detail::run_table(ta, out);
    if (*verify_cmd) return detail::run_verify(suite, max_n, out, err);
  } catch (const PatternViolation& e) {
    err << "error: " << e.what() << '\n';
    return pattern_violation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace bruhat_rook::cli
