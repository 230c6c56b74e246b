#include "pluq/tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pluq/decompositions.hpp"
#include "pluq/elimination.hpp"
#include "pluq/errors.hpp"
#include "pluq/matgen.hpp"
#include "pluq/tools/matrix_io.hpp"
#include "pluq/tools/table_check.hpp"

namespace pluq::tools {

double bench_cost(std::size_t m, std::size_t n, std::size_t r) {
  const double md = static_cast<double>(m), nd = static_cast<double>(n), rd = static_cast<double>(r);
  return 2.0 * md * nd * rd + 2.0 / 3.0 * rd * rd * rd - rd * rd * (md + nd);
}

namespace {

struct StrategyOptions {
  std::string search, row_perm, col_perm, algo;
  std::size_t threshold = 64;

  void attach(CLI::App* cmd) {
    cmd->add_option("--search", search, "Pivot search order")->check(CLI::IsMember({"row", "col", "lex", "revlex", "product"}));
    cmd->add_option("--row-perm", row_perm, "Row permutation strategy")->check(CLI::IsMember({"trans", "rot"}));
    cmd->add_option("--col-perm", col_perm, "Column permutation strategy")->check(CLI::IsMember({"trans", "rot"}));
    cmd->add_option("--algo", algo, "Elimination engine (default: iter if a search flag is given, else crout)")
        ->check(CLI::IsMember({"iter", "crout", "left", "right", "recursive"}));
    cmd->add_option("--threshold", threshold, "Base-case size of the recursive engine")->capture_default_str();
  }

  // The dedicated engines fix their search and permutations; flags that
  // contradict them are rejected rather than silently ignored.
  Strategy resolve() const {
    const bool flags = !search.empty() || !row_perm.empty() || !col_perm.empty();
    const std::string engine = algo.empty() ? (flags ? "iter" : "crout") : algo;
    Strategy s;
    if (engine == "iter") {
      s = Strategy::iterative(*parse_search_order(search.empty() ? "lex" : search),
                              *parse_perm_strategy(row_perm.empty() ? "rot" : row_perm),
                              *parse_perm_strategy(col_perm.empty() ? "rot" : col_perm));
      return s;
    }
    if (engine == "crout") s = Strategy::crout_lex();
    else if (engine == "left") s = Strategy::left_looking_product();
    else if (engine == "right") s = Strategy::right_looking_product();
    else s = Strategy::tile_recursive(threshold);
    auto clash = [](const std::string& given, std::string_view fixed) { return !given.empty() && given != fixed; };
    if (clash(search, to_string(s.search)) || clash(row_perm, to_string(s.row_perm)) ||
        clash(col_perm, to_string(s.col_perm)))
      throw InvalidArgument("--algo " + engine + " uses search " + std::string(to_string(s.search)) + " with " +
                            std::string(to_string(s.row_perm)) + "/" + std::string(to_string(s.col_perm)) +
                            " permutations");
    return s;
  }
};

std::string describe(const std::optional<RevealClaims>& c) {
  if (!c) return "unclassified";
  std::vector<std::string> parts;
  if (c->rank_profile_matrix) parts.emplace_back("rank profile matrix");
  if (c->row_profile) parts.emplace_back("row profile");
  if (c->col_profile) parts.emplace_back("col profile");
  if (c->row_monotone) parts.emplace_back("row monotone");
  if (c->col_monotone) parts.emplace_back("col monotone");
  if (parts.empty()) return "nothing";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += ", " + parts[i];
  return s;
}

std::string one_based(const RankProfile& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
  return s;
}

RankProfile sorted_prefix(const Permutation& p, std::size_t r) {
  RankProfile out(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::string pivot_list(const std::vector<Pivot>& pivots) {
  std::string s;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    s += (i ? " (" : "(") + std::to_string(pivots[i].row + 1) + "," + std::to_string(pivots[i].col + 1) + ")";
  return s;
}

DenseMatrix load(const std::string& path) { return parse_matrix(read_text(path)); }

int report_check(std::ostream& out, const char* what, bool ok) {
  out << what << ": " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_pluq(const std::string& in, const StrategyOptions& opts, const std::string& prefix, std::ostream& out) {
  const DenseMatrix a = load(in);
  const Strategy s = opts.resolve();
  const PluqFactors f = pluq(a, s);
  out << "strategy: " << s.name() << '\n'
      << "rank: " << f.rank << '\n'
      << "P: " << f.P.to_string() << '\n'
      << "Q: " << f.Q.to_string() << '\n'
      << "pivots: " << f.pivoting_matrix().to_string() << '\n'
      << "reveals: " << describe(s.claims()) << '\n'
      << "reductions: " << f.reductions << '\n';
  const int rc = report_check(out, "reconstruction", f.reconstruct() == a);
  if (rc == kSuccess && !prefix.empty()) {
    write_text(prefix + ".P.perm", write_permutation(f.P));
    write_text(prefix + ".L.mat", write_matrix(f.L));
    write_text(prefix + ".U.mat", write_matrix(f.U));
    write_text(prefix + ".Q.perm", write_permutation(f.Q));
  }
  return rc;
}

PluqFactors revealing_factors(const DenseMatrix& a, const StrategyOptions& opts) {
  const Strategy s = opts.resolve();
  if (!s.reveals_rank_profile_matrix())
    throw NotRevealingError("strategy " + s.name() + " does not reveal the rank profile matrix");
  return pluq(a, s);
}

int cmd_rpm(const std::string& in, const StrategyOptions& opts, std::ostream& out) {
  const DenseMatrix a = load(in);
  const PluqFactors f = revealing_factors(a, opts);
  out << f.pivoting_matrix().to_string() << '\n';
  return f.reconstruct() == a ? kSuccess : kVerificationFailure;
}

int cmd_profiles(const std::string& in, const StrategyOptions& opts, std::ostream& out) {
  const DenseMatrix a = load(in);
  const PluqFactors f = revealing_factors(a, opts);
  out << "rank: " << f.rank << '\n'
      << "row profile: " << one_based(sorted_prefix(f.P, f.rank)) << '\n'
      << "col profile: " << one_based(sorted_prefix(f.Q, f.rank)) << '\n'
      << "rank profile matrix: " << f.pivoting_matrix().to_string() << '\n';
  return f.reconstruct() == a ? kSuccess : kVerificationFailure;
}

int cmd_echelon(const std::string& in, const StrategyOptions& opts, const std::string& kind, std::size_t rows,
                std::size_t cols, std::ostream& out) {
  const DenseMatrix a = load(in);
  const PluqFactors f = revealing_factors(a, opts);
  EchelonForm e = kind == "row" ? row_echelon(f)
                  : (rows || cols) ? leading_echelon(f, rows ? rows : a.rows(), cols ? cols : a.cols())
                                   : column_echelon(f);
  out << write_matrix(e.C) << "leading entries: " << pivot_list(e.pivot_positions) << '\n';
  return report_check(out, "staircase", kind == "row" ? is_row_echelon(e.C) : is_column_echelon(e.C));
}

void dump(std::ostream& out, const char* name, const DenseMatrix& m) { out << name << ":\n" << write_matrix(m); }

int cmd_leu(const std::string& in, const StrategyOptions& opts, const std::string& prefix, std::ostream& out) {
  const DenseMatrix a = load(in);
  const LeuFactors d = leu(revealing_factors(a, opts));
  dump(out, "L", d.Lbar);
  out << "E: " << d.E.to_string() << '\n';
  dump(out, "U", d.Ubar);
  if (!prefix.empty()) {
    write_text(prefix + ".L.mat", write_matrix(d.Lbar));
    write_text(prefix + ".E.mat", write_matrix(d.E.expand(a.field())));
    write_text(prefix + ".U.mat", write_matrix(d.Ubar));
  }
  const bool ok = d.Lbar.is_lower_triangular() && d.Ubar.is_upper_triangular() &&
                  matmul(matmul(d.Lbar, d.E.expand(a.field())), d.Ubar) == a;
  return report_check(out, "check", ok);
}

int cmd_bruhat(const std::string& in, const std::string& prefix, std::ostream& out) {
  const DenseMatrix a = load(in);
  const BruhatFactors d = bruhat(a);
  dump(out, "V", d.V);
  out << "P: " << d.P.to_string() << '\n';
  dump(out, "U", d.U);
  if (!prefix.empty()) {
    write_text(prefix + ".V.mat", write_matrix(d.V));
    write_text(prefix + ".P.mat", write_matrix(d.P.expand(a.field())));
    write_text(prefix + ".U.mat", write_matrix(d.U));
  }
  const bool ok = d.V.is_upper_triangular() && d.U.is_upper_triangular() &&
                  matmul(matmul(d.V, d.P.expand(a.field())), d.U) == a;
  return report_check(out, "check", ok);
}

int cmd_verify_table(std::size_t trials, std::uint64_t seed, std::uint64_t p, std::size_t max_dim, std::ostream& out) {
  int rc = kSuccess;
  for (const TableRowResult& r : verify_table(trials, seed, p, max_dim)) {
    out << (r.failures ? "FAIL " : "PASS ") << r.label << ": " << r.trials - r.failures << "/" << r.trials << '\n';
    if (r.failures) {
      out << "  first failure, " << r.first_failure;
      rc = kVerificationFailure;
    }
  }
  return rc;
}

int cmd_gen(const GenSpec& spec, const std::string& path, std::ostream& out) {
  const std::string text = write_matrix(random_rpm_matrix(spec));
  if (path.empty()) out << text;
  else write_text(path, text);
  return kSuccess;
}

int cmd_bench(GenSpec spec, const StrategyOptions& opts, std::size_t reps, std::ostream& out) {
  const Strategy s = opts.resolve();
  const DenseMatrix a = random_rpm_matrix(spec);
  const double cost = bench_cost(spec.m, spec.n, spec.r);
  out << "m n r p algo rep seconds gflops reductions\n";
  int rc = kSuccess;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const PluqFactors f = pluq(a, s);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << spec.m << ' ' << spec.n << ' ' << spec.r << ' ' << spec.p << ' ' << s.name() << ' ' << rep + 1 << ' '
        << std::scientific << std::setprecision(6) << secs << ' ' << std::fixed << std::setprecision(4)
        << (secs > 0 ? cost / secs / 1e9 : 0.0) << ' ' << f.reductions << '\n';
    if (f.rank != spec.r) rc = kVerificationFailure;
  }
  out << "cost: " << std::fixed << std::setprecision(6) << cost << '\n';
  return rc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-profile-revealing PLUQ factorization over GF(p)", "pluq"};
  app.require_subcommand(1);

  std::string in, prefix, kind = "col", path;
  StrategyOptions opts;
  std::size_t rows = 0, cols = 0, trials = 200, max_dim = 12, reps = 3;
  GenSpec spec;
  spec.seed = 1;

  auto add_in = [&](CLI::App* c) { c->add_option("--in", in, "Matrix file, or - for standard input")->required(); };

  auto* c_pluq = app.add_subcommand("pluq", "Factor A = P L U Q and report the pivots");
  add_in(c_pluq);
  opts.attach(c_pluq);
  c_pluq->add_option("--out-prefix", prefix, "Write X.P.perm, X.L.mat, X.U.mat, X.Q.perm");

  auto* c_rpm = app.add_subcommand("rpm", "Print the rank profile matrix");
  add_in(c_rpm);
  opts.attach(c_rpm);

  auto* c_prof = app.add_subcommand("profiles", "Print the rank and the row and column rank profiles");
  add_in(c_prof);
  opts.attach(c_prof);

  auto* c_ech = app.add_subcommand("echelon", "Echelon form from a revealing factorization");
  add_in(c_ech);
  opts.attach(c_ech);
  c_ech->add_option("--kind", kind, "Column or row echelon form")->check(CLI::IsMember({"col", "row"}))->capture_default_str();
  c_ech->add_option("--rows", rows, "Leading row count (column form only)");
  c_ech->add_option("--cols", cols, "Leading column count (column form only)");

  auto* c_leu = app.add_subcommand("leu", "A = L E U with E the rank profile matrix");
  add_in(c_leu);
  opts.attach(c_leu);
  c_leu->add_option("--out-prefix", prefix, "Write X.L.mat, X.E.mat, X.U.mat");

  auto* c_bru = app.add_subcommand("bruhat", "A = V P U with V and U upper triangular");
  add_in(c_bru);
  c_bru->add_option("--out-prefix", prefix, "Write X.V.mat, X.P.mat, X.U.mat");

  std::uint64_t table_p = 7;
  auto* c_tab = app.add_subcommand("verify-table", "Check every strategy's claims on random matrices");
  c_tab->add_option("--trials", trials)->capture_default_str();
  c_tab->add_option("--seed", spec.seed)->capture_default_str();
  c_tab->add_option("--p", table_p)->capture_default_str();
  c_tab->add_option("--max-dim", max_dim)->capture_default_str();

  auto* c_gen = app.add_subcommand("gen", "Random matrix with a planted rank profile matrix");
  c_gen->add_option("--m", spec.m)->required();
  c_gen->add_option("--n", spec.n)->required();
  c_gen->add_option("--r", spec.r)->required();
  c_gen->add_option("--p", spec.p)->capture_default_str();
  c_gen->add_option("--seed", spec.seed)->capture_default_str();
  c_gen->add_option("--out", path, "Output file (default: standard output)");

  std::size_t bench_m = 0;
  auto* c_bench = app.add_subcommand("bench", "Time a factorization and report effective Gflops");
  c_bench->add_option("--n", spec.n)->required();
  c_bench->add_option("--m", bench_m, "Row count (default: n)");
  c_bench->add_option("--r", spec.r)->required();
  c_bench->add_option("--p", spec.p)->capture_default_str();
  c_bench->add_option("--seed", spec.seed)->capture_default_str();
  c_bench->add_option("--reps", reps)->capture_default_str();
  opts.attach(c_bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  try {
    if (c_pluq->parsed()) return cmd_pluq(in, opts, prefix, out);
    if (c_rpm->parsed()) return cmd_rpm(in, opts, out);
    if (c_prof->parsed()) return cmd_profiles(in, opts, out);
    if (c_ech->parsed()) return cmd_echelon(in, opts, kind, rows, cols, out);
    if (c_leu->parsed()) return cmd_leu(in, opts, prefix, out);
    if (c_bru->parsed()) return cmd_bruhat(in, prefix, out);
    if (c_tab->parsed()) return cmd_verify_table(trials, spec.seed, table_p, max_dim, out);
    if (c_gen->parsed()) return cmd_gen(spec, path, out);
    if (c_bench->parsed()) {
      spec.m = bench_m ? bench_m : spec.n;
      return cmd_bench(spec, opts, reps, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace pluq::tools
