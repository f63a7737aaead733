#include "oa/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "oa/canon.hpp"
#include "oa/construct.hpp"
#include "oa/enumerate.hpp"
#include "oa/error.hpp"
#include "oa/io.hpp"
#include "oa/jchar.hpp"
#include "oa/oracle.hpp"

namespace oa::cli {

namespace {

struct ParamFlags {
  std::optional<int> d;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> n;
  std::optional<int> m;

  void attach(CLI::App* cmd) {
    cmd->add_option("--d", d, "strength d");
    cmd->add_option("--lambda", lambda, "index lambda");
    cmd->add_option("--n", n, "run size n = lambda * 2^d");
    cmd->add_option("--m", m, "constraints m = d + 2");
  }

  ArrayParams resolve() const {
    if (d && lambda) {
      auto p = ArrayParams::make(*d, *lambda);
      if (n && *n != p.n) {
        throw ParameterError("n = lambda * 2^d violated: " + std::to_string(*lambda) +
                             " * 2^" + std::to_string(*d) + " = " + std::to_string(p.n) +
                             " != " + std::to_string(*n));
      }
      if (m && *m != p.m) {
        throw ParameterError("m = d + 2 violated: m=" + std::to_string(*m) +
                             ", d=" + std::to_string(*d));
      }
      return p;
    }
    if (n && m) {
      auto p = ArrayParams::from_runs(*n, *m);
      if (d && *d != p.d) {
        throw ParameterError("m = d + 2 violated: m=" + std::to_string(*m) +
                             ", d=" + std::to_string(*d));
      }
      if (lambda && *lambda != p.lambda) {
        throw ParameterError("n = lambda * 2^d violated for lambda=" + std::to_string(*lambda));
      }
      return p;
    }
    if (d && n) return ArrayParams::from_runs(*n, *d + 2);
    throw ParameterError("give either --d and --lambda, or --n and --m");
  }
};

// k = N_empty = (n + sum of slots) / 2^m; u_j = J_{t_j} / scale.
SolutionTuple tuple_from_jstar(const JStar& star, const ArrayParams& p) {
  const std::int64_t scale = std::int64_t{1} << (p.lambda_even() ? p.d + 1 : p.d);
  SolutionTuple t;
  std::int64_t total = p.n;
  for (auto e : star.entries) {
    t.u.push_back(e / scale);
    total += e;
  }
  t.k = total >> p.m;
  return t;
}

std::int64_t count_for(const ArrayParams& p, bool use_oracle) {
  if (use_oracle) return static_cast<std::int64_t>(oracle::oracle_jstars(p.d, p.lambda).size());
  return count(p.d, p.lambda);
}

int cmd_table(std::ostream& out, int d, const std::string& parity, std::int64_t max_n) {
  if (parity != "odd" && parity != "even") {
    throw ParameterError("--parity must be 'odd' or 'even'");
  }
  const auto first = ArrayParams::make(d, parity == "odd" ? 1 : 2);
  std::vector<std::int64_t> lambdas;
  for (std::int64_t lambda = first.lambda; (lambda << d) <= max_n; lambda += 2) {
    lambdas.push_back(lambda);
  }
  std::vector<std::int64_t> counts(lambdas.size());
  const auto total = static_cast<std::int64_t>(lambdas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < total; ++i) {
    counts[static_cast<std::size_t>(i)] = count(d, lambdas[static_cast<std::size_t>(i)]);
  }

  out << "# f(n) = number of nonisomorphic OA(n, " << d + 2 << ", 2, " << d << "), "
      << to_string(first.parity()) << ", n <= " << max_n << '\n';
  out << "# n f(n)\n";
  bool started = false;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    // Leading parameters with no array at all are left out.
    if (!started && counts[i] == 0) continue;
    started = true;
    out << (lambdas[i] << d) << ' ' << counts[i] << '\n';
  }
  return kExitOk;
}

int cmd_build(std::ostream& out, const ArrayParams& p, const std::string& path) {
  const auto stars = jstars(p.d, p.lambda);
  const auto designs = build_catalog(p.d, p.lambda);
  namespace fs = std::filesystem;

  if (!path.empty() && fs::is_directory(path)) {
    const int width = static_cast<int>(std::to_string(designs.size()).size());
    for (std::size_t i = 0; i < designs.size(); ++i) {
      std::ostringstream name;
      name << "oa_" << p.n << '_' << p.m << "_2_" << p.d << '_' << std::setw(width)
           << std::setfill('0') << i + 1 << ".txt";
      std::ofstream file(fs::path(path) / name.str());
      if (!file) throw ParseError(0, "cannot write '" + name.str() + "'");
      file << "# J* = " << io::format_entries(stars[i].entries) << '\n';
      io::write_array(file, designs[i], p.d);
    }
    out << designs.size() << " arrays written to " << path << '\n';
    return kExitOk;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty()) {
    file.open(path);
    if (!file) throw ParseError(0, "cannot write '" + path + "'");
    sink = &file;
  }
  for (std::size_t i = 0; i < designs.size(); ++i) {
    *sink << "# array " << i + 1 << " of " << designs.size()
          << ": J* = " << io::format_entries(stars[i].entries) << '\n';
    io::write_array(*sink, designs[i], p.d);
  }
  return kExitOk;
}

int cmd_verify(std::ostream& out, const io::ArrayFile& file) {
  const auto& design = file.design;
  const int d = file.d;
  const auto jfull = j_full(design);
  const int s = strength(jfull);
  const bool oa = verify_oa(design, d);
  bool failed = s < d || !oa;

  out << "runs " << design.runs() << " columns " << design.columns() << " declared-strength "
      << d << '\n';
  out << "strength " << s << '\n';
  out << "direct-count " << (oa ? "pass" : "fail") << '\n';

  const std::int64_t block = std::int64_t{1} << d;
  if (s >= d && design.columns() >= d + 2 && design.runs() % block == 0 && d >= 2) {
    const auto params = ArrayParams{d, design.runs() / block, d + 2, design.runs()};
    const auto report = check_parity(jfull, params);
    out << "parity-violations " << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
      out << "  t=" << v.subset << " expected " << v.expected << " got " << v.actual << '\n';
    }
    failed = failed || !report.ok();
  } else {
    out << "parity-violations skipped\n";
  }

  if (s >= d && d >= 1) {
    const auto bounds = check_pair_bound(jfull, d);
    out << "pair-bound-violations " << bounds.size() << '\n';
    for (const auto& b : bounds) {
      if (b.kind == BoundKind::kPairSum) {
        out << "  |J_" << b.first << "| + |J_" << b.second << "| > n\n";
      } else {
        out << "  |J_" << b.first << "| > n - 4 (defining word)\n";
      }
    }
    failed = failed || !bounds.empty();
  } else {
    out << "pair-bound-violations skipped\n";
  }
  out << (failed ? "FAIL" : "OK") << '\n';
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and check two-level orthogonal arrays OA(lambda 2^d, d+2, 2, d)",
               "oaenum"};
  app.require_subcommand(1);

  ParamFlags count_flags, sol_flags, build_flags;
  bool count_oracle = false, sol_oracle = false;
  int table_d = 2;
  std::string table_parity = "odd";
  std::int64_t table_max_n = 0;
  std::string build_out, canon_file, verify_file, iso_a, iso_b;

  auto* count_cmd = app.add_subcommand("count", "number of nonisomorphic arrays");
  count_flags.attach(count_cmd);
  count_cmd->add_flag("--oracle", count_oracle, "use the brute-force search (small cases)");

  auto* table_cmd = app.add_subcommand("table", "n / f(n) table for one parity of lambda");
  table_cmd->add_option("--d", table_d, "strength d")->required();
  table_cmd->add_option("--parity", table_parity, "parity of lambda: odd or even")->required();
  table_cmd->add_option("--max-n", table_max_n, "largest run size")->required();

  auto* sol_cmd = app.add_subcommand("solutions", "solution tuples u_1 .. u_{m+1} k");
  sol_flags.attach(sol_cmd);
  sol_cmd->add_flag("--oracle", sol_oracle, "use the brute-force search (small cases)");

  auto* build_cmd = app.add_subcommand("build", "write every nonisomorphic array");
  build_flags.attach(build_cmd);
  build_cmd->add_option("--out", build_out, "output file, or directory for one file per array");

  auto* canon_cmd = app.add_subcommand("canon", "print the J*-vector of an array file");
  canon_cmd->add_option("file", canon_file, "array file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "strength and J-characteristic diagnostics");
  verify_cmd->add_option("file", verify_file, "array file")->required();

  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two array files");
  iso_cmd->add_option("first", iso_a, "array file")->required();
  iso_cmd->add_option("second", iso_b, "array file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count_cmd) {
      const auto p = count_flags.resolve();
      out << count_for(p, count_oracle) << ' ' << to_string(p.parity()) << '\n';
      return kExitOk;
    }
    if (*table_cmd) return cmd_table(out, table_d, table_parity, table_max_n);
    if (*sol_cmd) {
      const auto p = sol_flags.resolve();
      if (sol_oracle) {
        for (const auto& star : oracle::oracle_jstars(p.d, p.lambda)) {
          io::write_solution(out, tuple_from_jstar(star, p));
        }
      } else {
        for (const auto& t : solutions(p.d, p.lambda)) io::write_solution(out, t);
      }
      return kExitOk;
    }
    if (*build_cmd) return cmd_build(out, build_flags.resolve(), build_out);
    if (*canon_cmd) {
      const auto file = io::read_array_file(canon_file);
      out << io::format_entries(canonicalize(short_j(file.design, file.d)).entries) << '\n';
      return kExitOk;
    }
    if (*verify_cmd) return cmd_verify(out, io::read_array_file(verify_file));
    if (*iso_cmd) {
      const auto a = io::read_array_file(iso_a);
      const auto b = io::read_array_file(iso_b);
      if (a.d != b.d) throw ShapeError("declared strengths differ");
      out << (isomorphic(a.design, b.design, a.d) ? "isomorphic" : "nonisomorphic") << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oa::cli
