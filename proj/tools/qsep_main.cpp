// qsep — command-line front end for the plane-separation solver library.
//
//   qsep solve <problem> --input FILE [--epsilon E] [--mode M] [--seed S]
//   qsep gen <problem> --n N (--planted|--unplanted) [--seed S] [--out FILE]
//   qsep verify <problem> [--n N] [--trials T] [--epsilon E] [--mode M] [--seed S]
//   qsep bench <problem> --sizes A,B,... [--trials T] [--epsilon E] [--mode M]
//              [--seed S] [--out CSV] [--unplanted]
//   qsep dump-arrangement --input FILE
//
// Exit codes: 0 success (solve: witness found; verify: agreement within
// epsilon), 1 clean negative (solve: no witness; verify: too many
// mismatches), 2 usage or runtime error.

#include <CLI11.hpp>

#include "qsep/arrangement.hpp"
#include "qsep/bench.hpp"
#include "qsep/generator.hpp"
#include "qsep/instance.hpp"
#include "qsep/io.hpp"

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

using namespace qsep;

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitError = 2;

Problem parse_problem(const std::string& token) {
  auto p = problem_from_token(token);
  if (!p) {
    throw CLI::ValidationError("problem", "unknown problem '" + token + "'");
  }
  return *p;
}

ExecMode parse_mode(const std::string& name) {
  if (name == "charged") return ExecMode::charged;
  if (name == "sampling") return ExecMode::sampling;
  throw CLI::ValidationError("--mode", "expected 'charged' or 'sampling'");
}

// Shared option bundle for the subcommands that run the solver.
struct SolveFlags {
  double epsilon = 0.1;
  std::string mode = "charged";
  std::uint64_t seed = 1;

  SolveOptions options() const {
    SolveOptions opt;
    opt.epsilon = epsilon;
    opt.quantum.mode = parse_mode(mode);
    return opt;
  }
};

void add_solve_flags(CLI::App& cmd, SolveFlags& flags) {
  cmd.add_option("--epsilon", flags.epsilon, "failure-probability budget")
      ->check(CLI::Range(1e-9, 0.999999))
      ->capture_default_str();
  cmd.add_option("--mode", flags.mode, "execution mode: charged or sampling")
      ->check(CLI::IsMember({"charged", "sampling"}))
      ->capture_default_str();
  cmd.add_option("--seed", flags.seed, "rng seed")->capture_default_str();
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string tok = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    if (tok.empty()) {
      throw CLI::ValidationError("--sizes", "empty entry in size list");
    }
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || v == 0) {
      throw CLI::ValidationError("--sizes", "bad size '" + tok + "'");
    }
    sizes.push_back(static_cast<std::size_t>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return sizes;
}

int cmd_solve(const std::string& problem_token_str, const std::string& input,
              const SolveFlags& flags) {
  Problem problem = parse_problem(problem_token_str);
  Instance inst = load_instance(input);
  if (inst.problem != problem) {
    std::cerr << "qsep: " << input << " holds a " << problem_token(inst.problem)
              << " instance, not " << problem_token(problem) << "\n";
    return kExitError;
  }

  SolveOptions opt = flags.options();
  Rng rng(flags.seed);
  CostLedger ledger;
  SolveOutcome out = solve_instance(inst, opt, rng, ledger);

  std::cout << "problem: " << problem_token(inst.problem) << "\n"
            << "n: " << inst.size() << "\n"
            << "mode: " << flags.mode << "\n"
            << "epsilon: " << flags.epsilon << "\n"
            << "answer: " << (out.found ? "found" : "none") << "\n"
            << "witness: " << describe_outcome(inst, out) << "\n"
            << "quantum_queries: " << ledger.quantum_queries << "\n"
            << "classical_steps: " << ledger.classical_steps << "\n"
            << "aa_invocations: " << ledger.aa_invocations << "\n"
            << "total_cost: " << ledger.total_cost() << "\n"
            << "max_depth: " << ledger.max_recursion_depth << "\n";
  return out.found ? kExitFound : kExitNone;
}

int cmd_gen(const std::string& problem_token_str, std::size_t n, bool planted,
            std::uint64_t seed, const std::string& out_path) {
  Problem problem = parse_problem(problem_token_str);
  Instance inst = gen_instance(problem, n, planted, seed);
  if (out_path.empty()) {
    std::cout << serialize_instance(inst);
  } else {
    save_instance(inst, out_path);
    std::cerr << "qsep: wrote " << problem_token(problem) << " n=" << inst.size()
              << (inst.planted ? " planted" : " unplanted")
              << (inst.verified ? " verified" : " unverified") << " to " << out_path << "\n";
  }
  return kExitFound;
}

int cmd_verify(const std::string& problem_token_str, std::size_t n_max, std::size_t n_min,
               std::size_t trials, const SolveFlags& flags) {
  Problem problem = parse_problem(problem_token_str);
  std::size_t lo = n_min == 0 ? problem_min_n(problem) : n_min;
  if (n_max < lo) {
    std::cerr << "qsep: --n (" << n_max << ") is below the smallest usable size (" << lo
              << ")\n";
    return kExitError;
  }

  EquivalenceReport rep =
      run_equivalence(problem, lo, n_max, trials, flags.options(), flags.seed);

  std::cout << "problem: " << problem_token(problem) << "\n"
            << "sizes: " << lo << ".." << n_max << "\n"
            << "trials: " << rep.trials << "\n"
            << "refused: " << rep.refused << "\n"
            << "compared: " << rep.compared << "\n"
            << "mismatches: " << rep.mismatches << "\n"
            << "mismatch_rate: " << rep.mismatch_rate() << "\n";
  for (std::uint64_t s : rep.mismatch_seeds) {
    std::cout << "mismatch_seed: " << s << "\n";
  }
  bool ok = rep.mismatch_rate() <= flags.epsilon;
  std::cout << "verdict: " << (ok ? "agreement" : "disagreement") << "\n";
  return ok ? kExitFound : kExitNone;
}

int cmd_bench(const std::string& problem_token_str, const std::string& sizes_csv,
              std::size_t trials, bool unplanted, const SolveFlags& flags,
              const std::string& out_path) {
  Problem problem = parse_problem(problem_token_str);
  std::vector<std::size_t> sizes = parse_sizes(sizes_csv);
  std::size_t min_n = problem_min_n(problem);
  for (std::size_t s : sizes) {
    if (s < min_n) {
      std::cerr << "qsep: size " << s << " is below " << problem_token(problem)
                << "'s minimum (" << min_n << ")\n";
      return kExitError;
    }
  }

  std::vector<BenchRecord> rows =
      run_bench(problem, sizes, trials, !unplanted, flags.options(), flags.seed);
  std::string csv = bench_csv(rows);

  // The ratio summary goes wherever the CSV is not.
  std::ostream* summary = &std::cout;
  if (out_path.empty()) {
    std::cout << csv;
    summary = &std::cerr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "qsep: cannot open " << out_path << " for writing\n";
      return kExitError;
    }
    out << csv;
    if (!out.flush()) {
      std::cerr << "qsep: short write to " << out_path << "\n";
      return kExitError;
    }
  }
  for (const CostRatio& r : consecutive_cost_ratios(rows)) {
    *summary << "cost_ratio n=" << r.n_lo << "->" << r.n_hi << ": " << r.ratio << "\n";
  }
  return kExitFound;
}

int cmd_dump_arrangement(const std::string& input) {
  Instance inst = load_instance(input);
  if (inst.problem != Problem::point_on_3_lines) {
    std::cerr << "qsep: dump-arrangement needs a point-on-3-lines instance, got "
              << problem_token(inst.problem) << "\n";
    return kExitError;
  }
  std::vector<Line> lines;
  std::unordered_set<Line, LineHash> seen;
  for (const Line& l : inst.lines) {
    if (seen.insert(l).second) lines.push_back(l);
  }
  Box box = compute_clip_box(lines, scalar_from_int(1));
  Arrangement arr = Arrangement::build(lines, box);
  arr.validate();
  std::cout << "lines: " << lines.size() << "\n"
            << "vertices: " << arr.vertex_count() << "\n"
            << "edges: " << arr.edge_count() << "\n"
            << "faces: " << arr.face_count() << "\n";
  arr.dump(std::cout);
  return kExitFound;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane-separation solver for concurrency, collinearity, and covering search"};
  app.require_subcommand(1);

  std::string problem_arg;
  std::string input_path;
  std::string out_path;
  std::string sizes_csv;
  std::size_t gen_n = 0;
  std::size_t verify_n = 24;
  std::size_t verify_n_min = 0;
  std::size_t trials = 50;
  bool planted = false;
  bool unplanted = false;
  SolveFlags flags;

  CLI::App* solve = app.add_subcommand("solve", "solve one instance from a file");
  solve->add_option("problem", problem_arg, "problem token, e.g. point-on-3-lines")->required();
  solve->add_option("--input", input_path, "instance file")->required()->check(CLI::ExistingFile);
  add_solve_flags(*solve, flags);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("problem", problem_arg, "problem token")->required();
  gen->add_option("--n", gen_n, "instance size")->required();
  CLI::Option* opt_planted = gen->add_flag("--planted", planted, "embed a positive witness");
  CLI::Option* opt_unplanted =
      gen->add_flag("--unplanted", unplanted, "build a negative instance");
  opt_planted->excludes(opt_unplanted);
  opt_unplanted->excludes(opt_planted);
  gen->add_option("--seed", flags.seed, "generator seed")->capture_default_str();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "compare solver against reference checkers");
  verify->add_option("problem", problem_arg, "problem token")->required();
  verify->add_option("--n", verify_n, "largest instance size")->capture_default_str();
  verify->add_option("--n-min", verify_n_min, "smallest instance size (default: problem minimum)");
  verify->add_option("--trials", trials, "number of generated instances")->capture_default_str();
  add_solve_flags(*verify, flags);

  CLI::App* bench = app.add_subcommand("bench", "measure query cost across sizes");
  bench->add_option("problem", problem_arg, "problem token")->required();
  bench->add_option("--sizes", sizes_csv, "comma-separated instance sizes")->required();
  bench->add_option("--trials", trials, "trials per size")->capture_default_str();
  bench->add_flag("--unplanted", unplanted, "sweep negative instances instead of planted ones");
  add_solve_flags(*bench, flags);
  bench->add_option("--out", out_path, "CSV file (default: stdout)");

  CLI::App* dump = app.add_subcommand("dump-arrangement",
                                      "print the full subdivision induced by an instance's lines");
  dump->add_option("--input", input_path, "point-on-3-lines instance file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(problem_arg, input_path, flags);
    if (gen->parsed()) {
      if (planted == unplanted) {
        std::cerr << "qsep: gen needs exactly one of --planted / --unplanted\n";
        return kExitError;
      }
      return cmd_gen(problem_arg, gen_n, planted, flags.seed, out_path);
    }
    if (verify->parsed()) return cmd_verify(problem_arg, verify_n, verify_n_min, trials, flags);
    if (bench->parsed())
      return cmd_bench(problem_arg, sizes_csv, trials, unplanted, flags, out_path);
    if (dump->parsed()) return cmd_dump_arrangement(input_path);
    std::cerr << "qsep: no subcommand\n";
    return kExitError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qsep: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "qsep: " << e.what() << "\n";
    return kExitError;
  }
}
