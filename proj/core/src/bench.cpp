#include "qsep/bench.hpp"

#include "qsep/generator.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

namespace qsep {
namespace {

// Distinct derivation streams so generator and solver randomness never
// collide even when (size, trial) pairs repeat across uses.
constexpr std::uint64_t kGenStream = 0x67656e;    // instance generation
constexpr std::uint64_t kSolveStream = 0x736f6c;  // solver randomness
constexpr std::uint64_t kSizeStream = 0x73697a;   // per-trial size draw

double median_cost(std::vector<std::uint64_t> costs) {
  std::sort(costs.begin(), costs.end());
  std::size_t m = costs.size() / 2;
  if (costs.size() % 2 == 1) return static_cast<double>(costs[m]);
  return (static_cast<double>(costs[m - 1]) + static_cast<double>(costs[m])) / 2.0;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

std::vector<BenchRecord> run_bench(Problem problem, const std::vector<std::size_t>& sizes,
                                   std::size_t trials, bool planted, const SolveOptions& opt,
                                   std::uint64_t master_seed) {
  std::vector<BenchRecord> rows;
  rows.reserve(sizes.size() * trials);
  for (std::size_t size : sizes) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      BenchRecord rec;
      rec.problem = problem;
      rec.n = size;
      rec.epsilon = opt.epsilon;
      rec.mode = opt.quantum.mode;
      rec.seed = derive_seed(master_seed, size, trial);
      if (size >= 2) {
        Params pr = choose_parameters(size, opt.epsilon, opt.params);
        rec.k = pr.k;
        rec.alpha = pr.alpha;
      }
      CostLedger ledger;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Instance inst =
            gen_instance(problem, size, planted, derive_seed(rec.seed, kGenStream, 0));
        Rng rng(derive_seed(rec.seed, kSolveStream, 0));
        SolveOutcome out = solve_instance(inst, opt, rng, ledger);
        rec.answer = out.found;
      } catch (const std::exception&) {
        rec.answer = false;  // recorded, never aborts the sweep
      }
      auto t1 = std::chrono::steady_clock::now();
      rec.quantum_queries = ledger.quantum_queries;
      rec.classical_steps = ledger.classical_steps;
      rec.depth = ledger.max_recursion_depth;
      rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
      rows.push_back(rec);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream os;
  os << "problem,n,k,alpha,epsilon,mode,seed,answer,quantum_queries,classical_steps,depth,"
        "wall_seconds\n";
  for (const BenchRecord& r : rows) {
    os << problem_token(r.problem) << ',' << r.n << ',' << r.k << ',' << format_double(r.alpha)
       << ',' << format_double(r.epsilon) << ','
       << (r.mode == ExecMode::charged ? "charged" : "sampling") << ',' << r.seed << ','
       << (r.answer ? 1 : 0) << ',' << r.quantum_queries << ',' << r.classical_steps << ','
       << r.depth << ',';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.wall_seconds);
    os << buf << '\n';
  }
  return os.str();
}

std::vector<CostRatio> consecutive_cost_ratios(const std::vector<BenchRecord>& rows) {
  std::map<std::size_t, std::vector<std::uint64_t>> by_size;
  for (const BenchRecord& r : rows) by_size[r.n].push_back(r.total_cost());
  std::vector<CostRatio> out;
  const std::pair<const std::size_t, std::vector<std::uint64_t>>* prev = nullptr;
  for (const auto& entry : by_size) {
    if (prev != nullptr) {
      double lo = median_cost(prev->second);
      double hi = median_cost(entry.second);
      out.push_back(CostRatio{prev->first, entry.first, lo == 0.0 ? 0.0 : hi / lo});
    }
    prev = &entry;
  }
  return out;
}

EquivalenceReport run_equivalence(Problem problem, std::size_t n_lo, std::size_t n_hi,
                                  std::size_t trials, const SolveOptions& opt,
                                  std::uint64_t master_seed) {
  EquivalenceReport rep;
  rep.trials = trials;
  std::size_t floor_n = problem_min_n(problem);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng pick(derive_seed(master_seed, kSizeStream, trial));
    std::size_t span = n_hi >= n_lo ? n_hi - n_lo + 1 : 1;
    std::size_t n = std::max(floor_n, n_lo + static_cast<std::size_t>(pick.below(span)));
    bool planted = trial % 2 == 0;
    std::uint64_t gen_seed = derive_seed(master_seed, kGenStream, trial);
    Instance inst = gen_instance(problem, n, planted, gen_seed);
    OracleStatus status = oracle_instance(inst);
    if (status == OracleStatus::refused) {
      ++rep.refused;
      continue;
    }
    Rng rng(derive_seed(master_seed, kSolveStream, trial));
    CostLedger ledger;
    SolveOutcome out = solve_instance(inst, opt, rng, ledger);
    ++rep.compared;
    if (out.found != (status == OracleStatus::positive)) {
      ++rep.mismatches;
      rep.mismatch_seeds.push_back(gen_seed);
    }
  }
  return rep;
}

} // namespace qsep
