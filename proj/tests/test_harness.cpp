#include <doctest.h>

#include "qsep/bench.hpp"
#include "qsep/generator.hpp"
#include "qsep/instance.hpp"
#include "qsep/io.hpp"
#include "qsep/oracles.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qsep;

namespace {

std::size_t small_n(Problem p) {
  switch (p) {
    case Problem::point_on_3_lines: return 8;
    case Problem::three_points_on_line: return 8;
    case Problem::general_covering: return 6;
    case Problem::strips_cover_box: return 6;
    case Problem::triangles_cover_triangle: return 5;
    case Problem::point_covering: return 8;
    case Problem::visibility: return 6;
    case Problem::segment_separator: return 6;
    case Problem::three_sum: return 8;
  }
  return 8;
}

std::string replace_first(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

Line nv(long long a, long long b) {
  return Line::non_vertical(scalar_from_int(a), scalar_from_int(b));
}

SolveOptions charged_options() {
  SolveOptions opt;
  opt.epsilon = 0.1;
  opt.quantum.mode = ExecMode::charged;
  return opt;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("problem tokens round-trip") {
  for (Problem p : kAllProblems) {
    auto token = problem_token(p);
    auto back = problem_from_token(token);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK(!problem_from_token("no-such-problem").has_value());
}

TEST_CASE("serialize/parse round-trips exactly for every problem") {
  std::uint64_t seed = 77;
  for (Problem p : kAllProblems) {
    for (bool planted : {true, false}) {
      Instance inst = gen_instance(p, small_n(p), planted, seed++);
      std::string text = serialize_instance(inst);
      Instance back = parse_instance(text);
      CHECK(back == inst);
      // A second pass through text form is byte-stable.
      CHECK(serialize_instance(back) == text);
    }
  }
}

TEST_CASE("parser accepts comments, blank lines, and plain integers") {
  std::string text =
      "# produced by hand\n"
      "qsep 1 3sum n=3 seed=5 planted=0 verified=1\n"
      "\n"
      "value -4\n"
      "# middle comment\n"
      "value 1\n"
      "value 2\n";
  Instance inst = parse_instance(text);
  CHECK(inst.problem == Problem::three_sum);
  CHECK(inst.values == std::vector<long long>{-4, 1, 2});
  CHECK(inst.seed == 5);
  CHECK(!inst.planted);
  CHECK(inst.verified);
}

TEST_CASE("parser rejects malformed inputs") {
  Instance inst = gen_instance(Problem::point_on_3_lines, 4, true, 3);
  std::string good = serialize_instance(inst);
  REQUIRE_NOTHROW(parse_instance(good));

  CHECK_THROWS_AS(parse_instance(replace_first(good, "qsep 1", "nope 1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(replace_first(good, "qsep 1", "qsep 2")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(replace_first(good, "point-on-3-lines", "bogus")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(replace_first(good, "line n ", "line n x")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_instance(replace_first(good, "n=4", "n=5")),
                  std::invalid_argument);  // one record short
  CHECK_THROWS_AS(parse_instance(good + "line n 1/1 1/1\n"),
                  std::invalid_argument);  // trailing record
  CHECK_THROWS_AS(parse_instance(std::string("")), std::invalid_argument);
}

TEST_CASE("generated instances match their declared status") {
  std::uint64_t seed = 2024;
  for (Problem p : kAllProblems) {
    CAPTURE(problem_token(p));
    std::size_t n = small_n(p);
    for (bool planted : {true, false}) {
      Instance inst = gen_instance(p, n, planted, seed++);
      CHECK(inst.problem == p);
      CHECK(inst.size() == n);
      CHECK(inst.planted == planted);
      CHECK(inst.verified);
      OracleStatus status = oracle_instance(inst);
      REQUIRE(status != OracleStatus::refused);
      CHECK((status == OracleStatus::positive) == planted);
      if (!planted) CHECK(!inst.hint.has_value());
    }
  }
}

TEST_CASE("generator rejects sizes below the problem minimum") {
  for (Problem p : kAllProblems) {
    std::size_t min_n = problem_min_n(p);
    if (min_n == 0) continue;
    CHECK_THROWS_AS(gen_instance(p, min_n - 1, false, 1), std::invalid_argument);
    CHECK_NOTHROW(gen_instance(p, min_n, false, 1));
  }
}

TEST_CASE("solve_instance agrees with the reference checker on small instances") {
  std::uint64_t seed = 555;
  SolveOptions opt = charged_options();
  for (Problem p : kAllProblems) {
    CAPTURE(problem_token(p));
    for (bool planted : {true, false}) {
      Instance inst = gen_instance(p, small_n(p), planted, seed++);
      Rng rng(seed * 31 + 7);
      CostLedger ledger;
      SolveOutcome out = solve_instance(inst, opt, rng, ledger);
      CHECK(out.found == planted);
      CHECK((out.witness.index() == 0) == !out.found);
      std::string text = describe_outcome(inst, out);
      CHECK(!text.empty());
      if (!out.found) CHECK(text == "none");
    }
  }
}

TEST_CASE("pairwise-crossing scan finds gaps between two crossing strips") {
  // Two slanted strips crossing: their union is not the plane, and some
  // boundary crossing is uncovered.
  std::vector<CoverObject> objects = {
      Strip{nv(1, -1), nv(1, 1)},
      Strip{nv(-1, -1), nv(-1, 1)},
  };
  auto rep = oracle_general_covering(objects);
  REQUIRE(rep.status == OracleStatus::positive);
  REQUIRE(rep.witness.has_value());
  bool covered = false;
  for (const auto& obj : objects) {
    const Strip& s = std::get<Strip>(obj);
    // interior test: strictly between the boundaries
    if (line_side(s.b1, *rep.witness) * line_side(s.b2, *rep.witness) < 0) covered = true;
  }
  CHECK(!covered);
}

TEST_CASE("pairwise-crossing scan treats parallel-only families as negative") {
  std::vector<CoverObject> objects = {
      Strip{nv(2, 0), nv(2, 5)},
      Strip{nv(2, 10), nv(2, 15)},
      HalfPlane{nv(2, -8), 1},
  };
  auto rep = oracle_general_covering(objects);
  CHECK(rep.status == OracleStatus::negative);
  CHECK(!rep.witness.has_value());
}

TEST_CASE("pairwise-crossing scan refuses oversized families") {
  std::vector<CoverObject> objects;
  for (int i = 0; i < 50; ++i) {
    objects.push_back(HalfPlane{nv(i + 1, 0), 1});
  }
  auto rep = oracle_general_covering(objects, 48);
  CHECK(rep.status == OracleStatus::refused);
}

TEST_CASE("bench sweep produces one row per (size, trial) in order") {
  SolveOptions opt = charged_options();
  auto rows = run_bench(Problem::point_on_3_lines, {8, 16}, 2, true, opt, 99);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 8);
  CHECK(rows[1].n == 8);
  CHECK(rows[2].n == 16);
  CHECK(rows[3].n == 16);
  CHECK(rows[0].seed != rows[1].seed);
  for (const BenchRecord& r : rows) {
    CHECK(r.problem == Problem::point_on_3_lines);
    CHECK(r.answer);  // planted sweep: every answer is positive
    CHECK(r.total_cost() == r.quantum_queries + r.classical_steps);
    CHECK(r.epsilon == doctest::Approx(0.1));
    CHECK(r.mode == ExecMode::charged);
    CHECK(r.k >= 4);
    CHECK(r.alpha >= 1.0);
  }
}

TEST_CASE("csv output is deterministic except for the trailing wall column") {
  SolveOptions opt = charged_options();
  auto strip_wall = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      auto pos = line.rfind(',');
      REQUIRE(pos != std::string::npos);
      out += line.substr(0, pos);
      out += '\n';
    }
    return out;
  };
  auto a = bench_csv(run_bench(Problem::three_sum, {8, 12}, 2, false, opt, 7));
  auto b = bench_csv(run_bench(Problem::three_sum, {8, 12}, 2, false, opt, 7));
  CHECK(strip_wall(a) == strip_wall(b));
  std::istringstream in(a);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "problem,n,k,alpha,epsilon,mode,seed,answer,quantum_queries,classical_steps,depth,"
        "wall_seconds");
}

TEST_CASE("consecutive cost ratios divide medians of successive sizes") {
  auto row = [](std::size_t n, std::uint64_t cost) {
    BenchRecord r;
    r.n = n;
    r.classical_steps = cost;
    return r;
  };
  std::vector<BenchRecord> rows = {row(8, 10), row(8, 30), row(8, 20),
                                   row(16, 40), row(16, 60)};
  auto ratios = consecutive_cost_ratios(rows);
  REQUIRE(ratios.size() == 1);
  CHECK(ratios[0].n_lo == 8);
  CHECK(ratios[0].n_hi == 16);
  CHECK(ratios[0].ratio == doctest::Approx(50.0 / 20.0));
}

TEST_CASE("solver and reference checkers agree across generated instances") {
  SolveOptions opt = charged_options();
  EquivalenceReport rep = run_equivalence(Problem::point_on_3_lines, 3, 12, 10, opt, 13);
  CHECK(rep.trials == 10);
  CHECK(rep.compared + rep.refused == rep.trials);
  CHECK(rep.mismatches == 0);
  CHECK(rep.mismatch_seeds.empty());
  CHECK(rep.mismatch_rate() == 0.0);
}

} // TEST_SUITE
