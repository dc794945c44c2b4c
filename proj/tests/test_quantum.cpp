#include <doctest.h>

#include "qsep/oracles.hpp"
#include "qsep/quantum.hpp"
#include "qsep/rng.hpp"

#include <algorithm>

using namespace qsep;

TEST_SUITE_BEGIN("quantum");

TEST_CASE("boost repetition counts") {
  CHECK(boost_reps(0.5) == 2);
  CHECK(boost_reps(0.1) == 3);
  CHECK(boost_reps(0.05) == 4);
}

TEST_CASE("search over an empty domain charges nothing") {
  QuantumConfig cfg;
  CostLedger l;
  auto r = grover_search(0, [](std::uint64_t) { return true; }, cfg, l);
  CHECK(!r.has_value());
  CHECK(l.quantum_queries == 0);
}

TEST_CASE("search finds the single marked index and charges ceil(sqrt(m))") {
  QuantumConfig cfg;
  CostLedger l;
  auto r = grover_search(100, [](std::uint64_t i) { return i == 42; }, cfg, l);
  REQUIRE(r.has_value());
  CHECK(*r == 42);
  CHECK(l.quantum_queries == 10);
}

TEST_CASE("unsuccessful search still pays the full charge") {
  QuantumConfig cfg;
  CostLedger l;
  auto r = grover_search(16, [](std::uint64_t) { return false; }, cfg, l);
  CHECK(!r.has_value());
  CHECK(l.quantum_queries == 4);
}

TEST_CASE("search charge scales with the configured constant") {
  QuantumConfig cfg;
  cfg.c_grover = 3.0;
  CostLedger l;
  (void)grover_search(50, [](std::uint64_t) { return false; }, cfg, l);
  // ceil(3 * sqrt(50)) = ceil(21.21...) = 22, via exact integer arithmetic.
  CHECK(l.quantum_queries == 22);
}

TEST_CASE("amplification, charged mode: one run, scaled books") {
  QuantumConfig cfg; // charged
  CostLedger l;
  int runs = 0;
  bool ok = amplitude_amplify(
      [&](CostLedger& child, std::uint64_t) {
        ++runs;
        child.charge_classical(7);
        return true;
      },
      1, 0.5, cfg, l);
  CHECK(ok);
  CHECK(runs == 1);
  // multiplier = ceil(C_aa * sqrt(1)) * boost_reps(0.5) = 2 * 2 = 4
  CHECK(l.aa_invocations == 4);
  CHECK(l.classical_steps == 4 * 7);
}

TEST_CASE("amplification, charged mode: domain-sized multiplier") {
  QuantumConfig cfg;
  CostLedger l;
  (void)amplitude_amplify([](CostLedger&, std::uint64_t) { return false; }, 49, 0.1, cfg, l);
  // ceil(2 * sqrt(49)) * boost_reps(0.1) = 14 * 3 = 42
  CHECK(l.aa_invocations == 42);
}

TEST_CASE("amplification, sampling mode: returns on first verified success") {
  QuantumConfig cfg;
  cfg.mode = ExecMode::sampling;
  CostLedger l;
  int runs = 0;
  bool ok = amplitude_amplify(
      [&](CostLedger&, std::uint64_t) {
        ++runs;
        return true;
      },
      1, 0.5, cfg, l);
  CHECK(ok);
  CHECK(runs == 1);
  CHECK(l.aa_invocations == 1);
}

TEST_CASE("amplification, sampling mode: hopeless subroutine exhausts the budget") {
  QuantumConfig cfg;
  cfg.mode = ExecMode::sampling;
  CostLedger l;
  int runs = 0;
  bool ok = amplitude_amplify(
      [&](CostLedger&, std::uint64_t) {
        ++runs;
        return false;
      },
      5, 0.1, cfg, l);
  CHECK(!ok);
  // budget = ceil(ln(20) * 5) = ceil(14.97...) = 15
  CHECK(runs == 15);
  CHECK(l.aa_invocations == 15);
}

TEST_CASE("triple summing to zero is found with exact query charge") {
  QuantumConfig cfg;
  CostLedger l;
  auto w = solve_3sum({1, 2, -3}, cfg, l);
  REQUIRE(w.has_value());
  CHECK(w->values[0] + w->values[1] + w->values[2] == 0);
  CHECK(w->indices[0] != w->indices[1]);
  CHECK(w->indices[1] != w->indices[2]);
  CHECK(w->indices[0] != w->indices[2]);
  CHECK(l.quantum_queries == 3); // ceil(1 * sqrt(9))
}

TEST_CASE("all-positive input has no zero triple") {
  QuantumConfig cfg;
  CostLedger l;
  CHECK(!solve_3sum({1, 2, 3}, cfg, l).has_value());
  CHECK(l.quantum_queries == 3);
}

TEST_CASE("repeated values may share a value but not a position") {
  QuantumConfig cfg;
  CostLedger l;
  auto w = solve_3sum({0, 0, 0}, cfg, l);
  REQUIRE(w.has_value());
  CHECK(w->values == std::array<long long, 3>{0, 0, 0});

  CostLedger l2;
  // 0 appears twice but -0-0=0 needs a third position; {0, 0} alone is negative.
  CHECK(!solve_3sum({0, 0}, cfg, l2).has_value());
}

TEST_CASE("query charge is exactly ceil(C_g * n) across sizes") {
  QuantumConfig cfg;
  for (std::uint64_t n : {16ULL, 100ULL, 1024ULL}) {
    std::vector<long long> s;
    Rng r(derive_seed(5, 0, n));
    for (std::uint64_t i = 0; i < n; ++i) s.push_back(r.int_in(1, 1000) * 4 + 1);
    CostLedger l;
    (void)solve_3sum(s, cfg, l);
    CHECK(l.quantum_queries == n);
  }
}

TEST_CASE("random instances agree with the exhaustive check") {
  QuantumConfig cfg;
  for (int trial = 0; trial < 40; ++trial) {
    Rng r(derive_seed(17, 1, static_cast<std::uint64_t>(trial)));
    std::vector<long long> s;
    const bool plant = (trial % 2) == 0;
    for (int i = 0; i < 20; ++i) s.push_back(r.int_in(-40, 40));
    if (plant) {
      long long a = r.int_in(-30, 30), b = r.int_in(-30, 30);
      s.push_back(a);
      s.push_back(b);
      s.push_back(-(a + b));
    }
    std::shuffle(s.begin(), s.end(), r.engine());

    CostLedger l;
    auto mine = solve_3sum(s, cfg, l);
    auto ref = oracle_3sum(s);
    REQUIRE(ref.status != OracleStatus::refused);
    CHECK(mine.has_value() == (ref.status == OracleStatus::positive));
    if (mine) {
      CHECK(mine->values[0] + mine->values[1] + mine->values[2] == 0);
      CHECK(s[mine->indices[0]] == mine->values[0]);
      CHECK(s[mine->indices[1]] == mine->values[1]);
      CHECK(s[mine->indices[2]] == mine->values[2]);
    }
  }
}

TEST_SUITE_END();
