#include <benchmark/benchmark.h>

#include "qsep/geometry.hpp"

#include <random>
#include <vector>

using namespace qsep;

namespace {

std::vector<Line> random_lines(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<long long> coeff(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000);
  std::vector<Line> out;
  out.reserve(n);
  while (out.size() < n) {
    Scalar a(coeff(eng), den(eng));
    Scalar b(coeff(eng), den(eng));
    out.push_back(Line::non_vertical(a, b));
  }
  return out;
}

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<long long> coord(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Point{Scalar(coord(eng), den(eng)), Scalar(coord(eng), den(eng))});
  return out;
}

}  // namespace

static void BM_LineSide(benchmark::State& state) {
  auto lines = random_lines(256, 17);
  auto pts = random_points(256, 23);
  std::size_t i = 0;
  for (auto _ : state) {
    const Line& l = lines[i & 255];
    const Point& p = pts[(i * 7 + 3) & 255];
    benchmark::DoNotOptimize(line_side(l, p));
    ++i;
  }
}
BENCHMARK(BM_LineSide);

static void BM_Orientation(benchmark::State& state) {
  auto pts = random_points(256, 29);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        orientation(pts[i & 255], pts[(i + 37) & 255], pts[(i + 101) & 255]));
    ++i;
  }
}
BENCHMARK(BM_Orientation);

static void BM_Intersect(benchmark::State& state) {
  auto lines = random_lines(256, 31);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(lines[i & 255], lines[(i + 13) & 255]));
    ++i;
  }
}
BENCHMARK(BM_Intersect);

BENCHMARK_MAIN();
