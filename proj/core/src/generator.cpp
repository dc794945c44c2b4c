#include "qsep/generator.hpp"

#include "qsep/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace qsep {
namespace {

constexpr long long kSlopeRange = 1000000;  // noise coefficient budget
constexpr int kGenRetries = 10;             // status realization attempts

Line random_noise_line(Rng& rng) {
  long long a = rng.int_in(-kSlopeRange, kSlopeRange);
  long long b = rng.int_in(-kSlopeRange, kSlopeRange);
  return Line::non_vertical(scalar_from_int(a), scalar_from_int(b));
}

} // namespace

PlantedTriple gen_planted_point_on_3_lines(std::size_t n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("planted instance needs n >= 3");

  Scalar wx = make_scalar(rng.int_in(-8000, 8000), rng.int_in(1, 8));
  Scalar wy = make_scalar(rng.int_in(-8000, 8000), rng.int_in(1, 8));
  Point w{wx, wy};

  std::vector<Line> lines;
  std::set<long long> slopes;
  while (lines.size() < 3) {
    long long a = rng.int_in(-10000, 10000);
    if (!slopes.insert(a).second) continue;
    lines.push_back(Line::non_vertical(scalar_from_int(a), wy - scalar_from_int(a) * wx));
  }

  std::set<std::pair<long long, long long>> noise_used;
  while (lines.size() < n) {
    Line l = random_noise_line(rng);
    long long a = static_cast<long long>(num(l.a));
    long long b = static_cast<long long>(num(l.b));
    if (!noise_used.insert({a, b}).second) continue;
    if (point_on_line(l, w)) continue;
    bool dup = false;
    for (int i = 0; i < 3; ++i) dup = dup || l == lines[static_cast<std::size_t>(i)];
    if (dup) continue;
    lines.push_back(l);
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng.engine());

  PlantedTriple out;
  out.witness = w;
  out.lines.resize(n);
  std::size_t hit = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    out.lines[pos] = lines[order[pos]];
    if (order[pos] < 3) out.indices[hit++] = pos;
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

std::vector<Line> gen_unplanted_lines(std::size_t n, Rng& rng, std::size_t verify_cap,
                                      int retries) {
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<Line> lines;
    std::set<std::pair<long long, long long>> used;
    while (lines.size() < n) {
      Line l = random_noise_line(rng);
      long long a = static_cast<long long>(num(l.a));
      long long b = static_cast<long long>(num(l.b));
      if (!used.insert({a, b}).second) continue;
      lines.push_back(l);
    }
    if (n > verify_cap) return lines;
    OracleTripleReport rep = oracle_point_on_3_lines(lines, verify_cap);
    if (rep.status == OracleStatus::negative) return lines;
  }
  throw std::runtime_error("could not generate a concurrence-free instance");
}

namespace {

[[noreturn]] void gen_exhausted(Problem p, bool planted) {
  throw std::runtime_error(std::string("could not generate a ") +
                           (planted ? "positive " : "negative ") +
                           std::string(problem_token(p)) + " instance within the retry budget");
}

// Random rational in [-r, r] with denominator in [1, d].
Scalar rat(Rng& rng, long long r, long long d) {
  return make_scalar(rng.int_in(-r, r), rng.int_in(1, d));
}

Scalar positive_rat(Rng& rng, long long num_hi, long long den_hi) {
  return make_scalar(rng.int_in(1, num_hi), rng.int_in(1, den_hi));
}

// Small-coefficient line; roughly one in five is vertical when allowed.
Line random_small_line(Rng& rng, bool allow_vertical) {
  if (allow_vertical && rng.below(5) == 0) return Line::vertical_at(rat(rng, 30, 2));
  return Line::non_vertical(rat(rng, 5, 3), rat(rng, 40, 2));
}

Strip random_strip(Rng& rng) {
  Scalar w = positive_rat(rng, 12, 2);
  if (rng.below(4) == 0) {
    Scalar x1 = rat(rng, 40, 2);
    return Strip{Line::vertical_at(x1), Line::vertical_at(x1 + w)};
  }
  Scalar a = rat(rng, 5, 3);
  Scalar b = rat(rng, 40, 2);
  return Strip{Line::non_vertical(a, b), Line::non_vertical(a, b + w)};
}

Angle random_angle(Rng& rng) {
  for (;;) {
    Line l1 = random_small_line(rng, true);
    Line l2 = Line::non_vertical(rat(rng, 5, 3), rat(rng, 40, 2));
    if (lines_parallel(l1, l2)) continue;
    return Angle{l1, l2, rng.below(2) ? 1 : -1, rng.below(2) ? 1 : -1};
  }
}

Triangle random_triangle(Rng& rng, long long r) {
  for (;;) {
    Point a{rat(rng, r, 2), rat(rng, r, 2)};
    Point b{rat(rng, r, 2), rat(rng, r, 2)};
    Point c{rat(rng, r, 2), rat(rng, r, 2)};
    if (!collinear(a, b, c)) return Triangle{{a, b, c}};
  }
}

Segment vertical_segment(const Scalar& x, const Scalar& lo, const Scalar& hi) {
  return Segment{Point{x, lo}, Point{x, hi}};
}

void gen_three_points(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 150;  // reference-checker budget
  if (planted) {
    Scalar a = scalar_from_int(rng.int_in(-15, 15));
    Scalar b = scalar_from_int(rng.int_in(-40, 40));
    std::unordered_set<Point, PointHash> used;
    std::vector<Point> pts;
    while (pts.size() < 3) {
      Scalar x = rat(rng, 60, 4);
      Point p{x, a * x + b};
      if (used.insert(p).second) pts.push_back(p);
    }
    while (pts.size() < n) {
      Point p{scalar_from_int(rng.int_in(-1000000, 1000000)),
              scalar_from_int(rng.int_in(-1000000, 1000000))};
      if (p.y == a * p.x + b) continue;  // keep noise off the planted line
      if (used.insert(p).second) pts.push_back(p);
    }
    std::shuffle(pts.begin(), pts.end(), rng.engine());
    inst.points = std::move(pts);
    inst.verified = true;
    inst.hint = Point{a, -b};  // the planted line's dual, where its points' duals meet
    return;
  }
  for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
    std::unordered_set<Point, PointHash> used;
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p{scalar_from_int(rng.int_in(-1000000, 1000000)),
              scalar_from_int(rng.int_in(-1000000, 1000000))};
      if (used.insert(p).second) pts.push_back(p);
    }
    if (n > kCap) {
      inst.points = std::move(pts);
      inst.verified = false;
      return;
    }
    if (oracle_3_points_on_line(pts, kCap).status == OracleStatus::negative) {
      inst.points = std::move(pts);
      inst.verified = true;
      return;
    }
  }
  gen_exhausted(Problem::three_points_on_line, planted);
}

void gen_general_covering(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 48;
  if (planted) {
    for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
      std::vector<CoverObject> objs;
      // An angle's apex is always a candidate crossing, so one angle keeps
      // even n=1 instances satisfiable; random extras rarely bury it.
      objs.emplace_back(random_angle(rng));
      while (objs.size() < n) {
        if (rng.below(3) == 0) {
          objs.emplace_back(random_angle(rng));
        } else {
          objs.emplace_back(random_strip(rng));
        }
      }
      std::shuffle(objs.begin(), objs.end(), rng.engine());
      if (n > kCap) {
        inst.objects = std::move(objs);
        inst.verified = false;
        return;
      }
      OraclePointReport rep = oracle_general_covering(objs, kCap);
      if (rep.status == OracleStatus::positive) {
        inst.objects = std::move(objs);
        inst.verified = true;
        inst.hint = rep.witness;
        return;
      }
    }
    gen_exhausted(Problem::general_covering, planted);
  }
  // Negative: one common direction for every boundary line. Parallel
  // families have no boundary crossings, and crossings are the only
  // candidate witnesses, so this is negative by construction. (Any family
  // with two crossing boundaries exposes crossings ON those boundaries,
  // which a finite strip/angle family cannot bury: covering them needs new
  // objects whose own outermost boundaries repeat the problem.)
  bool vertical = rng.below(4) == 0;
  Scalar a = vertical ? Scalar{} : rat(rng, 5, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar b = rat(rng, 40, 2);
    Scalar w = positive_rat(rng, 10, 2);
    if (vertical) {
      inst.objects.emplace_back(Strip{Line::vertical_at(b), Line::vertical_at(b + w)});
    } else {
      inst.objects.emplace_back(Strip{Line::non_vertical(a, b), Line::non_vertical(a, b + w)});
    }
  }
  inst.verified = true;
}

Box random_box(Rng& rng) {
  long long x0 = rng.int_in(-20, 10);
  long long y0 = rng.int_in(-20, 10);
  return Box{scalar_from_int(x0), scalar_from_int(x0 + rng.int_in(4, 25)),
             scalar_from_int(y0), scalar_from_int(y0 + rng.int_in(4, 25))};
}

void gen_strips_cover_box(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 48;
  inst.box = random_box(rng);
  if (planted) {
    for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
      std::vector<Strip> strips;
      for (std::size_t i = 0; i < n; ++i) strips.push_back(random_strip(rng));
      if (n > kCap) {
        inst.strips = std::move(strips);
        inst.verified = false;
        return;
      }
      OraclePointReport rep = oracle_box_uncovered(strips, inst.box, kCap);
      if (rep.status == OracleStatus::positive) {
        inst.strips = std::move(strips);
        inst.verified = true;
        inst.hint = rep.witness;
        return;
      }
    }
    gen_exhausted(Problem::strips_cover_box, planted);
  }
  // Negative: a chain of strips of one direction whose OPEN intercept
  // intervals overlap strictly and run past both extremes of the box's
  // intercept range, so every box point is strictly inside some strip.
  bool vertical = rng.below(4) == 0;
  Scalar a;
  Scalar lo, hi;
  if (vertical) {
    lo = inst.box.xmin;
    hi = inst.box.xmax;
  } else {
    a = rat(rng, 4, 2);
    Scalar c1 = inst.box.ymin - a * inst.box.xmin;
    Scalar c2 = inst.box.ymin - a * inst.box.xmax;
    Scalar c3 = inst.box.ymax - a * inst.box.xmin;
    Scalar c4 = inst.box.ymax - a * inst.box.xmax;
    lo = std::min(std::min(c1, c2), std::min(c3, c4));
    hi = std::max(std::max(c1, c2), std::max(c3, c4));
  }
  std::size_t chain = n <= 3 ? n : n - rng.below(n / 3 + 1);
  Scalar step = (hi - lo) / scalar_from_int(static_cast<long long>(chain));
  Scalar margin = step / 4 + make_scalar(1, 4);
  std::vector<Strip> strips;
  for (std::size_t i = 0; i < chain; ++i) {
    Scalar jl = margin * scalar_from_int(rng.int_in(-8, 8)) / 16;
    Scalar jr = margin * scalar_from_int(rng.int_in(-8, 8)) / 16;
    Scalar b = lo + step * scalar_from_int(static_cast<long long>(i)) - margin + jl;
    Scalar t = lo + step * scalar_from_int(static_cast<long long>(i + 1)) + margin + jr;
    if (vertical) {
      strips.push_back(Strip{Line::vertical_at(b), Line::vertical_at(t)});
    } else {
      strips.push_back(Strip{Line::non_vertical(a, b), Line::non_vertical(a, t)});
    }
  }
  while (strips.size() < n) strips.push_back(random_strip(rng));
  std::shuffle(strips.begin(), strips.end(), rng.engine());
  inst.strips = std::move(strips);
  inst.verified = true;
}

void gen_triangles_cover_triangle(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 48;
  inst.target = random_triangle(rng, 15);
  if (planted) {
    for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
      std::vector<Triangle> cover;
      for (std::size_t i = 0; i < n; ++i) cover.push_back(random_triangle(rng, 25));
      if (n > kCap) {
        inst.triangles = std::move(cover);
        inst.verified = false;
        return;
      }
      OraclePointReport rep = oracle_triangle_uncovered(cover, inst.target, kCap);
      if (rep.status == OracleStatus::positive) {
        inst.triangles = std::move(cover);
        inst.verified = true;
        inst.hint = rep.witness;
        return;
      }
    }
    gen_exhausted(Problem::triangles_cover_triangle, planted);
  }
  // Negative: one triangle strictly containing the target (its open
  // interior is convex, so holding all three target vertices strictly
  // inside holds the whole closed target), plus noise.
  Scalar bx0 = inst.target.v[0].x, bx1 = bx0, by0 = inst.target.v[0].y, by1 = by0;
  for (const Point& v : inst.target.v) {
    bx0 = std::min(bx0, v.x);
    bx1 = std::max(bx1, v.x);
    by0 = std::min(by0, v.y);
    by1 = std::max(by1, v.y);
  }
  Scalar w = bx1 - bx0, h = by1 - by0;
  Triangle container{{Point{bx0 - w - 2, by0 - 1}, Point{bx1 + w + 2, by0 - 1},
                      Point{(bx0 + bx1) / 2, by1 + h * 2 + 2}}};
  for (const Point& v : inst.target.v) {
    if (classify_point(v, container) != Region3::interior) {
      throw std::logic_error("covering container failed to contain the target");
    }
  }
  inst.triangles.push_back(container);
  while (inst.triangles.size() < n) inst.triangles.push_back(random_triangle(rng, 25));
  std::shuffle(inst.triangles.begin(), inst.triangles.end(), rng.engine());
  inst.verified = true;
}

void gen_point_covering(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 48;
  auto random_halfplane = [&rng] {
    return HalfPlane{random_small_line(rng, true), rng.below(2) ? 1 : -1};
  };
  if (planted) {
    std::uint64_t t = 1 + rng.below(n);
    Point w{rat(rng, 30, 4), rat(rng, 30, 4)};
    for (std::uint64_t i = 0; i < t; ++i) {
      Line l = random_small_line(rng, true);
      while (point_on_line(l, w)) l = random_small_line(rng, true);
      inst.halfplanes.push_back(HalfPlane{l, line_side(l, w)});
    }
    while (inst.halfplanes.size() < n) inst.halfplanes.push_back(random_halfplane());
    std::shuffle(inst.halfplanes.begin(), inst.halfplanes.end(), rng.engine());
    inst.threshold = t;  // the construction point lies strictly in t half-planes
    inst.verified = true;
    inst.hint = w;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) inst.halfplanes.push_back(random_halfplane());
  if (n > kCap) {
    inst.threshold = n + 1;  // depth can never exceed the family size
    inst.verified = true;
    return;
  }
  // One past the deepest reachable count, found by bisection.
  std::uint64_t lo = 1, hi = n, deepest = 0;
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (oracle_depth_point(inst.halfplanes, mid, kCap).status == OracleStatus::positive) {
      deepest = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  inst.threshold = deepest + 1;
  inst.verified = true;
}

void gen_visibility(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  Scalar X = scalar_from_int(rng.int_in(5, 25));
  if (planted) {
    // Every obstacle keeps a clear margin around the corridor height y0, so
    // the horizontal line there is a sight line by construction.
    Scalar y0 = rat(rng, 20, 3);
    inst.s1 = vertical_segment(Scalar{}, y0 - scalar_from_int(rng.int_in(1, 10)),
                               y0 + scalar_from_int(rng.int_in(1, 10)));
    inst.s2 = vertical_segment(X, y0 - scalar_from_int(rng.int_in(1, 10)),
                               y0 + scalar_from_int(rng.int_in(1, 10)));
    for (std::size_t i = 0; i < n; ++i) {
      Scalar ox = X * scalar_from_int(rng.int_in(0, 32)) / 32;
      long long d = rng.int_in(2, 30);
      long long u = rng.int_in(1, d - 1);
      Scalar c = y0 + scalar_from_int(rng.below(2) ? d : -d);
      inst.segments.push_back(
          vertical_segment(ox, c - scalar_from_int(u), c + scalar_from_int(u)));
    }
    inst.verified = true;
    inst.hint = Point{Scalar{}, -y0};  // dual of the corridor line y = y0
    return;
  }
  // Negative: a wall strictly between the terminals spanning past every
  // height a line touching both terminals can reach there.
  long long l1 = rng.int_in(-20, 5), h1 = l1 + rng.int_in(2, 15);
  long long l2 = rng.int_in(-20, 5), h2 = l2 + rng.int_in(2, 15);
  inst.s1 = vertical_segment(Scalar{}, scalar_from_int(l1), scalar_from_int(h1));
  inst.s2 = vertical_segment(X, scalar_from_int(l2), scalar_from_int(h2));
  long long r = std::max(std::max(std::abs(l1), std::abs(h1)),
                         std::max(std::abs(l2), std::abs(h2)));
  Scalar wx = X * scalar_from_int(rng.int_in(1, 31)) / 32;
  inst.segments.push_back(
      vertical_segment(wx, scalar_from_int(-(r + 1)), scalar_from_int(r + 1)));
  while (inst.segments.size() < n) {
    Scalar ox = X * scalar_from_int(rng.int_in(0, 32)) / 32;
    long long lo = rng.int_in(-25, 25);
    inst.segments.push_back(vertical_segment(ox, scalar_from_int(lo),
                                             scalar_from_int(lo + rng.int_in(1, 10))));
  }
  std::shuffle(inst.segments.begin(), inst.segments.end(), rng.engine());
  inst.verified = true;
}

void gen_segment_separator(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 60;
  auto random_vseg = [&rng](std::optional<long long> abscissa) {
    long long x = abscissa ? *abscissa : rng.int_in(0, 30);
    long long lo = rng.int_in(-30, 30);
    return vertical_segment(scalar_from_int(x), scalar_from_int(lo),
                            scalar_from_int(lo + rng.int_in(1, 12)));
  };
  if (planted) {
    for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
      std::vector<Segment> segs;
      segs.push_back(random_vseg(std::nullopt));
      // Two distinct abscissas make the family separable (a steep line can
      // always peel off the leftmost group).
      Segment second = random_vseg(std::nullopt);
      while (second.p.x == segs[0].p.x) second = random_vseg(std::nullopt);
      segs.push_back(second);
      while (segs.size() < n) segs.push_back(random_vseg(std::nullopt));
      std::shuffle(segs.begin(), segs.end(), rng.engine());
      if (n > kCap) {
        inst.segments = std::move(segs);
        inst.verified = false;
        return;
      }
      OracleLineReport rep = oracle_separator(segs, kCap);
      if (rep.status == OracleStatus::positive) {
        inst.segments = std::move(segs);
        inst.verified = true;
        if (rep.witness && !rep.witness->vertical) {
          inst.hint = Point{rep.witness->a, -rep.witness->b};  // separator's dual
        }
        return;
      }
    }
    gen_exhausted(Problem::segment_separator, planted);
  }
  // Negative: one shared abscissa. Every candidate line through endpoints
  // of two different segments is then vertical and contains every segment,
  // so no valid separator exists.
  long long c = rng.int_in(-10, 10);
  for (std::size_t i = 0; i < n; ++i) inst.segments.push_back(random_vseg(c));
  inst.verified = true;
}

void gen_three_sum(Instance& inst, std::size_t n, bool planted, Rng& rng) {
  constexpr std::size_t kCap = 150;
  if (planted) {
    long long v = 1000 * static_cast<long long>(n);
    for (std::size_t i = 3; i < n; ++i) inst.values.push_back(rng.int_in(-v, v));
    long long a = rng.int_in(-v / 2, v / 2);
    long long b = rng.int_in(-v / 2, v / 2);
    inst.values.push_back(a);
    inst.values.push_back(b);
    inst.values.push_back(-(a + b));
    std::shuffle(inst.values.begin(), inst.values.end(), rng.engine());
    inst.verified = true;
    return;
  }
  long long nn = static_cast<long long>(n);
  long long v = std::max<long long>(1000, nn * nn * nn);
  for (int attempt = 0; attempt <= kGenRetries; ++attempt) {
    std::vector<long long> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(rng.int_in(-v, v));
    if (n > kCap) {
      inst.values = std::move(values);
      inst.verified = false;
      return;
    }
    if (oracle_3sum(values, kCap).status == OracleStatus::negative) {
      inst.values = std::move(values);
      inst.verified = true;
      return;
    }
  }
  gen_exhausted(Problem::three_sum, planted);
}

} // namespace

Instance gen_instance(Problem problem, std::size_t n, bool planted, std::uint64_t seed) {
  if (n < problem_min_n(problem)) {
    throw std::invalid_argument(std::string(problem_token(problem)) + " needs n >= " +
                                std::to_string(problem_min_n(problem)));
  }
  Instance inst;
  inst.problem = problem;
  inst.seed = seed;
  inst.planted = planted;
  Rng rng(seed);
  switch (problem) {
    case Problem::point_on_3_lines:
      if (planted) {
        PlantedTriple g = gen_planted_point_on_3_lines(n, rng);
        inst.lines = std::move(g.lines);
        inst.hint = g.witness;
        inst.verified = true;
      } else {
        inst.lines = gen_unplanted_lines(n, rng);
        inst.verified = n <= 512;
      }
      break;
    case Problem::three_points_on_line: gen_three_points(inst, n, planted, rng); break;
    case Problem::general_covering: gen_general_covering(inst, n, planted, rng); break;
    case Problem::strips_cover_box: gen_strips_cover_box(inst, n, planted, rng); break;
    case Problem::triangles_cover_triangle:
      gen_triangles_cover_triangle(inst, n, planted, rng);
      break;
    case Problem::point_covering: gen_point_covering(inst, n, planted, rng); break;
    case Problem::visibility: gen_visibility(inst, n, planted, rng); break;
    case Problem::segment_separator: gen_segment_separator(inst, n, planted, rng); break;
    case Problem::three_sum: gen_three_sum(inst, n, planted, rng); break;
  }
  return inst;
}

} // namespace qsep
