#include "qsep/reductions.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace qsep {
namespace {

void require_vertical(const Segment& s, const char* what) {
  if (s.p.x != s.q.x) throw std::invalid_argument(std::string(what) + " must be vertical");
}

// y-range of a vertical segment, low to high.
std::pair<Scalar, Scalar> y_range(const Segment& s) {
  return s.p.y <= s.q.y ? std::pair<Scalar, Scalar>{s.p.y, s.q.y}
                        : std::pair<Scalar, Scalar>{s.q.y, s.p.y};
}

Strip dual_strip(const Segment& s) {
  return std::get<Strip>(dual_of_segment(s));
}

// Non-vertical witness line through (c, y) steep enough to clear every
// obstacle that lives at a different abscissa: at each obstacle's x the line
// has already left the obstacle's y-range.
Line steep_line_through(const Scalar& c, const Scalar& y, const std::vector<Segment>& obstacles) {
  Scalar slope = scalar_from_int(1);
  for (const Segment& o : obstacles) {
    const Scalar& ox = o.p.x;
    if (ox == c) continue;
    auto [lo, hi] = y_range(o);
    Scalar gap = ox > c ? ox - c : c - ox;
    Scalar need_hi = hi >= y ? hi - y : y - hi;
    Scalar need_lo = lo >= y ? lo - y : y - lo;
    Scalar need = (std::max(need_hi, need_lo) + 1) / gap;
    if (need > slope) slope = need;
  }
  return Line::non_vertical(slope, y - slope * c);
}

}  // namespace

std::optional<std::array<std::size_t, 3>> solve_3_points_on_line(const std::vector<Point>& points,
                                                                 const SolveOptions& opt, Rng& rng,
                                                                 CostLedger& ledger) {
  {
    std::unordered_set<Point, PointHash> seen;
    for (const Point& p : points) {
      if (!seen.insert(p).second)
        throw std::invalid_argument("duplicate points: a multiset is not a point set");
    }
  }
  ledger.charge_classical(points.size());

  // Vertical triples have no dual counterpart; catch them directly.
  {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
    std::size_t a = 0;
    while (a < order.size()) {
      std::size_t b = a + 1;
      while (b < order.size() && points[order[b]].x == points[order[a]].x) ++b;
      if (b - a >= 3) {
        std::array<std::size_t, 3> idx{order[a], order[a + 1], order[a + 2]};
        std::sort(idx.begin(), idx.end());
        return idx;
      }
      a = b;
    }
    ledger.charge_classical(points.size());
  }

  std::vector<Line> duals;
  duals.reserve(points.size());
  for (const Point& p : points) duals.push_back(dual_of_point(p));
  ledger.charge_classical(points.size());

  std::optional<TripleWitness> w = solve_point_on_3_lines(duals, opt, rng, ledger);
  if (!w) return std::nullopt;
  for (std::size_t i : w->indices) {
    // The dual witness point is the common line; incidence transfers exactly.
    if (!point_on_line(dual_of_point(points[i]), w->point))
      throw std::logic_error("collinearity witness failed dual re-verification");
  }
  return w->indices;
}

std::optional<Point> solve_general_covering(const std::vector<CoverObject>& objects,
                                            std::function<bool(const Point&)> pred,
                                            std::vector<Line> pred_boundary,
                                            const SolveOptions& opt, Rng& rng,
                                            CostLedger& ledger) {
  CoveringProblem prob;
  prob.objects = objects;
  prob.pred = std::move(pred);
  prob.pred_boundary = std::move(pred_boundary);
  return solve_covering(prob, opt, rng, ledger);
}

std::optional<Point> solve_strips_cover_box(const std::vector<Strip>& strips, const Box& box,
                                            const SolveOptions& opt, Rng& rng,
                                            CostLedger& ledger) {
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax))
    throw std::invalid_argument("degenerate box");
  CoveringProblem prob;
  prob.objects.assign(strips.begin(), strips.end());
  prob.pred = [box](const Point& p) { return classify_point(p, box) != Region3::exterior; };
  std::array<Line, 4> edges = box.edge_lines();
  prob.pred_boundary.assign(edges.begin(), edges.end());
  return solve_covering(prob, opt, rng, ledger);
}

std::optional<Point> solve_triangles_cover_triangle(const std::vector<Triangle>& cover,
                                                    const Triangle& target,
                                                    const SolveOptions& opt, Rng& rng,
                                                    CostLedger& ledger) {
  if (collinear(target.v[0], target.v[1], target.v[2]))
    throw std::invalid_argument("target triangle is degenerate");
  CoveringProblem prob;
  prob.objects.assign(cover.begin(), cover.end());
  prob.pred = [target](const Point& p) { return classify_point(p, target) != Region3::exterior; };
  for (int s = 0; s < 3; ++s) {
    const Point& a = target.v[static_cast<std::size_t>(s)];
    const Point& b = target.v[static_cast<std::size_t>((s + 1) % 3)];
    prob.extra_universe.push_back(
        UniverseLine{line_through(a, b), {Attachment{-1, Segment{a, b}}}});
  }
  return solve_covering(prob, opt, rng, ledger);
}

std::optional<Point> solve_point_covering(const std::vector<HalfPlane>& halfplanes,
                                          std::uint64_t threshold, const SolveOptions& opt,
                                          Rng& rng, CostLedger& ledger) {
  if (threshold < 1) throw std::invalid_argument("coverage threshold must be at least 1");
  CoveringProblem prob;
  prob.objects.assign(halfplanes.begin(), halfplanes.end());
  prob.quest = CoveringProblem::Quest::depth;
  prob.depth_threshold = threshold;
  return solve_covering(prob, opt, rng, ledger);
}

std::optional<Line> solve_visibility_between_segments(const std::vector<Segment>& obstacles,
                                                      const Segment& s1, const Segment& s2,
                                                      const SolveOptions& opt, Rng& rng,
                                                      CostLedger& ledger) {
  require_vertical(s1, "segment s1");
  require_vertical(s2, "segment s2");
  for (const Segment& o : obstacles) require_vertical(o, "every obstacle");

  if (s1.p.x == s2.p.x) {
    // Both segments on one vertical line: no dual image exists, but the
    // answer is elementary. The vertical line itself works unless an
    // obstacle shares the abscissa; otherwise any sight line crosses that
    // abscissa exactly once, inside both segments' common y-interval and
    // outside every same-abscissa obstacle, and can then be made steep
    // enough to clear the rest.
    const Scalar& c = s1.p.x;
    std::vector<std::pair<Scalar, Scalar>> blockers;
    for (const Segment& o : obstacles) {
      if (o.p.x == c) blockers.push_back(y_range(o));
    }
    ledger.charge_classical(obstacles.size() + 1);
    if (blockers.empty()) return Line::vertical_at(c);

    auto [lo1, hi1] = y_range(s1);
    auto [lo2, hi2] = y_range(s2);
    Scalar lo = std::max(lo1, lo2);
    Scalar hi = std::min(hi1, hi2);
    if (lo > hi) return std::nullopt;

    std::vector<Scalar> breaks{lo, hi};
    for (const auto& [bl, bh] : blockers) {
      breaks.push_back(bl);
      breaks.push_back(bh);
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<Scalar> cands = breaks;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
      cands.push_back((breaks[i] + breaks[i + 1]) / 2);
    ledger.charge_classical(blockers.size() * cands.size() + cands.size());
    for (const Scalar& y : cands) {
      if (y < lo || y > hi) continue;
      bool free = true;
      for (const auto& [bl, bh] : blockers) {
        if (bl <= y && y <= bh) {
          free = false;
          break;
        }
      }
      if (free) return steep_line_through(c, y, obstacles);
    }
    return std::nullopt;
  }

  CoveringProblem prob;
  prob.objects.reserve(obstacles.size());
  for (const Segment& o : obstacles) prob.objects.push_back(dual_strip(o));
  prob.strict_exterior = true;  // sight lines must miss closed obstacles
  prob.pred = [s1, s2](const Point& x) {
    Line l = dual_of_point(x);
    return line_meets_segment(l, s1) && line_meets_segment(l, s2);
  };
  prob.pred_cost = 2;
  prob.pred_boundary = {dual_of_point(s1.p), dual_of_point(s1.q), dual_of_point(s2.p),
                        dual_of_point(s2.q)};

  std::optional<Point> x = solve_covering(prob, opt, rng, ledger);
  if (!x) return std::nullopt;
  Line sight = dual_of_point(*x);
  if (!line_meets_segment(sight, s1) || !line_meets_segment(sight, s2))
    throw std::logic_error("sight line failed primal re-verification");
  for (const Segment& o : obstacles) {
    if (line_meets_segment(sight, o))
      throw std::logic_error("sight line touches an obstacle");
  }
  return sight;
}

std::optional<Line> solve_segment_separator(const std::vector<Segment>& segments,
                                            const SolveOptions& opt, Rng& rng,
                                            CostLedger& ledger) {
  for (const Segment& s : segments) require_vertical(s, "every segment");
  if (segments.size() < 2) return std::nullopt;

  // Candidate lines through a convex-hull edge of the endpoint set leave
  // everything on one side; filter them out up front.
  std::vector<Point> endpoints;
  endpoints.reserve(2 * segments.size());
  for (const Segment& s : segments) {
    endpoints.push_back(s.p);
    endpoints.push_back(s.q);
  }
  std::vector<Point> hull = convex_hull(endpoints);
  auto hull_lines = std::make_shared<std::unordered_set<Line, LineHash>>();
  if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i)
      hull_lines->insert(line_through(hull[i], hull[(i + 1) % hull.size()]));
  } else if (hull.size() == 2) {
    hull_lines->insert(line_through(hull[0], hull[1]));
  }
  ledger.charge_classical(endpoints.size() * 2 + hull.size());

  CoveringProblem prob;
  prob.objects.reserve(segments.size());
  for (const Segment& s : segments) prob.objects.push_back(dual_strip(s));
  prob.pred_cost = segments.size();
  prob.pred = [segments, hull_lines](const Point& x) {
    Line l = dual_of_point(x);
    if (hull_lines->count(l)) return false;
    std::size_t touched = 0;
    bool above = false, below = false;
    for (const Segment& s : segments) {
      auto [lo, hi] = y_range(s);
      Scalar yv = l.a * s.p.x + l.b;
      if (lo < yv && yv < hi) return false;  // crosses the relative interior
      if (yv == lo || yv == hi) {
        ++touched;
        // A touched segment counts by the side its relative interior is on.
        (yv == lo ? above : below) = true;
      } else {
        (yv < lo ? above : below) = true;
      }
    }
    return touched >= 2 && above && below;
  };

  std::optional<Point> x = solve_covering(prob, opt, rng, ledger);
  if (!x) return std::nullopt;
  Line sep = dual_of_point(*x);
  for (const Segment& s : segments) {
    if (line_meets_segment_relint(sep, s))
      throw std::logic_error("separator crosses a segment interior");
  }
  return sep;
}

}  // namespace qsep
