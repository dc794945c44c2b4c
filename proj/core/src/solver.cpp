#include "qsep/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace qsep {
namespace {

std::uint64_t ceil_log2(std::uint64_t v) {
  std::uint64_t r = 0;
  std::uint64_t p = 1;
  while (p < v) {
    p *= 2;
    ++r;
  }
  return r;
}

struct Ctx {
  const std::vector<Line>& lines;       // distinct geometry
  const std::vector<std::size_t>& orig; // first original index per line
  const SolveOptions& opt;
  Rng& rng;
};

TripleWitness make_witness(const Ctx& ctx, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                           const Point& p) {
  std::array<std::size_t, 3> idx{ctx.orig[a], ctx.orig[b], ctx.orig[c]};
  std::sort(idx.begin(), idx.end());
  return TripleWitness{idx, p};
}

void verify_witness(const std::vector<Line>& original, const TripleWitness& w) {
  if (w.indices[0] == w.indices[1] || w.indices[1] == w.indices[2])
    throw std::logic_error("triple witness indices not distinct");
  for (std::size_t i : w.indices) {
    if (!point_on_line(original[i], w.point))
      throw std::logic_error("triple witness failed exact re-verification");
  }
}

// Exact pairwise-intersection sweep: collect every crossing, sort, and look
// for a coordinate hit by two or more line pairs (two pairs always involve
// at least three distinct lines). Charges n^2/2 + sort steps.
std::optional<TripleWitness> base_case(const std::vector<std::uint32_t>& active, const Ctx& ctx,
                                       CostLedger& ledger) {
  const std::size_t n = active.size();
  if (n < 3) {
    ledger.charge_classical(1);
    return std::nullopt;
  }
  std::vector<std::tuple<Point, std::uint32_t, std::uint32_t>> pts;
  pts.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      LineIntersection li = intersect(ctx.lines[active[i]], ctx.lines[active[j]]);
      if (li.kind == LineIntersection::kPoint) {
        pts.emplace_back(li.point, active[i], active[j]);
      }
    }
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  ledger.charge_classical(pairs + pairs * ceil_log2(std::max<std::uint64_t>(pairs, 2)));

  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    return point_less(std::get<0>(x), std::get<0>(y));
  });
  std::size_t a = 0;
  while (a < pts.size()) {
    std::size_t b = a + 1;
    while (b < pts.size() && std::get<0>(pts[b]) == std::get<0>(pts[a])) ++b;
    if (b - a >= 2) {
      // Two pairs at one point: gather the first three distinct lines.
      std::vector<std::uint32_t> ids;
      for (std::size_t r = a; r < b && ids.size() < 3; ++r) {
        for (std::uint32_t id : {std::get<1>(pts[r]), std::get<2>(pts[r])}) {
          if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
          if (ids.size() == 3) break;
        }
      }
      return make_witness(ctx, ids[0], ids[1], ids[2], std::get<0>(pts[a]));
    }
    a = b;
  }
  return std::nullopt;
}

// Uncharged exact witness location used by charged mode on moderate sizes:
// the emulated oracle. Returns a point lying on >= 3 distinct active lines.
std::optional<Point> exact_scan(const std::vector<std::uint32_t>& active, const Ctx& ctx) {
  std::unordered_map<Point, int, PointHash> pair_count;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      LineIntersection li = intersect(ctx.lines[active[i]], ctx.lines[active[j]]);
      if (li.kind != LineIntersection::kPoint) continue;
      if (++pair_count[li.point] >= 2) return li.point;
    }
  }
  return std::nullopt;
}

std::optional<TripleWitness> solve_rec(std::vector<std::uint32_t> active, const Ctx& ctx,
                                       CostLedger& ledger) {
  const std::size_t n = active.size();
  if (n < 3) {
    ledger.charge_classical(1);
    return std::nullopt;
  }
  Params p = choose_parameters(n, ctx.opt.epsilon, ctx.opt.params);
  if (p.use_base_case) return base_case(active, ctx, ledger);

  SeparationInput sin;
  sin.universe.reserve(n);
  for (std::uint32_t id : active) {
    sin.universe.push_back(UniverseLine{ctx.lines[id], {Attachment{static_cast<int>(id), std::nullopt}}});
  }
  SeparationConfig scfg;
  scfg.k = p.k;
  scfg.epsilon = ctx.opt.epsilon;
  scfg.retry_budget = ctx.opt.retry_budget;
  scfg.forced_bound = ctx.opt.forced_bound;
  SeparationResult sep = random_plane_separation(sin, scfg, ctx.rng, ledger);

  // Ready-made concurrences on sampled lines win immediately.
  if (!sep.boundary_witnesses.empty()) {
    ledger.charge_classical(n);
    for (const Point& w : sep.boundary_witnesses) {
      std::vector<std::uint32_t> on;
      for (std::uint32_t id : active) {
        if (point_on_line(ctx.lines[id], w)) {
          on.push_back(id);
          if (on.size() == 3) break;
        }
      }
      if (on.size() == 3) return make_witness(ctx, on[0], on[1], on[2], w);
    }
  }

  const std::size_t t = sep.regions.size();

  // Charged mode steers the single evaluated branch: by the exact uncharged
  // scan on moderate sizes, else by the caller's hint, else into the widest
  // region (representative cost, best-effort answer).
  std::optional<Point> target;
  if (ctx.opt.quantum.mode == ExecMode::charged) {
    if (n <= ctx.opt.charged_scan_limit) {
      target = exact_scan(active, ctx);
    } else if (ctx.opt.witness_hint) {
      target = ctx.opt.witness_hint;
    }
  }

  auto descend = [&](std::size_t r, CostLedger& led) -> std::optional<TripleWitness> {
    const std::vector<std::uint32_t>& cs = sep.crossing_sets[r];
    std::vector<std::uint32_t> child;
    child.reserve(cs.size());
    for (std::uint32_t pos : cs) child.push_back(active[pos]);
    if (child.size() >= n) return base_case(child, ctx, led);  // no shrink: finish classically
    return solve_rec(std::move(child), ctx, led);
  };

  std::optional<TripleWitness> found;
  auto sub = [&](CostLedger& led, std::uint64_t) -> bool {
    led.charge_classical(t);  // region selection pass
    std::size_t r;
    if (ctx.opt.quantum.mode == ExecMode::sampling) {
      r = static_cast<std::size_t>(ctx.rng.below(t));
    } else if (target) {
      std::vector<std::size_t> at = sep.regions.locate(*target);
      if (at.empty()) return false;
      r = at.front();
    } else {
      r = 0;
      for (std::size_t i = 1; i < t; ++i) {
        if (sep.crossing_sets[i].size() > sep.crossing_sets[r].size()) r = i;
      }
    }
    found = descend(r, led);
    return found.has_value();
  };
  bool ok = amplitude_amplify(sub, t, ctx.opt.epsilon, ctx.opt.quantum, ledger);
  if (ok && found) return found;
  return std::nullopt;
}

} // namespace

std::optional<TripleWitness> solve_point_on_3_lines(const std::vector<Line>& lines,
                                                    const SolveOptions& opt, Rng& rng,
                                                    CostLedger& ledger) {
  // Collapse duplicates; three copies of one line already share every point.
  std::unordered_map<Line, std::vector<std::size_t>, LineHash> groups;
  for (std::size_t i = 0; i < lines.size(); ++i) groups[lines[i]].push_back(i);
  ledger.charge_classical(lines.size());

  std::vector<Line> distinct;
  std::vector<std::size_t> orig;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::vector<std::size_t>& g = groups[lines[i]];
    if (g.front() != i) continue;  // keep first occurrence only
    if (g.size() >= 3) {
      const Line& l = lines[i];
      Point w = l.vertical ? Point{l.x0, scalar_from_int(0)} : Point{scalar_from_int(0), l.b};
      TripleWitness res{{g[0], g[1], g[2]}, w};
      verify_witness(lines, res);
      return res;
    }
    distinct.push_back(lines[i]);
    orig.push_back(i);
  }
  if (distinct.size() < 3) return std::nullopt;

  Ctx ctx{distinct, orig, opt, rng};
  std::vector<std::uint32_t> active(distinct.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<std::uint32_t>(i);
  std::optional<TripleWitness> res = solve_rec(std::move(active), ctx, ledger);
  if (res) verify_witness(lines, *res);
  return res;
}

} // namespace qsep
