#include "qsep/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <variant>

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

struct CovCtx {
  const CoveringProblem& prob;
  const SolveOptions& opt;
  Rng& rng;
  std::vector<Triangle> anc;  // regions entered along the current descent
};

Region3 classify_obj(const Point& p, const CoverObject& o) {
  return std::visit([&](const auto& shape) { return classify_point(p, shape); }, o);
}

bool accepts(const CovCtx& ctx, const Point& c, const std::vector<int>& active,
             std::uint64_t acc) {
  if (ctx.prob.pred && !ctx.prob.pred(c)) return false;
  if (ctx.prob.quest == CoveringProblem::Quest::uncovered) {
    for (int id : active) {
      Region3 r = classify_obj(c, ctx.prob.objects[static_cast<std::size_t>(id)]);
      if (r == Region3::interior) return false;
      if (ctx.prob.strict_exterior && r == Region3::boundary) return false;
    }
    return true;
  }
  std::uint64_t depth = acc;
  for (int id : active) {
    if (classify_obj(c, ctx.prob.objects[static_cast<std::size_t>(id)]) != Region3::exterior)
      ++depth;
  }
  return depth >= ctx.prob.depth_threshold;
}

// The level's complete candidate family: pairwise crossings of the boundary
// lines and extras, plus (depth quest) one representative point per line so
// crossing-free parallel families are still probed. Sorted canonical order.
std::vector<Point> enumerate_candidates(const std::vector<UniverseLine>& universe,
                                        const std::vector<Line>& extras, bool with_reps,
                                        std::uint64_t& pairs_out) {
  std::vector<Line> fam;
  fam.reserve(universe.size() + extras.size());
  for (const UniverseLine& u : universe) fam.push_back(u.line);
  for (const Line& l : extras) fam.push_back(l);

  std::vector<Point> cands;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      LineIntersection li = intersect(fam[i], fam[j]);
      if (li.kind == LineIntersection::kPoint) cands.push_back(li.point);
    }
  }
  if (with_reps) {
    for (const Line& l : fam) {
      cands.push_back(l.vertical ? Point{l.x0, scalar_from_int(0)}
                                 : Point{scalar_from_int(0), l.b});
    }
  }
  const std::uint64_t m = fam.size();
  pairs_out = m >= 2 ? m * (m - 1) / 2 : 0;
  std::sort(cands.begin(), cands.end(), point_less);
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

// Evaluates every candidate of this level inside the ancestor regions.
// With a ledger this is the recursion's base case (charged); without one it
// is the uncharged exact scan steering charged-mode descent.
std::optional<Point> scan_candidates(const std::vector<UniverseLine>& universe,
                                     const std::vector<int>& active,
                                     const std::vector<Line>& extras, std::uint64_t acc,
                                     CovCtx& ctx, CostLedger* ledger) {
  const bool reps = ctx.prob.quest == CoveringProblem::Quest::depth;
  std::uint64_t pairs = 0;
  std::vector<Point> cands = enumerate_candidates(universe, extras, reps, pairs);
  if (ledger) {
    ledger->charge_classical(pairs + pairs * ceil_log2(std::max<std::uint64_t>(pairs, 2)));
    ledger->charge_classical(cands.size() * (active.size() + ctx.prob.pred_cost));
  }
  for (const Point& c : cands) {
    bool in_scope = true;
    for (const Triangle& t : ctx.anc) {
      if (classify_point(c, t) == Region3::exterior) {
        in_scope = false;
        break;
      }
    }
    if (in_scope && accepts(ctx, c, active, acc)) return c;
  }
  return std::nullopt;
}

std::optional<Point> cov_rec(std::vector<UniverseLine> universe, std::vector<int> active,
                             std::vector<Line> extras, std::uint64_t acc, CovCtx& ctx,
                             CostLedger& ledger) {
  const std::size_t n = universe.size();
  Params p{};
  bool base = true;
  if (n >= 2 && !active.empty()) {
    p = choose_parameters(n, ctx.opt.epsilon, ctx.opt.params);
    base = p.use_base_case;
  }
  if (base) return scan_candidates(universe, active, extras, acc, ctx, &ledger);

  SeparationInput sin{universe, ctx.prob.objects, active, extras};
  SeparationConfig scfg{p.k, ctx.opt.epsilon, ctx.opt.retry_budget, ctx.opt.forced_bound};
  SeparationResult sep = random_plane_separation(sin, scfg, ctx.rng, ledger);
  const std::size_t t = sep.regions.size();

  // Prune: a fully covered region cannot hold an uncovered witness; a region
  // whose ceiling (accumulated + full + partial) misses the depth threshold
  // cannot hold a deep one.
  std::vector<std::size_t> live;
  live.reserve(t);
  for (std::size_t r = 0; r < t; ++r) {
    if (ctx.prob.quest == CoveringProblem::Quest::uncovered) {
      if (!sep.full_objects[r].empty()) continue;
    } else if (acc + sep.full_objects[r].size() + sep.partial_objects[r].size() <
               ctx.prob.depth_threshold) {
      continue;
    }
    live.push_back(r);
  }
  ledger.charge_classical(t);
  if (live.empty()) return std::nullopt;

  // Charged mode steers the single evaluated branch exactly as the line
  // solver does: exact uncharged scan on moderate sizes, else the caller's
  // hint, else the widest surviving region.
  std::optional<Point> target;
  if (ctx.opt.quantum.mode == ExecMode::charged) {
    if (n <= ctx.opt.covering_scan_limit) {
      target = scan_candidates(universe, active, extras, acc, ctx, nullptr);
    } else if (ctx.opt.witness_hint) {
      target = ctx.opt.witness_hint;
    }
  }

  auto descend = [&](std::size_t r, CostLedger& led) -> std::optional<Point> {
    const std::vector<std::uint32_t>& cs = sep.crossing_sets[r];
    std::vector<UniverseLine> child;
    child.reserve(cs.size());
    for (std::uint32_t pos : cs) child.push_back(universe[pos]);
    std::vector<int> child_active = sep.partial_objects[r];
    Triangle tri = sep.regions.triangle(r);
    std::vector<Line> child_extras = extras;
    for (int i = 0; i < 3; ++i) child_extras.push_back(line_through(tri.v[static_cast<std::size_t>(i)], tri.v[static_cast<std::size_t>((i + 1) % 3)]));
    std::uint64_t child_acc = acc + sep.full_objects[r].size();
    ctx.anc.push_back(tri);
    std::optional<Point> res;
    if (child.size() >= n) {  // no shrink: finish this branch classically
      res = scan_candidates(child, child_active, child_extras, child_acc, ctx, &led);
    } else {
      res = cov_rec(std::move(child), std::move(child_active), std::move(child_extras),
                    child_acc, ctx, led);
    }
    ctx.anc.pop_back();
    return res;
  };

  std::optional<Point> found;
  auto sub = [&](CostLedger& led, std::uint64_t) -> bool {
    led.charge_classical(t);  // region selection pass
    std::size_t r;
    if (ctx.opt.quantum.mode == ExecMode::sampling) {
      r = live[static_cast<std::size_t>(ctx.rng.below(live.size()))];
    } else if (target) {
      std::vector<std::size_t> at;
      try {
        at = sep.regions.locate(*target);
      } catch (const std::out_of_range&) {
        return false;  // a hint outside the clip box steers nothing
      }
      std::size_t pick = t;
      for (std::size_t id : at) {
        if (std::binary_search(live.begin(), live.end(), id)) {
          pick = id;
          break;
        }
      }
      if (pick == t) return false;
      r = pick;
    } else {
      r = live[0];
      for (std::size_t id : live) {
        if (sep.crossing_sets[id].size() > sep.crossing_sets[r].size()) r = id;
      }
    }
    found = descend(r, led);
    return found.has_value();
  };
  bool ok = amplitude_amplify(sub, t, ctx.opt.epsilon, ctx.opt.quantum, ledger);
  return ok ? found : std::nullopt;
}

void validate_objects(const std::vector<CoverObject>& objects) {
  for (const CoverObject& o : objects) {
    if (const Strip* s = std::get_if<Strip>(&o)) {
      if (!lines_parallel(s->b1, s->b2) || s->b1 == s->b2)
        throw std::invalid_argument("strip boundaries must be parallel and distinct");
    } else if (const Angle* a = std::get_if<Angle>(&o)) {
      if (lines_parallel(a->b1, a->b2))
        throw std::invalid_argument("angle boundaries must cross");
      if ((a->s1 != 1 && a->s1 != -1) || (a->s2 != 1 && a->s2 != -1))
        throw std::invalid_argument("angle selectors must be +1 or -1");
    } else if (const HalfPlane* h = std::get_if<HalfPlane>(&o)) {
      if (h->side != 1 && h->side != -1)
        throw std::invalid_argument("half-plane side must be +1 or -1");
    } else if (const Triangle* t = std::get_if<Triangle>(&o)) {
      if (collinear(t->v[0], t->v[1], t->v[2]))
        throw std::invalid_argument("covering triangle is degenerate");
    }
  }
}

}  // namespace

std::optional<Point> solve_covering(const CoveringProblem& prob, const SolveOptions& opt, Rng& rng,
                                    CostLedger& ledger) {
  validate_objects(prob.objects);
  if (prob.quest == CoveringProblem::Quest::depth && prob.strict_exterior)
    throw std::invalid_argument("depth quest does not use strict exteriors");

  // Deduplicated boundary universe: one entry per distinct line, all owners
  // attached (a line shared by several objects backs each of them).
  std::vector<UniverseLine> universe;
  std::unordered_map<Line, std::size_t, LineHash> index_of;
  auto add = [&](const Line& l, Attachment att) {
    auto [it, fresh] = index_of.try_emplace(l, universe.size());
    if (fresh) universe.push_back(UniverseLine{l, {}});
    universe[it->second].attachments.push_back(std::move(att));
  };
  for (std::size_t i = 0; i < prob.objects.size(); ++i) {
    const int owner = static_cast<int>(i);
    std::visit(
        [&](const auto& shape) {
          using T = std::decay_t<decltype(shape)>;
          if constexpr (std::is_same_v<T, Strip> || std::is_same_v<T, Angle>) {
            add(shape.b1, Attachment{owner, std::nullopt});
            add(shape.b2, Attachment{owner, std::nullopt});
          } else if constexpr (std::is_same_v<T, HalfPlane>) {
            add(shape.boundary, Attachment{owner, std::nullopt});
          } else {
            for (int s = 0; s < 3; ++s) {
              const Point& a = shape.v[static_cast<std::size_t>(s)];
              const Point& b = shape.v[static_cast<std::size_t>((s + 1) % 3)];
              add(line_through(a, b), Attachment{owner, Segment{a, b}});
            }
          }
        },
        prob.objects[i]);
  }
  for (const UniverseLine& u : prob.extra_universe) {
    if (u.attachments.empty()) {
      add(u.line, Attachment{-1, std::nullopt});
    } else {
      for (const Attachment& att : u.attachments) add(u.line, att);
    }
  }
  ledger.charge_classical(universe.size() + 1);

  std::vector<int> active(prob.objects.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

  CovCtx ctx{prob, opt, rng, {}};
  std::optional<Point> res =
      cov_rec(std::move(universe), std::move(active), prob.pred_boundary, 0, ctx, ledger);

  if (res) {
    // Self-certification against the full object list and predicate.
    if (prob.pred && !prob.pred(*res))
      throw std::logic_error("covering witness failed its predicate re-check");
    if (prob.quest == CoveringProblem::Quest::uncovered) {
      for (const CoverObject& o : prob.objects) {
        Region3 r = classify_obj(*res, o);
        if (r == Region3::interior || (prob.strict_exterior && r == Region3::boundary))
          throw std::logic_error("covering witness is actually covered");
      }
    } else {
      std::uint64_t depth = 0;
      for (const CoverObject& o : prob.objects) {
        if (classify_obj(*res, o) != Region3::exterior) ++depth;
      }
      if (depth < prob.depth_threshold)
        throw std::logic_error("depth witness failed its exact re-count");
    }
  }
  return res;
}

}  // namespace qsep
