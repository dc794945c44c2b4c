#include "qsep/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace qsep {
namespace {

// Closed convex region vs. unbounded line: the vertex side signs straddle
// zero exactly when the line meets the closed triangle.
bool line_crosses_triangle(const Line& l, const Triangle& t) {
  int mn = 2, mx = -2;
  for (const Point& v : t.v) {
    int s = line_side(l, v);
    mn = std::min(mn, s);
    mx = std::max(mx, s);
  }
  return mn <= 0 && 0 <= mx;
}

bool attachment_crosses(const Line& line, const Attachment& a, const Triangle& region) {
  if (a.segment) {
    return segment_meets_triangle(*a.segment, region.v[0], region.v[1], region.v[2]);
  }
  (void)line;
  return true;  // caller already checked the full line
}

// Is the entry's line materially present at p (p is known to lie on the line)?
bool entry_material_at(const UniverseLine& e, const Point& p) {
  if (e.attachments.empty()) return true;
  for (const Attachment& a : e.attachments) {
    if (!a.segment || segment_contains(*a.segment, p)) return true;
  }
  return false;
}

struct BoundaryProbe {
  // Either a full line or a segment of the object boundary.
  const Line* line = nullptr;
  const Segment* segment = nullptr;
};

bool probe_crosses(const BoundaryProbe& pr, const Triangle& region) {
  if (pr.segment != nullptr) {
    return segment_meets_triangle(*pr.segment, region.v[0], region.v[1], region.v[2]);
  }
  return line_crosses_triangle(*pr.line, region);
}

} // namespace

CoverClass classify_region(const Triangle& region, const CoverObject& obj) {
  // Boundary crossing forces "partial" (conservatively: grazing contact is
  // still treated as partial, which only delays pruning, never breaks it).
  bool boundary_hit = std::visit(
      [&](const auto& o) -> bool {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Strip>) {
          return line_crosses_triangle(o.b1, region) || line_crosses_triangle(o.b2, region);
        } else if constexpr (std::is_same_v<T, Angle>) {
          return line_crosses_triangle(o.b1, region) || line_crosses_triangle(o.b2, region);
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return line_crosses_triangle(o.boundary, region);
        } else {
          static_assert(std::is_same_v<T, Triangle>);
          for (int i = 0; i < 3; ++i) {
            Segment side{o.v[i], o.v[(i + 1) % 3]};
            if (segment_meets_triangle(side, region.v[0], region.v[1], region.v[2])) return true;
          }
          return false;
        }
      },
      obj);
  if (boundary_hit) return CoverClass::partial;

  // No boundary contact: the whole closed region lies in one connected piece
  // of the plane minus the object's boundary, so any vertex decides. (For a
  // triangle object, "object strictly inside the region" is impossible here
  // because its sides would meet the region.)
  Region3 c = std::visit([&](const auto& o) { return classify_point(region.v[0], o); }, obj);
  switch (c) {
    case Region3::interior: return CoverClass::full;
    case Region3::exterior: return CoverClass::none;
    case Region3::boundary: break;  // unreachable when no boundary crossed
  }
  return CoverClass::partial;
}

bool entry_crosses_region(const UniverseLine& entry, const Triangle& region) {
  if (!line_crosses_triangle(entry.line, region)) return false;
  if (entry.attachments.empty()) return true;
  for (const Attachment& a : entry.attachments) {
    if (attachment_crosses(entry.line, a, region)) return true;
  }
  return false;
}

SeparationResult random_plane_separation(const SeparationInput& in, const SeparationConfig& cfg,
                                         Rng& rng, CostLedger& ledger) {
  const std::size_t n = in.universe.size();
  const std::size_t k = cfg.k;
  if (n == 0) throw std::invalid_argument("random_plane_separation: empty universe");
  if (k < 1 || k > n) throw std::invalid_argument("random_plane_separation: need 1 <= k <= universe size");

  const std::uint64_t threshold =
      cfg.forced_bound != 0 ? cfg.forced_bound : separation_size_bound(n, k, cfg.epsilon);

  std::vector<int> active = in.active_objects;
  if (active.empty() && !in.objects.empty()) {
    active.resize(in.objects.size());
    for (std::size_t i = 0; i < in.objects.size(); ++i) active[i] = static_cast<int>(i);
  }
  for (int id : active) {
    if (id < 0 || static_cast<std::size_t>(id) >= in.objects.size())
      throw std::invalid_argument("random_plane_separation: active object id out of range");
  }

  // One box for all attempts: it covers every universe and extra-candidate
  // line, so every pairwise crossing of interest is strictly interior.
  std::vector<Line> box_lines;
  box_lines.reserve(n + in.extra_box_lines.size());
  for (const UniverseLine& u : in.universe) box_lines.push_back(u.line);
  for (const Line& l : in.extra_box_lines) box_lines.push_back(l);
  const Box box = compute_clip_box(box_lines, scalar_from_int(1));

  const int attempts = 1 + std::max(0, cfg.retry_budget);
  std::size_t last_violation = 0;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::uint32_t> sample =
        rng.sample_distinct(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
    std::vector<Line> sample_lines;
    sample_lines.reserve(k);
    for (std::uint32_t idx : sample) sample_lines.push_back(in.universe[idx].line);

    RegionSet regions(Arrangement::build(sample_lines, box));
    ledger.charge_classical(static_cast<std::uint64_t>(k) * k);

    const std::size_t t = regions.size();
    std::vector<std::vector<std::uint32_t>> crossing(t);
    // Regions share arrangement vertices, so each universe line's side signs
    // are computed once per vertex and reused across all regions.
    const std::vector<Point>& verts = regions.arrangement().vertices();
    std::vector<signed char> vsign(verts.size());
    for (std::size_t u = 0; u < n; ++u) {
      const UniverseLine& entry = in.universe[u];
      for (std::size_t v = 0; v < verts.size(); ++v) {
        vsign[v] = static_cast<signed char>(line_side(entry.line, verts[v]));
      }
      for (std::size_t r = 0; r < t; ++r) {
        const Region& reg = regions.regions()[r];
        signed char mn = 2, mx = -2;
        for (int vid : reg.v) {
          signed char s = vsign[static_cast<std::size_t>(vid)];
          mn = std::min(mn, s);
          mx = std::max(mx, s);
        }
        if (mn > 0 || mx < 0) continue;
        if (!entry.attachments.empty()) {
          bool material = false;
          for (const Attachment& a : entry.attachments) {
            if (attachment_crosses(entry.line, a, regions.triangle(r))) {
              material = true;
              break;
            }
          }
          if (!material) continue;
        }
        crossing[r].push_back(static_cast<std::uint32_t>(u));
      }
    }
    std::size_t max_crossing = 0;
    for (const auto& s : crossing) max_crossing = std::max(max_crossing, s.size());
    ledger.charge_classical(static_cast<std::uint64_t>(n) * t);

    if (max_crossing > threshold) {
      last_violation = max_crossing;
      continue;  // fresh sample
    }

    SeparationResult res{.sample = std::move(sample),
                         .regions = std::move(regions),
                         .crossing_sets = std::move(crossing),
                         .full_objects = {},
                         .partial_objects = {},
                         .boundary_witnesses = {},
                         .threshold = threshold,
                         .max_crossing = max_crossing,
                         .retries = attempt};

    if (!active.empty()) {
      res.full_objects.resize(t);
      res.partial_objects.resize(t);
      for (std::size_t r = 0; r < t; ++r) {
        const Triangle tri = res.regions.triangle(r);
        for (int id : active) {
          switch (classify_region(tri, in.objects[static_cast<std::size_t>(id)])) {
            case CoverClass::full: res.full_objects[r].push_back(id); break;
            case CoverClass::partial: res.partial_objects[r].push_back(id); break;
            case CoverClass::none: break;
          }
        }
      }
      ledger.charge_classical(static_cast<std::uint64_t>(active.size()) * t);
    }

    // Concurrence scan along each sampled line: a point on a region boundary
    // where three or more distinct input lines meet is a ready-made witness.
    std::unordered_set<Point, PointHash> seen;
    for (std::uint32_t su : res.sample) {
      const UniverseLine& se = in.universe[su];
      std::unordered_map<Point, int, PointHash> hits;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == su) continue;
        LineIntersection li = intersect(se.line, in.universe[u].line);
        if (li.kind != LineIntersection::kPoint) continue;
        if (!entry_material_at(in.universe[u], li.point)) continue;
        ++hits[li.point];
      }
      for (const auto& [p, c] : hits) {
        int self = entry_material_at(se, p) ? 1 : 0;
        if (c + self >= 3 && seen.insert(p).second) {
          res.boundary_witnesses.push_back(p);
        }
      }
    }
    ledger.charge_classical(static_cast<std::uint64_t>(k) * n);
    std::sort(res.boundary_witnesses.begin(), res.boundary_witnesses.end(), point_less);

    return res;
  }

  throw SizeBoundError("random_plane_separation: crossing-set size " + std::to_string(last_violation) +
                       " exceeded bound " + std::to_string(threshold) + " after " +
                       std::to_string(attempts) + " attempts");
}

} // namespace qsep
