#include "qsep/oracles.hpp"

#include "qsep/arrangement.hpp"

#include <algorithm>
#include <set>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace qsep {

Oracle3SumReport oracle_3sum(const std::vector<long long>& s, std::size_t cap) {
  Oracle3SumReport rep;
  if (s.size() > cap) return rep;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (static_cast<__int128>(s[i]) + s[j] + s[k] == 0) {
          rep.status = OracleStatus::positive;
          rep.witness = ThreeSumWitness{{i, j, k}, {s[i], s[j], s[k]}};
          return rep;
        }
  rep.status = OracleStatus::negative;
  return rep;
}

OracleTripleReport oracle_point_on_3_lines(const std::vector<Line>& lines, std::size_t cap) {
  OracleTripleReport rep;
  if (lines.size() > cap) return rep;

  // Coincident copies: three of the same line share every point on it.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<std::size_t> same{i};
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) same.push_back(j);
    }
    if (same.size() >= 3) {
      const Line& l = lines[i];
      rep.status = OracleStatus::positive;
      rep.indices = {same[0], same[1], same[2]};
      rep.point = l.vertical ? Point{l.x0, scalar_from_int(0)} : Point{scalar_from_int(0), l.b};
      return rep;
    }
  }

  // Group crossings by exact coordinates and count distinct lines per point.
  // Duplicate copies of a line are folded onto their first occurrence so the
  // count really is over distinct geometric lines.
  std::vector<std::size_t> canon(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    canon[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (lines[j] == lines[i]) {
        canon[i] = j;
        break;
      }
    }
  }
  std::unordered_map<Point, std::set<std::size_t>, PointHash> at;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      LineIntersection li = intersect(lines[i], lines[j]);
      if (li.kind != LineIntersection::kPoint) continue;
      std::set<std::size_t>& ids = at[li.point];
      ids.insert(canon[i]);
      ids.insert(canon[j]);
      if (ids.size() >= 3) {
        auto it = ids.begin();
        std::size_t a = *it++;
        std::size_t b = *it++;
        std::size_t c = *it;
        rep.status = OracleStatus::positive;
        rep.indices = {a, b, c};
        rep.point = li.point;
        return rep;
      }
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

OracleTripleReport oracle_3_points_on_line(const std::vector<Point>& points, std::size_t cap) {
  OracleTripleReport rep;
  if (points.size() > cap) return rep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) return rep;  // not a point set: refuse
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (collinear(points[i], points[j], points[k])) {
          rep.status = OracleStatus::positive;
          rep.indices = {i, j, k};
          return rep;
        }
      }
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

namespace {

// One exact sample point per cell of the full subdivision induced by the
// lines: every vertex, the midpoint of every edge, and the vertex centroid
// of every (convex) face. Sorted canonically so "first hit" is stable.
std::vector<Point> cell_samples(const std::vector<Line>& lines) {
  std::vector<Line> distinct;
  {
    std::unordered_set<Line, LineHash> seen;
    for (const Line& l : lines) {
      if (seen.insert(l).second) distinct.push_back(l);
    }
  }
  Box box = compute_clip_box(distinct, scalar_from_int(1));
  Arrangement arr = Arrangement::build(distinct, box);

  std::vector<Point> out = arr.vertices();
  std::set<std::pair<int, int>> edges;
  for (const Arrangement::Face& f : arr.faces()) {
    const std::size_t m = f.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      int a = f.cycle[i], b = f.cycle[(i + 1) % m];
      edges.insert(std::minmax(a, b));
    }
  }
  const std::vector<Point>& v = arr.vertices();
  for (const auto& [a, b] : edges) {
    const Point& p = v[static_cast<std::size_t>(a)];
    const Point& q = v[static_cast<std::size_t>(b)];
    out.push_back(Point{(p.x + q.x) / 2, (p.y + q.y) / 2});
  }
  for (const Arrangement::Face& f : arr.faces()) {
    Scalar sx = 0, sy = 0;
    for (int id : f.cycle) {
      sx += v[static_cast<std::size_t>(id)].x;
      sy += v[static_cast<std::size_t>(id)].y;
    }
    Scalar m = scalar_from_int(static_cast<long long>(f.cycle.size()));
    out.push_back(Point{sx / m, sy / m});
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OraclePointReport oracle_box_uncovered(const std::vector<Strip>& strips, const Box& box,
                                       std::size_t cap) {
  OraclePointReport rep;
  if (strips.size() > cap) return rep;
  std::vector<Line> lines;
  for (const Strip& s : strips) {
    lines.push_back(s.b1);
    lines.push_back(s.b2);
  }
  std::array<Line, 4> edges = box.edge_lines();
  lines.insert(lines.end(), edges.begin(), edges.end());
  for (const Point& p : cell_samples(lines)) {
    if (classify_point(p, box) == Region3::exterior) continue;
    bool covered = false;
    for (const Strip& s : strips) {
      if (classify_point(p, s) == Region3::interior) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      rep.status = OracleStatus::positive;
      rep.witness = p;
      return rep;
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

OraclePointReport oracle_triangle_uncovered(const std::vector<Triangle>& cover,
                                            const Triangle& target, std::size_t cap) {
  OraclePointReport rep;
  if (cover.size() > cap) return rep;
  std::vector<Line> lines;
  auto add_sides = [&lines](const Triangle& t) {
    for (int s = 0; s < 3; ++s) {
      lines.push_back(line_through(t.v[static_cast<std::size_t>(s)],
                                   t.v[static_cast<std::size_t>((s + 1) % 3)]));
    }
  };
  for (const Triangle& t : cover) add_sides(t);
  add_sides(target);
  for (const Point& p : cell_samples(lines)) {
    if (classify_point(p, target) == Region3::exterior) continue;
    bool covered = false;
    for (const Triangle& t : cover) {
      if (classify_point(p, t) == Region3::interior) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      rep.status = OracleStatus::positive;
      rep.witness = p;
      return rep;
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

OraclePointReport oracle_depth_point(const std::vector<HalfPlane>& halfplanes,
                                     std::uint64_t threshold, std::size_t cap) {
  OraclePointReport rep;
  if (halfplanes.size() > cap) return rep;
  if (threshold == 0 || halfplanes.size() < threshold) {
    rep.status = threshold == 0 ? OracleStatus::refused : OracleStatus::negative;
    return rep;
  }
  std::vector<Line> lines;
  for (const HalfPlane& h : halfplanes) lines.push_back(h.boundary);
  for (const Point& p : cell_samples(lines)) {
    std::uint64_t depth = 0;
    for (const HalfPlane& h : halfplanes) {
      if (classify_point(p, h) != Region3::exterior) ++depth;
    }
    if (depth >= threshold) {
      rep.status = OracleStatus::positive;
      rep.witness = p;
      return rep;
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

OraclePointReport oracle_general_covering(const std::vector<CoverObject>& objects,
                                          std::size_t cap) {
  OraclePointReport rep;
  if (objects.size() > cap) return rep;
  std::vector<Line> lines;
  std::unordered_set<Line, LineHash> seen;
  auto add = [&](const Line& l) {
    if (seen.insert(l).second) lines.push_back(l);
  };
  for (const CoverObject& obj : objects) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, Strip> || std::is_same_v<T, Angle>) {
            add(o.b1);
            add(o.b2);
          } else if constexpr (std::is_same_v<T, HalfPlane>) {
            add(o.boundary);
          } else {
            for (int s = 0; s < 3; ++s) {
              add(line_through(o.v[static_cast<std::size_t>(s)],
                               o.v[static_cast<std::size_t>((s + 1) % 3)]));
            }
          }
        },
        obj);
  }
  auto interior_to_any = [&](const Point& p) {
    for (const CoverObject& obj : objects) {
      Region3 c = std::visit([&](const auto& o) { return classify_point(p, o); }, obj);
      if (c == Region3::interior) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      LineIntersection hit = intersect(lines[i], lines[j]);
      if (hit.kind != LineIntersection::kPoint) continue;
      if (!interior_to_any(hit.point)) {
        rep.status = OracleStatus::positive;
        rep.witness = hit.point;
        return rep;
      }
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

namespace {

// All distinct lines through two different points of the list.
std::vector<Line> endpoint_pair_lines(const std::vector<Point>& pts) {
  std::vector<Line> out;
  std::unordered_set<Line, LineHash> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      Line l = line_through(pts[i], pts[j]);
      if (seen.insert(l).second) out.push_back(l);
    }
  }
  return out;
}

}  // namespace

OracleLineReport oracle_visibility(const std::vector<Segment>& obstacles, const Segment& s1,
                                   const Segment& s2, std::size_t cap) {
  OracleLineReport rep;
  if (obstacles.size() > cap) return rep;
  if (s1.p.x != s1.q.x || s2.p.x != s2.q.x) return rep;
  for (const Segment& o : obstacles) {
    if (o.p.x != o.q.x) return rep;
  }
  if (s1.p.x == s2.p.x) return rep;  // outside the endpoint-pair family

  std::vector<Point> pts{s1.p, s1.q, s2.p, s2.q};
  for (const Segment& o : obstacles) {
    pts.push_back(o.p);
    pts.push_back(o.q);
  }
  for (const Line& l : endpoint_pair_lines(pts)) {
    if (!line_meets_segment(l, s1) || !line_meets_segment(l, s2)) continue;
    bool blocked = false;
    for (const Segment& o : obstacles) {
      if (line_meets_segment(l, o)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      rep.status = OracleStatus::positive;
      rep.witness = l;
      return rep;
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

OracleLineReport oracle_separator(const std::vector<Segment>& segments, std::size_t cap) {
  OracleLineReport rep;
  if (segments.size() > cap) return rep;
  for (const Segment& s : segments) {
    if (s.p.x != s.q.x) return rep;
  }
  if (segments.size() < 2) {
    rep.status = OracleStatus::negative;
    return rep;
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      for (const Point& e : {segments[i].p, segments[i].q}) {
        for (const Point& f : {segments[j].p, segments[j].q}) {
          if (e == f) continue;
          Line l = line_through(e, f);
          bool valid = true;
          bool above = false, below = false;
          for (const Segment& s : segments) {
            int sp = line_side(l, s.p);
            int sq = line_side(l, s.q);
            if (sp * sq < 0 || (sp == 0 && sq == 0)) {
              valid = false;  // crosses or contains the relative interior
              break;
            }
            // A touched segment counts by the side its interior lies on.
            if (sp + sq > 0) above = true;
            if (sp + sq < 0) below = true;
          }
          if (valid && above && below) {
            rep.status = OracleStatus::positive;
            rep.witness = l;
            return rep;
          }
        }
      }
    }
  }
  rep.status = OracleStatus::negative;
  return rep;
}

} // namespace qsep
