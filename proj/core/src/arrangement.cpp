#include "qsep/arrangement.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace qsep {

Box compute_clip_box(const std::vector<Line>& lines, const Scalar& extra_margin) {
  if (lines.empty()) throw std::invalid_argument("compute_clip_box: no lines");
  if (sign(extra_margin) < 0) throw std::invalid_argument("compute_clip_box: negative margin");
  BigInt max_num = 0, max_den = 1;
  const auto feed = [&](const Scalar& s) {
    max_num = std::max(max_num, BigInt(abs(num(s))));
    max_den = std::max(max_den, den(s));
  };
  for (const Line& l : lines) {
    if (l.vertical) {
      feed(l.x0);
    } else {
      feed(l.a);
      feed(l.b);
    }
  }
  // x-coordinates of intersections are bounded by 2*N*D^2; substituting into
  // y = a*x + b multiplies by at most another N and adds N.
  const BigInt n_factor = std::max(max_num, BigInt(1));
  const BigInt half_int = 2 * max_num * max_den * max_den * n_factor + max_num + 1;
  const Scalar half = Scalar(half_int) + extra_margin;
  return Box{-half, half, -half, half};
}

Arrangement::Arrangement(const Box& box) : box_(box) {
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax))
    throw std::invalid_argument("Arrangement: empty clip box");
  const auto corners = box.corners();  // CCW from (xmin, ymin)
  Face f;
  for (const Point& c : corners) f.cycle.push_back(intern_vertex(c));
  f.support = {kBoxBottom, kBoxRight, kBoxTop, kBoxLeft};
  for (int i = 0; i < 4; ++i) {
    note_support(f.cycle[static_cast<std::size_t>(i)], f.support[static_cast<std::size_t>(i)]);
    note_support(f.cycle[static_cast<std::size_t>((i + 1) % 4)],
                 f.support[static_cast<std::size_t>(i)]);
  }
  faces_.push_back(std::move(f));
}

int Arrangement::intern_vertex(const Point& p) {
  auto it = vertex_ids_.find(p);
  if (it != vertex_ids_.end()) return it->second;
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back(p);
  vertex_supports_.emplace_back();
  vertex_ids_.emplace(p, id);
  return id;
}

void Arrangement::note_support(int vertex_id, int support_id) {
  auto& v = vertex_supports_[static_cast<std::size_t>(vertex_id)];
  auto it = std::lower_bound(v.begin(), v.end(), support_id);
  if (it == v.end() || *it != support_id) v.insert(it, support_id);
}

Line Arrangement::support_line(int support_id) const {
  if (support_id >= 0) {
    if (static_cast<std::size_t>(support_id) >= lines_.size())
      throw std::out_of_range("support_line: unknown line id");
    return lines_[static_cast<std::size_t>(support_id)];
  }
  switch (support_id) {
    case kBoxBottom: return Line::non_vertical(Scalar(0), box_.ymin);
    case kBoxRight: return Line::vertical_at(box_.xmax);
    case kBoxTop: return Line::non_vertical(Scalar(0), box_.ymax);
    case kBoxLeft: return Line::vertical_at(box_.xmin);
    default: throw std::out_of_range("support_line: chord has no single support");
  }
}

void Arrangement::insert_line(const Line& l) {
  for (const Line& e : lines_) {
    if (e == l) throw std::invalid_argument("insert_line: duplicate line");
    const auto meet = intersect(e, l);
    if (meet.kind == LineIntersection::kPoint && !box_.strictly_contains(meet.point))
      throw std::logic_error("insert_line: intersection outside clip box");
  }
  const int L = static_cast<int>(lines_.size());
  lines_.push_back(l);

  const std::size_t existing_faces = faces_.size();
  for (std::size_t f = 0; f < existing_faces; ++f) {
    const Face face = faces_[f];  // copy: faces_ grows during the loop
    const std::size_t m = face.cycle.size();
    std::vector<int> sg(m);
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < m; ++i) {
      sg[i] = line_side(l, vertices_[static_cast<std::size_t>(face.cycle[i])]);
      has_pos |= sg[i] > 0;
      has_neg |= sg[i] < 0;
    }
    if (!has_pos || !has_neg) {
      // Line misses the interior; it may still graze vertices.
      for (std::size_t i = 0; i < m; ++i)
        if (sg[i] == 0) note_support(face.cycle[i], L);
      continue;
    }

    // Augment the cycle with the (up to two) strict side crossings.
    std::vector<int> cyc2, sup2, sg2;
    cyc2.reserve(m + 2);
    sup2.reserve(m + 2);
    sg2.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = (i + 1) % m;
      cyc2.push_back(face.cycle[i]);
      sup2.push_back(face.support[i]);
      sg2.push_back(sg[i]);
      if (sg[i] * sg[j] < 0) {
        const auto meet = intersect(l, support_line(face.support[i]));
        if (meet.kind != LineIntersection::kPoint)
          throw std::logic_error("insert_line: degenerate side crossing");
        const int w = intern_vertex(meet.point);
        note_support(w, face.support[i]);
        note_support(w, L);
        cyc2.push_back(w);
        sup2.push_back(face.support[i]);
        sg2.push_back(0);
      }
    }

    const std::size_t m2 = cyc2.size();
    std::vector<std::size_t> zero_pos;
    for (std::size_t i = 0; i < m2; ++i)
      if (sg2[i] == 0) zero_pos.push_back(i);
    if (zero_pos.size() != 2)
      throw std::logic_error("insert_line: straddling face without exactly 2 boundary hits");
    const std::size_t z0 = zero_pos[0], z1 = zero_pos[1];
    if ((z1 - z0) % m2 < 2 || (z0 + m2 - z1) % m2 < 2)
      throw std::logic_error("insert_line: line coincides with a face side");
    note_support(cyc2[z0], L);
    note_support(cyc2[z1], L);

    const auto carve = [&](std::size_t from, std::size_t to) {
      Face part;
      for (std::size_t i = from;; i = (i + 1) % m2) {
        part.cycle.push_back(cyc2[i]);
        if (i == to) break;
        part.support.push_back(sup2[i]);
      }
      part.support.push_back(L);  // closing chord to -> from along the new line
      return part;
    };
    Face fa = carve(z0, z1);
    Face fb = carve(z1, z0);
    faces_[f] = std::move(fa);
    faces_.push_back(std::move(fb));
  }
}

Arrangement Arrangement::build(const std::vector<Line>& lines, const Box& box) {
  Arrangement arr(box);
  for (const Line& l : lines) arr.insert_line(l);
  return arr;
}

std::size_t Arrangement::edge_count() const {
  std::set<std::pair<int, int>> edges;
  for (const Face& f : faces_) {
    const std::size_t m = f.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int u = f.cycle[i], v = f.cycle[(i + 1) % m];
      edges.emplace(std::min(u, v), std::max(u, v));
    }
  }
  return edges.size();
}

void Arrangement::validate() const {
  const auto fail = [](const char* what) { throw std::logic_error(what); };

  Scalar doubled_total = 0;
  std::map<std::pair<int, int>, int> undirected;
  std::set<std::pair<int, int>> directed;
  for (const Face& f : faces_) {
    const std::size_t m = f.cycle.size();
    if (m < 3 || f.support.size() != m) fail("arrangement: malformed face");
    for (std::size_t i = 0; i < m; ++i) {
      const Point& prev = vertices_[static_cast<std::size_t>(f.cycle[(i + m - 1) % m])];
      const Point& cur = vertices_[static_cast<std::size_t>(f.cycle[i])];
      const Point& next = vertices_[static_cast<std::size_t>(f.cycle[(i + 1) % m])];
      if (orientation(prev, cur, next) <= 0) fail("arrangement: face not strictly convex CCW");

      const int u = f.cycle[i], v = f.cycle[(i + 1) % m];
      const Line sup = support_line(f.support[i]);
      if (!point_on_line(sup, vertices_[static_cast<std::size_t>(u)]) ||
          !point_on_line(sup, vertices_[static_cast<std::size_t>(v)]))
        fail("arrangement: side leaves its supporting line");
      if (!directed.emplace(u, v).second) fail("arrangement: directed side repeated");
      ++undirected[{std::min(u, v), std::max(u, v)}];

      doubled_total += vertices_[static_cast<std::size_t>(u)].x *
                           vertices_[static_cast<std::size_t>(v)].y -
                       vertices_[static_cast<std::size_t>(v)].x *
                           vertices_[static_cast<std::size_t>(u)].y;
    }
  }
  for (const auto& [e, count] : undirected)
    if (count != 1 && count != 2) fail("arrangement: edge shared by more than two faces");

  const Scalar box_doubled = 2 * box_.width() * box_.height();
  if (doubled_total != box_doubled) fail("arrangement: faces do not tile the clip box");

  const long long V = static_cast<long long>(vertex_count());
  const long long E = static_cast<long long>(edge_count());
  const long long F = static_cast<long long>(face_count()) + 1;  // plus outer face
  if (V - E + F != 2) fail("arrangement: Euler relation violated");
}

void Arrangement::dump(std::ostream& os) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    os << "v " << i << ' ' << format_scalar(vertices_[i].x) << ' '
       << format_scalar(vertices_[i].y) << '\n';
  std::set<std::tuple<int, int, int>> edges;
  for (const Face& f : faces_) {
    const std::size_t m = f.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int u = f.cycle[i], v = f.cycle[(i + 1) % m];
      edges.emplace(std::min(u, v), std::max(u, v), f.support[i]);
    }
  }
  for (const auto& [u, v, s] : edges) os << "e " << u << ' ' << v << ' ' << s << '\n';
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    os << "f " << i;
    for (int v : faces_[i].cycle) os << ' ' << v;
    os << '\n';
  }
}

RegionSet::RegionSet(Arrangement arr) : arr_(std::move(arr)) {
  const auto& verts = arr_.vertices();
  for (std::size_t f = 0; f < arr_.faces().size(); ++f) {
    const auto& face = arr_.faces()[f];
    const std::size_t m = face.cycle.size();
    // Fan apex: lexicographically smallest vertex of the face.
    std::size_t s = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (point_less(verts[static_cast<std::size_t>(face.cycle[i])],
                     verts[static_cast<std::size_t>(face.cycle[s])]))
        s = i;
    for (std::size_t j = 0; j + 2 < m; ++j) {
      Region r;
      r.parent_face = static_cast<int>(f);
      const std::size_t p1 = (s + j + 1) % m, p2 = (s + j + 2) % m;
      r.v = {face.cycle[s], face.cycle[p1], face.cycle[p2]};
      r.sup = {j == 0 ? face.support[s] : kChordSupport, face.support[p1],
               j + 3 == m ? face.support[(s + m - 1) % m] : kChordSupport};
      regions_.push_back(r);
    }
  }
  // Region-count bound: t <= 2k^2 whenever k >= 2 sample lines are present
  // (a lone line yields 4 box-clipped triangles, above the bound; recursion
  // always samples k >= 4).
  const std::size_t k = arr_.lines().size();
  if (k >= 2 && regions_.size() > 2 * k * k)
    throw std::logic_error("RegionSet: region count exceeds 2k^2");
}

Triangle RegionSet::triangle(std::size_t region_id) const {
  const Region& r = regions_[region_id];
  const auto& verts = arr_.vertices();
  return Triangle{{verts[static_cast<std::size_t>(r.v[0])],
                   verts[static_cast<std::size_t>(r.v[1])],
                   verts[static_cast<std::size_t>(r.v[2])]}};
}

std::vector<std::size_t> RegionSet::locate(const Point& x) const {
  if (!arr_.clip_box().contains(x)) throw std::out_of_range("locate: point outside clip box");
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < regions_.size(); ++i)
    if (classify_point(x, triangle(i)) != Region3::exterior) hits.push_back(i);
  return hits;
}

} // namespace qsep
