#include <doctest.h>

#include "qsep/arrangement.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace qsep;

namespace {

Line nv(long long a, long long b) { return Line::non_vertical(Scalar(a), Scalar(b)); }
Point pt(long long x, long long y) { return Point{Scalar(x), Scalar(y)}; }

// y = i*x + i^2: pairwise non-parallel, provably no three concurrent
// (the third-line value at a crossing differs by (k-i)(k-j) != 0).
std::vector<Line> moment_lines(int k) {
  std::vector<Line> out;
  for (int i = 0; i < k; ++i) out.push_back(nv(i, static_cast<long long>(i) * i));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("arrangement");

TEST_CASE("clip box strictly contains all crossings") {
  auto box = compute_clip_box({nv(1, 0), nv(-1, 0)}, Scalar(1));
  CHECK(box.strictly_contains(pt(0, 0)));
  CHECK(box.xmax >= 1);

  // Integer coefficients up to 10: x-coordinates of crossings reach 2*N*D^2 = 20.
  auto box10 = compute_clip_box({nv(10, 10), nv(-10, -10), nv(9, -10)}, Scalar(1));
  CHECK(box10.xmax >= 21);
  CHECK(box10.strictly_contains(pt(-20, -190)));  // crossing of first two

  auto single = compute_clip_box({nv(5, 3)}, Scalar(0));
  CHECK(single.xmin < single.xmax);
}

TEST_CASE("face counts: crossing pair, pencil, general position") {
  auto two = Arrangement::build({nv(2, 0), nv(-3, 1)},
                                compute_clip_box({nv(2, 0), nv(-3, 1)}, Scalar(1)));
  CHECK(two.face_count() == 4);
  two.validate();

  Box small = Box::square(Scalar(2));
  auto pencil = Arrangement::build({nv(1, 0), nv(-1, 0), Line::vertical_at(Scalar(0))}, small);
  CHECK(pencil.face_count() == 6);
  pencil.validate();

  auto three = moment_lines(3);
  auto gen = Arrangement::build(three, compute_clip_box(three, Scalar(1)));
  CHECK(gen.face_count() == 7);  // 1 + k + C(k,2)
  gen.validate();
}

TEST_CASE("duplicate lines and out-of-box crossings are rejected") {
  Box box = Box::square(Scalar(2));
  Arrangement arr(box);
  arr.insert_line(nv(0, 0));
  CHECK_THROWS_AS(arr.insert_line(nv(0, 0)), std::invalid_argument);
  // y = x + 10 crosses y = 0 at (-10, 0), outside the +-2 box.
  CHECK_THROWS_AS(arr.insert_line(nv(1, 10)), std::logic_error);
}

TEST_CASE("Euler relation and tiling hold after every insertion") {
  auto ls = moment_lines(6);
  auto box = compute_clip_box(ls, Scalar(1));
  Arrangement arr(box);
  for (const Line& l : ls) {
    arr.insert_line(l);
    arr.validate();  // Euler, convexity, exact area tiling, shared edges
  }
  CHECK(arr.face_count() == 1 + 6 + 15);
}

TEST_CASE("vertices accumulate every incident support") {
  Box small = Box::square(Scalar(2));
  auto pencil = Arrangement::build({nv(1, 0), nv(-1, 0), Line::vertical_at(Scalar(0))}, small);
  // find the central vertex
  int center = -1;
  for (std::size_t i = 0; i < pencil.vertices().size(); ++i)
    if (pencil.vertices()[i] == pt(0, 0)) center = static_cast<int>(i);
  REQUIRE(center >= 0);
  CHECK(pencil.incident_supports(center) == std::vector<int>{0, 1, 2});
}

TEST_CASE("quadrilateral faces split into two triangles; triangles stay") {
  // One horizontal line: both halves are 4-sided -> 2 regions each.
  Box box = Box::square(Scalar(2));
  RegionSet rs(Arrangement::build({nv(0, 0)}, box));
  CHECK(rs.size() == 4);

  // Corner pencil: all six faces are already triangles.
  RegionSet pr(Arrangement::build({nv(1, 0), nv(-1, 0), Line::vertical_at(Scalar(0))}, box));
  CHECK(pr.size() == 6);
}

TEST_CASE("general-position region count matches k^2 + k + 2 and the 2k^2 bound") {
  auto two = moment_lines(2);
  RegionSet rs2(Arrangement::build(two, compute_clip_box(two, Scalar(1))));
  CHECK(rs2.size() == 8);  // tight: 2k^2 = 8

  auto ten = moment_lines(10);
  RegionSet rs10(Arrangement::build(ten, compute_clip_box(ten, Scalar(1))));
  CHECK(rs10.size() == 112);
  CHECK(rs10.size() <= 200);
}

TEST_CASE("regions tile the box exactly and sides sit on their supports") {
  auto ls = moment_lines(5);
  auto box = compute_clip_box(ls, Scalar(1));
  auto arr = Arrangement::build(ls, box);
  RegionSet rs(arr);

  Scalar doubled_total = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    Triangle t = rs.triangle(i);
    doubled_total += doubled_area(t.v[0], t.v[1], t.v[2]);
    const Region& r = rs.regions()[i];
    for (int s = 0; s < 3; ++s) {
      if (r.sup[static_cast<std::size_t>(s)] == kChordSupport) continue;
      Line sup = arr.support_line(r.sup[static_cast<std::size_t>(s)]);
      CHECK(point_on_line(sup, t.v[static_cast<std::size_t>(s)]));
      CHECK(point_on_line(sup, t.v[static_cast<std::size_t>((s + 1) % 3)]));
    }
  }
  CHECK(doubled_total == 2 * box.width() * box.height());
}

TEST_CASE("locate: interior point, shared vertex, outside error") {
  Box box = Box::square(Scalar(2));
  RegionSet rs(Arrangement::build({nv(1, 0), nv(-1, 0), Line::vertical_at(Scalar(0))}, box));

  auto at_center = rs.locate(pt(0, 0));
  CHECK(at_center.size() == 6);  // every sector touches the pencil point

  Scalar half(1, 2);
  auto inside = rs.locate(Point{half, Scalar(0)});
  CHECK(inside.size() == 1);

  CHECK_THROWS_AS((void)rs.locate(pt(5, 5)), std::out_of_range);
}

TEST_CASE("locate agrees with direct sign tests on random points") {
  auto ls = moment_lines(6);
  auto box = compute_clip_box(ls, Scalar(1));
  auto arr = Arrangement::build(ls, box);
  RegionSet rs(arr);

  std::mt19937_64 eng(5);
  std::uniform_int_distribution<long long> dx(-13000, 13000);
  for (int rep = 0; rep < 50; ++rep) {
    Point p{Scalar(dx(eng)), Scalar(dx(eng))};
    if (!box.contains(p)) continue;
    auto hits = rs.locate(p);
    REQUIRE(!hits.empty());
    std::set<std::size_t> hit_set(hits.begin(), hits.end());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      // independent membership: orientation signs against each side
      Triangle t = rs.triangle(i);
      bool in_closed = true;
      for (int s = 0; s < 3; ++s) {
        const Point& u = t.v[static_cast<std::size_t>(s)];
        const Point& v = t.v[static_cast<std::size_t>((s + 1) % 3)];
        const Point& w = t.v[static_cast<std::size_t>((s + 2) % 3)];
        const int side_w = orientation(u, v, w);
        const int side_p = orientation(u, v, p);
        if (side_p != 0 && side_p != side_w) in_closed = false;
      }
      CHECK(in_closed == (hit_set.count(i) > 0));
    }
  }
}

TEST_CASE("debug dump lists vertices, edges, and faces") {
  Box box = Box::square(Scalar(2));
  auto arr = Arrangement::build({nv(0, 0)}, box);
  std::ostringstream os;
  arr.dump(os);
  const std::string text = os.str();
  CHECK(text.find("v 0 ") != std::string::npos);
  CHECK(text.find("\ne ") != std::string::npos);
  CHECK(text.find("\nf 0") != std::string::npos);
}

TEST_SUITE_END();
