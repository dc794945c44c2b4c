#pragma once

#include "qsep/geometry.hpp"

#include <array>
#include <iosfwd>
#include <unordered_map>
#include <vector>

namespace qsep {

// Support ids for face sides: input lines use their insertion index (>= 0);
// the clip-box edges use the negative codes below; fan-triangulation chords
// use kChordSupport.
inline constexpr int kBoxBottom = -1;
inline constexpr int kBoxRight = -2;
inline constexpr int kBoxTop = -3;
inline constexpr int kBoxLeft = -4;
inline constexpr int kChordSupport = -5;

// Returns an axis-parallel square box that strictly contains every pairwise
// intersection point of the given lines. For reduced coefficients with
// numerator magnitudes <= N and denominators <= D, intersection
// x-coordinates are bounded by 2*N*D^2 and y-coordinates by N times that,
// so the half-width is 2*N*D^2*max(N,1) + N + 1 + margin.
Box compute_clip_box(const std::vector<Line>& lines, const Scalar& extra_margin);

// Full subdivision of a clip box by a set of pairwise-distinct lines, built
// by incremental insertion. Faces are convex CCW polygons; adjacent faces
// agree exactly on their shared boundary subdivision.
class Arrangement {
 public:
  struct Face {
    std::vector<int> cycle;    // vertex ids, CCW
    std::vector<int> support;  // support[i] backs the side cycle[i] -> cycle[i+1]
  };

  explicit Arrangement(const Box& box);

  // Inserts one line. Throws std::invalid_argument on a duplicate of a
  // previously inserted line, and std::logic_error if any intersection with
  // an existing line falls outside the clip box.
  void insert_line(const Line& l);

  static Arrangement build(const std::vector<Line>& lines, const Box& box);

  const Box& clip_box() const { return box_; }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }

  // Input-line and box-side ids known to pass through a vertex.
  const std::vector<int>& incident_supports(int vertex_id) const {
    return vertex_supports_[static_cast<std::size_t>(vertex_id)];
  }

  // The geometric line backing a support id (input line or box edge).
  Line support_line(int support_id) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const;  // distinct undirected edges over all faces
  std::size_t face_count() const { return faces_.size(); }  // interior faces only

  // Checks Euler's relation, face convexity/orientation, exact area tiling,
  // and shared-boundary agreement; throws std::logic_error on violation.
  void validate() const;

  // One record per line: vertices, then edges, then face cycles.
  void dump(std::ostream& os) const;

 private:
  int intern_vertex(const Point& p);
  void note_support(int vertex_id, int support_id);

  Box box_;
  std::vector<Line> lines_;
  std::vector<Point> vertices_;
  std::vector<std::vector<int>> vertex_supports_;
  std::unordered_map<Point, int, PointHash> vertex_ids_;
  std::vector<Face> faces_;
};

// A triangulated arrangement: every face fan-triangulated from its
// lexicographically smallest vertex. Regions are triangles; `sup` holds the
// support id of each side (kChordSupport for triangulation chords).
struct Region {
  std::array<int, 3> v;
  std::array<int, 3> sup;  // sup[i] backs the side v[i] -> v[(i+1)%3]
  int parent_face = -1;
};

class RegionSet {
 public:
  explicit RegionSet(Arrangement arr);  // takes ownership

  const Arrangement& arrangement() const { return arr_; }
  const std::vector<Region>& regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }

  Triangle triangle(std::size_t region_id) const;

  // All regions whose closure contains x, ascending by region id. Throws
  // std::out_of_range when x lies outside the clip box.
  std::vector<std::size_t> locate(const Point& x) const;

 private:
  Arrangement arr_;
  std::vector<Region> regions_;
};

} // namespace qsep
