#include "qsep/instance.hpp"

#include "qsep/reductions.hpp"

#include <sstream>
#include <stdexcept>

namespace qsep {

std::string_view problem_token(Problem p) {
  switch (p) {
    case Problem::point_on_3_lines: return "point-on-3-lines";
    case Problem::three_points_on_line: return "3-points-on-line";
    case Problem::general_covering: return "general-covering";
    case Problem::strips_cover_box: return "strips-cover-box";
    case Problem::triangles_cover_triangle: return "triangles-cover-triangle";
    case Problem::point_covering: return "point-covering";
    case Problem::visibility: return "visibility";
    case Problem::segment_separator: return "segment-separator";
    case Problem::three_sum: return "3sum";
  }
  throw std::logic_error("unknown problem tag");
}

std::optional<Problem> problem_from_token(std::string_view token) {
  for (Problem p : kAllProblems) {
    if (problem_token(p) == token) return p;
  }
  return std::nullopt;
}

std::size_t problem_min_n(Problem p) {
  switch (p) {
    case Problem::point_on_3_lines:
    case Problem::three_points_on_line:
    case Problem::three_sum: return 3;  // a witness needs three entries
    case Problem::segment_separator: return 2;  // one segment per side
    default: return 1;
  }
}

std::size_t Instance::size() const {
  switch (problem) {
    case Problem::point_on_3_lines: return lines.size();
    case Problem::three_points_on_line: return points.size();
    case Problem::general_covering: return objects.size();
    case Problem::strips_cover_box: return strips.size();
    case Problem::triangles_cover_triangle: return triangles.size();
    case Problem::point_covering: return halfplanes.size();
    case Problem::visibility:
    case Problem::segment_separator: return segments.size();
    case Problem::three_sum: return values.size();
  }
  throw std::logic_error("unknown problem tag");
}

SolveOutcome solve_instance(const Instance& inst, const SolveOptions& opt_in, Rng& rng,
                            CostLedger& ledger) {
  SolveOptions opt = opt_in;
  if (!opt.witness_hint && inst.hint) opt.witness_hint = inst.hint;
  SolveOutcome out;
  switch (inst.problem) {
    case Problem::point_on_3_lines: {
      auto r = solve_point_on_3_lines(inst.lines, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::three_points_on_line: {
      auto r = solve_3_points_on_line(inst.points, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::general_covering: {
      auto r = solve_general_covering(
          inst.objects, [](const Point&) { return true; }, {}, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::strips_cover_box: {
      auto r = solve_strips_cover_box(inst.strips, inst.box, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::triangles_cover_triangle: {
      auto r = solve_triangles_cover_triangle(inst.triangles, inst.target, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::point_covering: {
      auto r = solve_point_covering(inst.halfplanes, inst.threshold, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::visibility: {
      auto r = solve_visibility_between_segments(inst.segments, inst.s1, inst.s2, opt, rng,
                                                 ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::segment_separator: {
      auto r = solve_segment_separator(inst.segments, opt, rng, ledger);
      if (r) out = {true, *r};
      break;
    }
    case Problem::three_sum: {
      auto r = solve_3sum(inst.values, opt.quantum, ledger);
      if (r) out = {true, *r};
      break;
    }
  }
  return out;
}

OracleStatus oracle_instance(const Instance& inst) {
  switch (inst.problem) {
    case Problem::point_on_3_lines: return oracle_point_on_3_lines(inst.lines).status;
    case Problem::three_points_on_line: return oracle_3_points_on_line(inst.points).status;
    case Problem::general_covering: return oracle_general_covering(inst.objects).status;
    case Problem::strips_cover_box: return oracle_box_uncovered(inst.strips, inst.box).status;
    case Problem::triangles_cover_triangle:
      return oracle_triangle_uncovered(inst.triangles, inst.target).status;
    case Problem::point_covering:
      return oracle_depth_point(inst.halfplanes, inst.threshold).status;
    case Problem::visibility: return oracle_visibility(inst.segments, inst.s1, inst.s2).status;
    case Problem::segment_separator: return oracle_separator(inst.segments).status;
    case Problem::three_sum: return oracle_3sum(inst.values).status;
  }
  throw std::logic_error("unknown problem tag");
}

namespace {

std::string point_text(const Point& p) {
  return "(" + format_scalar_short(p.x) + ", " + format_scalar_short(p.y) + ")";
}

std::string line_text(const Line& l) {
  if (l.vertical) return "x = " + format_scalar_short(l.x0);
  std::string out = "y = " + format_scalar_short(l.a) + "x";
  if (sign(l.b) >= 0) {
    out += " + " + format_scalar_short(l.b);
  } else {
    out += " - " + format_scalar_short(-l.b);
  }
  return out;
}

} // namespace

std::string describe_outcome(const Instance& inst, const SolveOutcome& out) {
  if (!out.found) return "none";
  std::ostringstream os;
  switch (inst.problem) {
    case Problem::point_on_3_lines: {
      const auto& w = std::get<TripleWitness>(out.witness);
      os << "lines " << w.indices[0] << " " << w.indices[1] << " " << w.indices[2]
         << " concurrent at " << point_text(w.point);
      break;
    }
    case Problem::three_points_on_line: {
      const auto& ix = std::get<std::array<std::size_t, 3>>(out.witness);
      os << "points " << ix[0] << " " << ix[1] << " " << ix[2] << " collinear";
      break;
    }
    case Problem::general_covering:
    case Problem::strips_cover_box:
    case Problem::triangles_cover_triangle:
      os << "uncovered point " << point_text(std::get<Point>(out.witness));
      break;
    case Problem::point_covering:
      os << "point " << point_text(std::get<Point>(out.witness)) << " in >= "
         << inst.threshold << " half-planes";
      break;
    case Problem::visibility:
      os << "sight line " << line_text(std::get<Line>(out.witness));
      break;
    case Problem::segment_separator:
      os << "separator " << line_text(std::get<Line>(out.witness));
      break;
    case Problem::three_sum: {
      const auto& w = std::get<ThreeSumWitness>(out.witness);
      os << "values " << w.values[0] << " + " << w.values[1] << " + " << w.values[2]
         << " = 0 at positions " << w.indices[0] << " " << w.indices[1] << " " << w.indices[2];
      break;
    }
  }
  return os.str();
}

} // namespace qsep
