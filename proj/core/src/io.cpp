#include "qsep/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qsep {
namespace {

// ---------------------------------------------------------------- writing

void emit_scalar(std::ostream& os, const Scalar& q) { os << format_scalar(q); }

void emit_line(std::ostream& os, const Line& l) {
  if (l.vertical) {
    os << "v ";
    emit_scalar(os, l.x0);
  } else {
    os << "n ";
    emit_scalar(os, l.a);
    os << ' ';
    emit_scalar(os, l.b);
  }
}

void emit_point(std::ostream& os, const Point& p) {
  emit_scalar(os, p.x);
  os << ' ';
  emit_scalar(os, p.y);
}

void emit_segment_record(std::ostream& os, const char* tag, const Segment& s) {
  os << tag << ' ';
  emit_point(os, s.p);
  os << ' ';
  emit_point(os, s.q);
  os << '\n';
}

void emit_triangle_record(std::ostream& os, const char* tag, const Triangle& t) {
  os << tag;
  for (const Point& v : t.v) {
    os << ' ';
    emit_point(os, v);
  }
  os << '\n';
}

void emit_halfplane_record(std::ostream& os, const HalfPlane& h) {
  os << "halfplane ";
  emit_line(os, h.boundary);
  os << ' ' << h.side << '\n';
}

void emit_strip_record(std::ostream& os, const Strip& s) {
  os << "strip ";
  emit_line(os, s.b1);
  os << ' ';
  emit_line(os, s.b2);
  os << '\n';
}

void emit_object_record(std::ostream& os, const CoverObject& obj) {
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Strip>) {
          emit_strip_record(os, o);
        } else if constexpr (std::is_same_v<T, Angle>) {
          os << "angle ";
          emit_line(os, o.b1);
          os << ' ';
          emit_line(os, o.b2);
          os << ' ' << o.s1 << ' ' << o.s2 << '\n';
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          emit_halfplane_record(os, o);
        } else {
          emit_triangle_record(os, "triangle", o);
        }
      },
      obj);
}

// ---------------------------------------------------------------- reading

struct Cursor {
  std::vector<std::string> toks;
  int lineno = 0;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("instance line " + std::to_string(lineno) + ": " + what);
  }

  const std::string& next(const char* what) {
    if (i >= toks.size()) fail(std::string("missing ") + what);
    return toks[i++];
  }

  Scalar next_scalar(const char* what) {
    const std::string& t = next(what);
    auto q = parse_scalar(t);
    if (!q) fail(std::string("bad rational '") + t + "' for " + what);
    return *q;
  }

  long long next_ll(const char* what) {
    const std::string& t = next(what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(std::string("bad integer '") + t + "' for " + what);
    }
  }

  std::uint64_t next_u64(const char* what) {
    const std::string& t = next(what);
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(t, &used);
      if (used != t.size() || t[0] == '-') throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(std::string("bad unsigned integer '") + t + "' for " + what);
    }
  }

  int next_sign(const char* what) {
    long long v = next_ll(what);
    if (v != 1 && v != -1) fail(std::string(what) + " must be 1 or -1");
    return static_cast<int>(v);
  }

  void done() const {
    if (i != toks.size()) {
      throw std::invalid_argument("instance line " + std::to_string(lineno) +
                                  ": trailing tokens after '" + toks[i] + "'");
    }
  }
};

Line read_line(Cursor& c) {
  const std::string& kind = c.next("line kind (n|v)");
  if (kind == "v") return Line::vertical_at(c.next_scalar("vertical abscissa"));
  if (kind == "n") {
    Scalar a = c.next_scalar("slope");
    Scalar b = c.next_scalar("intercept");
    return Line::non_vertical(a, b);
  }
  c.fail("line kind must be 'n' or 'v', got '" + kind + "'");
}

Point read_point(Cursor& c) {
  Scalar x = c.next_scalar("x");
  Scalar y = c.next_scalar("y");
  return Point{x, y};
}

Segment read_segment(Cursor& c) {
  Point p = read_point(c);
  Point q = read_point(c);
  if (p == q) c.fail("degenerate segment (equal endpoints)");
  return Segment{p, q};
}

Triangle read_triangle(Cursor& c) {
  Triangle t;
  for (int v = 0; v < 3; ++v) t.v[static_cast<std::size_t>(v)] = read_point(c);
  return t;
}

// Non-blank, non-comment lines tokenized on whitespace, with line numbers.
std::vector<Cursor> tokenize(std::istream& in) {
  std::vector<Cursor> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    Cursor c;
    c.lineno = lineno;
    std::string tok;
    while (ls >> tok) c.toks.push_back(tok);
    if (c.toks.empty() || c.toks[0][0] == '#') continue;
    out.push_back(std::move(c));
  }
  return out;
}

// Header key=value field. The writer emits a fixed order; readers accept any.
std::uint64_t header_field(Cursor& c, std::string_view key) {
  const std::string& tok = c.next("header field");
  auto eq = tok.find('=');
  if (eq == std::string::npos || std::string_view(tok).substr(0, eq) != key) {
    c.fail(std::string("expected ") + std::string(key) + "=..., got '" + tok + "'");
  }
  Cursor sub;
  sub.lineno = c.lineno;
  sub.toks.push_back(tok.substr(eq + 1));
  return sub.next_u64(std::string(key).c_str());
}

} // namespace

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "qsep 1 " << problem_token(inst.problem) << " n=" << inst.size()
     << " seed=" << inst.seed << " planted=" << (inst.planted ? 1 : 0)
     << " verified=" << (inst.verified ? 1 : 0) << '\n';
  if (inst.hint) {
    os << "hint ";
    emit_point(os, *inst.hint);
    os << '\n';
  }
  switch (inst.problem) {
    case Problem::point_on_3_lines:
      for (const Line& l : inst.lines) {
        os << "line ";
        emit_line(os, l);
        os << '\n';
      }
      break;
    case Problem::three_points_on_line:
      for (const Point& p : inst.points) {
        os << "point ";
        emit_point(os, p);
        os << '\n';
      }
      break;
    case Problem::general_covering:
      for (const CoverObject& obj : inst.objects) emit_object_record(os, obj);
      break;
    case Problem::strips_cover_box:
      os << "box ";
      emit_scalar(os, inst.box.xmin);
      os << ' ';
      emit_scalar(os, inst.box.xmax);
      os << ' ';
      emit_scalar(os, inst.box.ymin);
      os << ' ';
      emit_scalar(os, inst.box.ymax);
      os << '\n';
      for (const Strip& s : inst.strips) emit_strip_record(os, s);
      break;
    case Problem::triangles_cover_triangle:
      emit_triangle_record(os, "target", inst.target);
      for (const Triangle& t : inst.triangles) emit_triangle_record(os, "triangle", t);
      break;
    case Problem::point_covering:
      os << "threshold " << inst.threshold << '\n';
      for (const HalfPlane& h : inst.halfplanes) emit_halfplane_record(os, h);
      break;
    case Problem::visibility:
      emit_segment_record(os, "terminal", inst.s1);
      emit_segment_record(os, "terminal", inst.s2);
      for (const Segment& s : inst.segments) emit_segment_record(os, "segment", s);
      break;
    case Problem::segment_separator:
      for (const Segment& s : inst.segments) emit_segment_record(os, "segment", s);
      break;
    case Problem::three_sum:
      for (long long v : inst.values) os << "value " << v << '\n';
      break;
  }
  return os.str();
}

Instance parse_instance(std::istream& in) {
  std::vector<Cursor> rows = tokenize(in);
  if (rows.empty()) throw std::invalid_argument("instance line 1: empty input");

  Cursor& h = rows[0];
  if (h.next("magic") != "qsep") h.fail("expected 'qsep' magic");
  if (h.next("format version") != "1") h.fail("unsupported format version");
  const std::string& tok = h.next("problem token");
  auto prob = problem_from_token(tok);
  if (!prob) h.fail("unknown problem '" + tok + "'");
  Instance inst;
  inst.problem = *prob;
  std::uint64_t n = header_field(h, "n");
  inst.seed = header_field(h, "seed");
  inst.planted = header_field(h, "planted") != 0;
  inst.verified = header_field(h, "verified") != 0;
  h.done();

  std::size_t row = 1;
  if (row < rows.size() && !rows[row].toks.empty() && rows[row].toks[0] == "hint") {
    Cursor& c = rows[row++];
    c.next("record tag");
    inst.hint = read_point(c);
    c.done();
  }
  auto take = [&](const char* tag) -> Cursor& {
    if (row >= rows.size()) {
      throw std::invalid_argument("instance line " + std::to_string(rows.back().lineno) +
                                  ": unexpected end of input, expected '" + tag + "' record");
    }
    Cursor& c = rows[row++];
    const std::string& got = c.next("record tag");
    if (got != tag) c.fail(std::string("expected '") + tag + "' record, got '" + got + "'");
    return c;
  };

  switch (inst.problem) {
    case Problem::point_on_3_lines:
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("line");
        inst.lines.push_back(read_line(c));
        c.done();
      }
      break;
    case Problem::three_points_on_line:
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("point");
        inst.points.push_back(read_point(c));
        c.done();
      }
      break;
    case Problem::general_covering:
      for (std::uint64_t i = 0; i < n; ++i) {
        if (row >= rows.size()) {
          throw std::invalid_argument("instance line " + std::to_string(rows.back().lineno) +
                                      ": unexpected end of input, expected an object record");
        }
        Cursor& c = rows[row++];
        const std::string& tag = c.next("object tag");
        if (tag == "strip") {
          Line b1 = read_line(c);
          Line b2 = read_line(c);
          inst.objects.emplace_back(Strip{b1, b2});
        } else if (tag == "angle") {
          Line b1 = read_line(c);
          Line b2 = read_line(c);
          int sa = c.next_sign("first selector");
          int sb = c.next_sign("second selector");
          inst.objects.emplace_back(Angle{b1, b2, sa, sb});
        } else if (tag == "halfplane") {
          Line b = read_line(c);
          int side = c.next_sign("side");
          inst.objects.emplace_back(HalfPlane{b, side});
        } else if (tag == "triangle") {
          inst.objects.emplace_back(read_triangle(c));
        } else {
          c.fail("expected strip|angle|halfplane|triangle record, got '" + tag + "'");
        }
        c.done();
      }
      break;
    case Problem::strips_cover_box: {
      Cursor& b = take("box");
      inst.box.xmin = b.next_scalar("xmin");
      inst.box.xmax = b.next_scalar("xmax");
      inst.box.ymin = b.next_scalar("ymin");
      inst.box.ymax = b.next_scalar("ymax");
      b.done();
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("strip");
        Line b1 = read_line(c);
        Line b2 = read_line(c);
        inst.strips.push_back(Strip{b1, b2});
        c.done();
      }
      break;
    }
    case Problem::triangles_cover_triangle: {
      Cursor& t = take("target");
      inst.target = read_triangle(t);
      t.done();
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("triangle");
        inst.triangles.push_back(read_triangle(c));
        c.done();
      }
      break;
    }
    case Problem::point_covering: {
      Cursor& t = take("threshold");
      inst.threshold = t.next_u64("threshold");
      t.done();
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("halfplane");
        Line b = read_line(c);
        int side = c.next_sign("side");
        inst.halfplanes.push_back(HalfPlane{b, side});
        c.done();
      }
      break;
    }
    case Problem::visibility: {
      Cursor& a = take("terminal");
      inst.s1 = read_segment(a);
      a.done();
      Cursor& b = take("terminal");
      inst.s2 = read_segment(b);
      b.done();
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("segment");
        inst.segments.push_back(read_segment(c));
        c.done();
      }
      break;
    }
    case Problem::segment_separator:
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("segment");
        inst.segments.push_back(read_segment(c));
        c.done();
      }
      break;
    case Problem::three_sum:
      for (std::uint64_t i = 0; i < n; ++i) {
        Cursor& c = take("value");
        inst.values.push_back(c.next_ll("value"));
        c.done();
      }
      break;
  }
  if (row != rows.size()) {
    rows[row].i = 0;
    rows[row].fail("unexpected extra record '" + rows[row].toks[0] + "'");
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace qsep
