#pragma once

#include "qsep/instance.hpp"

#include <iosfwd>
#include <string>

namespace qsep {

// Line-oriented exact text format, version 1. Blank lines and lines starting
// with '#' are ignored when reading; the writer never emits them.
//
//   header:  qsep 1 <problem-token> n=<count> seed=<u64> planted=<0|1> verified=<0|1>
//   hint:    optional "hint Q Q" record directly after the header — the
//            embedded witness point of a planted construction
//   records: one per line, in this order —
//     point-on-3-lines          n x  "line L"
//     3-points-on-line          n x  "point Q Q"
//     general-covering          n x  "strip L L" | "angle L L s1 s2" |
//                                    "halfplane L side" | "triangle Q Q Q Q Q Q"
//     strips-cover-box          "box Q Q Q Q" (xmin xmax ymin ymax), then n x "strip L L"
//     triangles-cover-triangle  "target Q Q Q Q Q Q", then n x "triangle Q Q Q Q Q Q"
//     point-covering            "threshold U", then n x "halfplane L side"
//     visibility                2 x "terminal Q Q Q Q" (segment endpoints; first
//                               record is s1, second s2), then n x "segment Q Q Q Q"
//     segment-separator         n x "segment Q Q Q Q"
//     3sum                      n x "value I"
//   where L is a line ("n a b" for y = a*x + b, "v x0" for x = x0), Q is an
//   exact rational ("num/den", plain integers accepted on input), s1/s2/side
//   are the +1/-1 orientation selectors, U an unsigned and I a signed integer.
//
// parse_* throw std::invalid_argument with the offending line number;
// load/save throw std::runtime_error when the file cannot be opened.
// parse_instance(serialize_instance(x)) == x holds exactly.

std::string serialize_instance(const Instance& inst);

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

} // namespace qsep
