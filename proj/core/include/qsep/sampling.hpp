#pragma once

#include "qsep/arrangement.hpp"
#include "qsep/ledger.hpp"
#include "qsep/params.hpp"
#include "qsep/rng.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qsep {

// One distinct geometric boundary line in the separation universe. A line can
// back several input objects (each attachment names the owner and, when the
// owner's boundary is only a segment of the line, that segment). Whole-line
// attachments leave `segment` empty; `owner` is -1 for helper lines that
// belong to no classified object.
struct Attachment {
  int owner = -1;
  std::optional<Segment> segment;
};

struct UniverseLine {
  Line line;
  std::vector<Attachment> attachments;
};

enum class CoverClass { none, partial, full };

struct SeparationInput {
  std::vector<UniverseLine> universe;  // pairwise distinct lines
  std::vector<CoverObject> objects;    // empty for pure line problems
  // Object ids (into `objects`) still alive at this recursion level; empty
  // means all of them.
  std::vector<int> active_objects;
  // Lines that join the clip-box computation only, so every candidate
  // witness crossing stays strictly inside the box.
  std::vector<Line> extra_box_lines;
};

struct SeparationConfig {
  std::size_t k = 4;
  double epsilon = 0.1;
  int retry_budget = 3;            // fresh samples allowed after a violation
  std::uint64_t forced_bound = 0;  // test knob: nonzero overrides the threshold
};

struct SeparationResult {
  std::vector<std::uint32_t> sample;  // universe indices, sampled order
  RegionSet regions;
  // Per region id: sorted universe indices whose attachment crosses the
  // closed region (sample lines bounding the region included).
  std::vector<std::vector<std::uint32_t>> crossing_sets;
  // Per region id: active object ids fully covering / partially covering it
  // (covering problems only; parallel to `regions`).
  std::vector<std::vector<int>> full_objects;
  std::vector<std::vector<int>> partial_objects;
  // Points on sampled lines where >= 3 distinct input lines meet.
  std::vector<Point> boundary_witnesses;
  std::uint64_t threshold = 0;
  std::size_t max_crossing = 0;
  int retries = 0;
};

// Raised when every sample within the retry budget violated the size bound.
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classifies one object against a closed triangular region.
CoverClass classify_region(const Triangle& region, const CoverObject& obj);

// Does this universe line materially intersect the closed region (through
// any of its attachments)?
bool entry_crosses_region(const UniverseLine& entry, const Triangle& region);

// Samples k distinct universe lines, builds their clipped subdivision,
// computes per-region crossing sets and covering classifications, scans the
// sampled lines for boundary concurrences, and enforces the crossing-set
// size bound (retrying with fresh samples up to the budget, then throwing
// SizeBoundError). Classical charges: k^2 for the subdivision, n*t for
// crossing sets, |active|*t for classification, k*n for the witness scan.
SeparationResult random_plane_separation(const SeparationInput& in, const SeparationConfig& cfg,
                                         Rng& rng, CostLedger& ledger);

} // namespace qsep
