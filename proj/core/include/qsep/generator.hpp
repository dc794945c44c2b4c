#pragma once

#include "qsep/geometry.hpp"
#include "qsep/instance.hpp"
#include "qsep/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsep {

struct PlantedTriple {
  std::vector<Line> lines;
  Point witness;                       // lies on exactly the three planted lines
  std::array<std::size_t, 3> indices;  // ascending positions of those lines
};

// n >= 3 lines: three through a random rational point (small denominators),
// the rest integer-coefficient noise kept off the witness, all pairwise
// distinct, in shuffled order. Other concurrences are improbable but not
// excluded; callers needing certainty verify with the reference checker.
PlantedTriple gen_planted_point_on_3_lines(std::size_t n, Rng& rng);

// n distinct integer-coefficient lines. Up to `verify_cap` the result is
// re-checked to be concurrence-free by the reference checker and resampled
// on a hit (throws std::runtime_error after `retries` failures); above the
// cap the coefficient range alone makes accidental triples improbable.
std::vector<Line> gen_unplanted_lines(std::size_t n, Rng& rng, std::size_t verify_cap = 512,
                                      int retries = 10);

// One random instance of any problem, deterministically from the seed.
//
// planted=true embeds a witness: either by a construction that provably
// yields one (collinear triple, zero-sum triple, dodged sight-line
// corridor, ...) or by re-checking against the reference checker; the
// instance is then marked verified. planted=false builds a negative: where
// a construction proves it (parallel covering families, full-height
// visibility wall, one-abscissa segment families, out-of-reach depth
// threshold, strict covering chains) the instance is verified; otherwise it
// is rejection-sampled through the reference checker up to its size cap and
// flagged unverified beyond it.
//
// Throws std::invalid_argument when n < problem_min_n(problem) and
// std::runtime_error when the retry budget cannot realize the requested
// status.
Instance gen_instance(Problem problem, std::size_t n, bool planted, std::uint64_t seed);

} // namespace qsep
