#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coarse/asdim.hpp"
#include "coarse/document.hpp"
#include "coarse/filler.hpp"
#include "coarse/metric.hpp"

namespace coarse {

struct SpaceSpec {
  enum class Kind { Line, Grid2d, RandomGeometric, Explicit };
  Kind kind = Kind::Explicit;
  std::size_t n = 0;
  std::size_t w = 0;
  std::size_t h = 0;
  Rational radius;
  std::uint64_t seed = 0;
  /// File path for Kind::Explicit.
  std::string path;

  /// "line<N>", "grid<W>x<H>", "rgg<N>:<radius>:<seed>"; anything else is a
  /// space file path.
  static SpaceSpec parse(const std::string& text);
  std::string str() const;
};

struct RealizedSpace {
  SpaceSpec spec;
  FiniteCoarseSpace space;
  /// Kept for random geometric spaces; other kinds build it on request.
  std::optional<FiniteMetricSpace> metric;
};

RealizedSpace realize(const SpaceSpec& spec);
/// Line and grid metrics are generated, random geometric ones stored.
/// Throws InputError for explicit spaces.
FiniteMetricSpace metric_of(const RealizedSpace& space);

/// Generator-backed witness W for build_skeleton_pu at scale k: the smallest
/// interval length (lines) or brick height with width twice the height and
/// Full overlap (grids) passing the hypothesis. Throws InputError for other
/// kinds or when no size works.
Cover auto_witness(const RealizedSpace& space, const Cover& u, std::size_t k, std::size_t n);

/// build_skeleton_pu followed by trim_to_cover of the resulting partition of
/// unity at the same budget.
struct Roundtrip {
  SkeletonPU skeleton;
  TrimResult trim;
};
Roundtrip asdim_roundtrip(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k,
                          std::size_t n, Parallelism par = {});
CertificateDocument to_document(const Roundtrip& r);

/// A non-constant filler instance on a line of n points: V = staggered
/// intervals with step 2k + 1, A = the first n/3 points, f a three-vertex
/// (V, δ)-partition of unity that is 1-skeletal on A and 2-dimensional on a
/// ramp between A and the end of V_1.
struct LineFillerInstance {
  FiniteCoarseSpace space;
  Cover u;
  Cover v;
  PointSet a;
  PartitionOfUnity f;
  std::size_t budget = 0;
};
LineFillerInstance line_filler_instance(std::size_t n, const FillerParams& params);
/// Same spaces and covers with f constant at vertex 0.
LineFillerInstance line_filler_constant(std::size_t n, const FillerParams& params);

struct SweepRow {
  std::size_t k = 0;
  Rational variation;
  Rational bound;
};
/// variation(φ_U^{V_k}, U) for U = adjacent pairs and V_k = staggered
/// intervals of step 2k + 1 on a line of n points; bound = 16/k.
std::vector<SweepRow> line_sweep(std::size_t n, std::size_t k_min, std::size_t k_max, Parallelism par = {});
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace coarse
