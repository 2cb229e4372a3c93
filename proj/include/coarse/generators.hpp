#pragma once

#include <cstddef>
#include <cstdint>

#include "coarse/cover.hpp"
#include "coarse/metric.hpp"

namespace coarse {

/// Points 0..n-1, gauge = adjacent pairs. Throws InputError for n < 2.
FiniteCoarseSpace gen_line(std::size_t n);
/// d(i, j) = |i − j|.
FiniteMetricSpace line_metric(std::size_t n);
/// Disjoint blocks [jL, (j+1)L − 1], the last one clipped.
Cover line_intervals(std::size_t n, std::size_t len);
/// Intervals [js, js + L − 1] with step s = L/2, clipped, stopping at the
/// first one that reaches n − 1. Multiplicity <= 2. L must be even.
Cover line_staggered(std::size_t n, std::size_t len);

/// Point (x, y) has id y·w + x; gauge = unit horizontal and vertical pairs.
/// Throws InputError unless w, h >= 2.
FiniteCoarseSpace gen_grid2d(std::size_t w, std::size_t h);
/// ℓ¹ metric on the grid.
FiniteMetricSpace grid_metric(std::size_t w, std::size_t h);

enum class BrickOverlap {
  /// Bricks partition the grid.
  None,
  /// Neighbouring bricks in a row share their boundary column (multiplicity <= 2).
  Horizontal,
  /// Bricks also share boundary rows with the next row (multiplicity <= 3).
  Full,
};

/// Rows of bw×bh bricks, odd rows shifted by bw/2. Throws InputError unless
/// bw >= 2 is even and bh >= 1.
Cover grid_bricks(std::size_t w, std::size_t h, std::size_t bw, std::size_t bh, BrickOverlap overlap);
/// The canonical brick cover: square bricks of side `len`, Full overlap.
Cover grid_bricks(std::size_t w, std::size_t h, std::size_t len);

/// Seeded 64-bit linear congruential generator (Knuth's MMIX constants).
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform k / 2^bits for k in [0, 2^bits).
  Rational unit(unsigned bits = 20);

 private:
  std::uint64_t state_;
};

struct GeometricSpace {
  FiniteCoarseSpace space;
  FiniteMetricSpace metric;
  /// Point coordinates in [0, 1)².
  std::vector<std::pair<Rational, Rational>> points;
};

/// n distinct points in the unit square with dyadic coordinates drawn from
/// Lcg(seed), ℓ¹ distances, gauge = pairs at distance <= radius plus singletons
/// for isolated points. Throws InputError unless n >= 1 and radius > 0.
GeometricSpace gen_random_geometric(std::size_t n, const Rational& radius, std::uint64_t seed);

}  // namespace coarse
