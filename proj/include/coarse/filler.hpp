#pragma once

#include <cstddef>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/ext_nat.hpp"
#include "coarse/parallel.hpp"
#include "coarse/partition.hpp"
#include "coarse/rational.hpp"
#include "coarse/shrink.hpp"

namespace coarse {

struct FillerParams {
  Rational epsilon;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  Rational delta;

  /// min(ε, 1/(n+1)) / 4.
  Rational term_budget() const;
  /// (2m+1)δ + 3/m + 2(2n+2)²/k + 3/m.
  Rational total_budget() const;
  /// Throws InputError unless k > m >= 1, δ > 0 and every term is below term_budget().
  void validate() const;
};

/// Least m with 3/m < B, least k > m with 2(2n+2)²/k < B, δ = B / (2(2m+1)),
/// where B = min(ε, 1/(n+1)) / 4. Throws InputError unless ε > 0.
FillerParams choose_filler_params(const Rational& epsilon, std::size_t n);

enum class BlendCase { BothFinite, BothInfinite, FirstInfinite, SecondInfinite };

const char* to_string(BlendCase c);

struct BlendFunction {
  std::vector<Rational> alpha;
  std::vector<BlendCase> cases;
  /// p(x) = i_U(x, st^m(A, U)).
  std::vector<ExtNat> p;
  /// q(x) = i_U(x, X \ A).
  std::vector<ExtNat> q;
};

/// α = p / (p + q) when both are finite, 1/2 when both are infinite, 1 when
/// only p is infinite and 0 when only q is. Throws InputError unless m >= 1
/// and A is a nonempty proper subset.
BlendFunction blend_alpha(const PointSet& a, std::size_t m, const Cover& u);

struct Retraction {
  PartitionOfUnity g;
  /// st^m(A, U).
  PointSet region;
  /// anchor[x] = c(x) on the region, x elsewhere.
  std::vector<PointId> anchor;
  /// Weight moved at each point.
  std::vector<Rational> transferred;
  /// max ‖g(x) − f(x)‖₁.
  Rational max_shift;
};

/// Pushes f(x), for x in st^m(A, U), onto the carrier of f(c(x)) where c(x) is
/// the least point of A among those nearest to x. Weight outside that
/// carrier moves to the common vertex of largest weight at c(x).
/// Throws PreconditionError when m·δ >= 1/(8(n+1)), when a carrier over A has
/// more than n + 1 vertices, or when the two carriers at some x are disjoint.
Retraction retract_near_A(const PartitionOfUnity& f, const PointSet& a, std::size_t m, const Cover& u,
                          const Rational& delta, std::size_t n);

struct FillerResult {
  PartitionOfUnity h;
  FillerParams params;
  PUCertificate input_certificate;
  BlendFunction blend;
  Retraction retraction;
  /// Shrinking of the star preimages of f against V.
  Shrinking w;
  PartitionOfUnity phi;
  /// Certificate at min(ε, 1/(n+1)).
  PUCertificate certificate;
  Rational variation_budget;
  bool within_budget = false;
  /// max over A of ‖h(x) − g(x)‖₁.
  Rational max_shift_on_a;
  std::vector<std::size_t> carrier_sizes;
  /// Points whose carrier has at most n + 1 vertices.
  std::size_t skeletal_points = 0;
  /// Points with some h_v(x) >= 1/(n+1).
  std::size_t heavy_points = 0;
};

/// h = α·g + (1 − α)·φ_U^W. Checks that f is a (V, δ)-partition of unity at
/// the chain budget D, that f(A) is n-skeletal, and that V coarsens
/// st^k(U) with multiplicity <= n + 1; throws PreconditionError otherwise.
FillerResult filler(const PartitionOfUnity& f, const PointSet& a, const Cover& u, const Cover& v,
                    const FillerParams& params, const FiniteCoarseSpace& space, std::size_t d, Parallelism par = {});

}  // namespace coarse
