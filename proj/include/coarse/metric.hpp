#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/parallel.hpp"
#include "coarse/partition.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Spaces up to this size get the O(N³) triangle-inequality check on construction.
inline constexpr std::size_t kTriangleCheckLimit = 256;

/// Points 0..N-1 with an exact rational metric.
class FiniteMetricSpace {
 public:
  /// `distances` is the full row-major N×N matrix. Throws InputError unless
  /// it is symmetric, zero exactly on the diagonal, positive elsewhere, and
  /// (for N <= kTriangleCheckLimit) satisfies the triangle inequality.
  FiniteMetricSpace(std::size_t n, std::vector<Rational> distances);

  std::size_t size() const { return n_; }
  const Rational& distance(PointId x, PointId y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }
  bool triangle_checked() const { return triangle_checked_; }
  /// Closed ball {y : d(x, y) <= r}.
  PointSet ball(PointId x, const Rational& r) const;
  /// Max pairwise distance in A (0 for |A| <= 1).
  Rational diameter(const PointSet& a) const;

 private:
  std::size_t n_;
  std::vector<Rational> d_;
  bool triangle_checked_ = false;
};

/// Element x is the closed ball of radius r around x. Throws InputError unless r > 0.
Cover ball_cover(const FiniteMetricSpace& m, const Rational& r);

/// The budget keeps a reference to `m`, which must outlive it.
DiameterBudget metric_budget(const FiniteMetricSpace& m, const Rational& budget);

/// Lexicographically least pair at distance < l that lies in no common
/// element of `cover`; nullopt when the pairwise Lebesgue number is >= l.
std::optional<std::pair<PointId, PointId>> pair_lebesgue_failure(const Cover& cover, const FiniteMetricSpace& m,
                                                                 const Rational& l);

struct DeltaPUCertificate {
  Rational delta;
  /// (i) ‖f(x) − f(y)‖₁ <= δ·d(x, y) + δ for all pairs. The worst pair has the
  /// largest excess ‖f(x) − f(y)‖₁ − δ·d − δ (least pair on ties).
  bool lipschitz_ok = false;
  Rational worst_excess;
  std::optional<std::pair<PointId, PointId>> lipschitz_worst;
  /// (ii) pairs at distance < 1/δ share a vertex; least failing pair.
  bool lebesgue_ok = false;
  std::optional<std::pair<PointId, PointId>> lebesgue_failure;
  /// (iii) star preimages have diameter <= the budget.
  bool bounded_ok = false;
  Rational diameter_budget;
  Rational max_star_diameter;
  std::optional<VertexId> widest_vertex;

  bool passed() const { return lipschitz_ok && lebesgue_ok && bounded_ok; }
};

/// Is f a δ-partition of unity on M with star preimages of diameter <= d_metric?
/// Throws InputError unless δ > 0.
DeltaPUCertificate certify_delta_pu(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                    const Rational& d_metric, Parallelism par = {});

struct ForwardComparison {
  /// f as a δ²/4-partition of unity.
  DeltaPUCertificate hypothesis;
  /// ball_cover(M, 1/δ).
  Cover u;
  /// f as a (U, δ)-partition of unity with metric budget d_metric.
  PUCertificate certificate;
};

/// Throws InputError unless 0 < δ < 2, PreconditionError when f is not a
/// δ²/4-partition of unity.
ForwardComparison comparison_forward(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                     const Rational& d_metric, Parallelism par = {});

struct BackwardComparison {
  Cover u;
  /// f as a (U, δ)-partition of unity.
  PUCertificate hypothesis;
  /// f as a 2δ-partition of unity.
  DeltaPUCertificate certificate;
};

/// U defaults to ball_cover(M, 1/δ). Throws InputError unless 0 < δ < 2;
/// PreconditionError when U has an element of diameter > 2/δ, pairwise
/// Lebesgue number < 1/δ, or f is not a (U, δ)-partition of unity.
BackwardComparison comparison_backward(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                       const Rational& d_metric, std::optional<Cover> u = std::nullopt,
                                       Parallelism par = {});

}  // namespace coarse
