#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarse/barycentric.hpp"
#include "coarse/chain.hpp"
#include "coarse/complex.hpp"
#include "coarse/cover.hpp"
#include "coarse/parallel.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// A map X -> Δ(S) given pointwise; g_v(x) = f(x)(v).
class PartitionOfUnity {
 public:
  /// Throws InputError if a weight names a vertex >= vertex_count, or if a
  /// target complex is given and some carrier is not one of its simplices.
  PartitionOfUnity(std::size_t vertex_count, std::vector<BarycentricPoint> values,
                   std::optional<SimplicialComplex> target = std::nullopt);

  std::size_t size() const { return values_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  const BarycentricPoint& operator[](PointId x) const { return values_[x]; }
  const std::vector<BarycentricPoint>& values() const { return values_; }
  const std::optional<SimplicialComplex>& target() const { return target_; }
  std::size_t max_carrier_size() const;

  friend bool operator==(const PartitionOfUnity& a, const PartitionOfUnity& b) {
    return a.vertex_count_ == b.vertex_count_ && a.values_ == b.values_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<BarycentricPoint> values_;
  std::optional<SimplicialComplex> target_;
};

struct VariationResult {
  Rational value;
  /// Lexicographically least pair x < y in a common element attaining the
  /// maximum; empty when no element has two points.
  std::optional<std::pair<PointId, PointId>> pair;
};

/// max over pairs {x, y} inside one element of U of dist(values[x], values[y]).
template <class Value, class Distance>
VariationResult variation_of(std::span<const Value> values, const Cover& u, Distance&& dist, Parallelism par = {}) {
  std::vector<VariationResult> partial(std::max<std::size_t>(1, std::min(par.threads, u.size())));
  auto better = [](const VariationResult& a, const VariationResult& b) {
    // true iff a should replace b
    if (!a.pair) return false;
    if (!b.pair) return true;
    if (a.value != b.value) return a.value > b.value;
    return *a.pair < *b.pair;
  };
  parallel_chunks(u.size(), par, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    VariationResult best;
    for (std::size_t t = begin; t < end; ++t) {
      const auto& ids = u[t].ids();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          Rational d = dist(values[ids[i]], values[ids[j]]);
          const auto pair = std::make_pair(ids[i], ids[j]);
          if (!best.pair || d > best.value) {
            best.value = std::move(d);
            best.pair = pair;
          } else if (d == best.value && pair < *best.pair) {
            best.pair = pair;
          }
        }
      }
    }
    partial[chunk] = std::move(best);
  });
  VariationResult best;
  for (auto& p : partial) {
    if (better(p, best)) best = std::move(p);
  }
  return best;
}

/// U-variation of f in the ℓ¹ metric of Δ(S).
VariationResult variation(const PartitionOfUnity& f, const Cover& u, Parallelism par = {});
/// U-variation of a real-valued function, |p(x) − p(y)|.
VariationResult scalar_variation(std::span<const Rational> values, const Cover& u);

/// {x : f(x)(v) > 0}. Throws InputError for an unknown vertex.
PointSet star_preimage(const PartitionOfUnity& f, VertexId v);
/// Star preimages of every vertex, indexed by vertex (members may be empty).
Cover star_preimage_cover(const PartitionOfUnity& f);

/// φ_U^V. For each x, i_s = i_U(x, V_s); weights i_s / Σ i_t when all are
/// finite, otherwise 1/k on the k infinite indices. Target complex is
/// nerve(V, d_cap), d_cap defaulting to max multiplicity − 1.
/// Throws InputError unless V covers the space.
PartitionOfUnity barycentric_map(const Cover& u, const Cover& v, std::optional<std::size_t> d_cap = std::nullopt,
                                 Parallelism par = {});

/// Size measure used by condition (c) of a partition-of-unity certificate.
struct DiameterBudget {
  /// "chain" or "metric"; recorded in certificates.
  std::string measure;
  ExtRational budget;
  /// Diameter of a point set under the chosen measure.
  std::function<ExtRational(const PointSet&)> diameter;
};

DiameterBudget chain_budget(const FiniteCoarseSpace& space, std::size_t budget);

struct PUCertificate {
  ExtRational epsilon = ExtRational::infinity();
  VariationResult variation;
  /// (a) variation < epsilon; vacuous for epsilon = infinity.
  bool variation_ok = false;

  /// (b) coarsening_witness[t] = least vertex v with f_v > 0 on all of U_t.
  std::vector<VertexId> coarsening_witness;
  std::optional<ElementIndex> coarsening_counterexample;
  bool coarsening_ok = false;

  /// (c) star preimages are bounded.
  std::string diameter_measure;
  ExtRational diameter_budget = ExtRational::infinity();
  ExtRational max_star_diameter = 0;
  std::optional<VertexId> widest_vertex;
  bool bounded_ok = false;

  bool passed() const { return variation_ok && coarsening_ok && bounded_ok; }
};

/// Checks that f is a (U, ε)-partition of unity at the given size budget.
PUCertificate certify_pu(const PartitionOfUnity& f, const Cover& u, const ExtRational& epsilon,
                         const DiameterBudget& budget, Parallelism par = {});
PUCertificate certify_pu(const PartitionOfUnity& f, const Cover& u, const ExtRational& epsilon,
                         const FiniteCoarseSpace& space, std::size_t budget, Parallelism par = {});

/// (n + 1) / m: the bound on var_U(p/q) for p <= q, var_U(p) <= 1,
/// var_U(q) <= n, q >= m. Throws InputError unless m > 0.
Rational quotient_variation_bound(const Rational& m, const Rational& n);

}  // namespace coarse
