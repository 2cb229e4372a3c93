#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/ext_nat.hpp"
#include "coarse/point_set.hpp"

namespace coarse {

/// Chain relation of a cover: x ~ y iff some element contains both (x ~ x
/// for every covered x). Searches run over the point/element incidence, so
/// large elements never get expanded into cliques.
class ChainGraph {
 public:
  explicit ChainGraph(Cover cover);

  const Cover& cover() const { return cover_; }
  std::size_t size() const { return cover_.universe_size(); }

  bool adjacent(PointId x, PointId y) const;
  /// Sorted neighbours of x, x itself included when covered.
  std::vector<PointId> neighbors(PointId x) const;

  /// Shortest chain length from the nearest source; infinity when unreachable.
  /// With `max_depth`, points farther than max_depth are reported as infinity.
  std::vector<ExtNat> distances_from(const PointSet& sources, std::optional<std::size_t> max_depth = {}) const;

  /// i_U(x, V) for every x: the shortest chain from x leaving V.
  /// 0 outside V, infinity where X \ V is unreachable.
  std::vector<ExtNat> indices_into(const PointSet& v) const;

  /// Max pairwise chain distance within A (0 for |A| <= 1).
  /// With `budget`, stops at the first pair farther than the budget and
  /// returns a value > budget (not necessarily the exact diameter).
  ExtNat diameter(const PointSet& a, std::optional<std::size_t> budget = {}) const;

 private:
  Cover cover_;
};

/// i_U(x, V) for a single point.
ExtNat chain_index(const Cover& u, PointId x, const PointSet& v);
/// Diameter of A in the chain graph of U.
ExtNat chain_diameter(const PointSet& a, const Cover& u);

struct BoundednessCertificate {
  std::size_t budget = 0;
  /// Max gauge diameter over the family when ok; otherwise the diameter of
  /// the first offending element.
  ExtNat max_diameter;
  /// Element attaining max_diameter (or the first failing one).
  std::optional<ElementIndex> worst;
  bool ok = true;
};

/// Every element of `family` has gauge chain-diameter <= budget.
/// Empty elements count as diameter 0.
BoundednessCertificate is_uniformly_bounded(const Cover& family, const FiniteCoarseSpace& space, std::size_t budget);

}  // namespace coarse
