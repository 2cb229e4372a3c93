#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coarse/barycentric.hpp"
#include "coarse/cover.hpp"

namespace coarse {

/// Finite simplicial complex on vertices 0..vertex_count-1 with every
/// simplex of at most dimension_cap + 1 vertices.
class SimplicialComplex {
 public:
  using Simplex = std::vector<VertexId>;

  /// Sorts and deduplicates; throws InputError if a simplex is malformed,
  /// exceeds the cap, or a face is missing.
  SimplicialComplex(std::size_t vertex_count, std::size_t dimension_cap, std::vector<Simplex> simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t dimension_cap() const { return dimension_cap_; }
  /// -1 for the empty complex.
  int dimension() const;
  /// All simplices ordered by size, then lexicographically.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t count(std::size_t dim) const;
  /// `simplex` must be sorted.
  bool contains(std::span<const VertexId> simplex) const;

 private:
  std::size_t vertex_count_;
  std::size_t dimension_cap_;
  std::vector<Simplex> simplices_;
};

/// N(V) truncated at dimension d_cap: a set of at most d_cap + 1 indices is a
/// simplex iff the corresponding elements have a common point.
SimplicialComplex nerve(const Cover& v, std::size_t d_cap);

}  // namespace coarse
