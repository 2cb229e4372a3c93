#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coarse/rational.hpp"

namespace coarse {

using VertexId = std::uint32_t;

/// Point of the full complex Δ(S): finitely many positive exact weights
/// summing to exactly 1. Entries are kept sorted by vertex; zero weights are
/// dropped, so the entries are the carrier.
class BarycentricPoint {
 public:
  using Entry = std::pair<VertexId, Rational>;

  /// Merges repeated vertices. Throws InputError on negative weights, an
  /// empty carrier, or a total different from 1.
  explicit BarycentricPoint(std::vector<Entry> weights);

  static BarycentricPoint vertex(VertexId v);

  const std::vector<Entry>& entries() const { return entries_; }
  Rational weight(VertexId v) const;
  std::vector<VertexId> carrier() const;
  std::size_t carrier_size() const { return entries_.size(); }
  bool in_carrier(VertexId v) const;
  VertexId max_vertex() const { return entries_.back().first; }

  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;

 private:
  BarycentricPoint() = default;
  std::vector<Entry> entries_;
};

/// Σ_v |a_v − b_v|.
Rational l1_distance(const BarycentricPoint& a, const BarycentricPoint& b);

/// t·a + (1 − t)·b for t in [0, 1].
BarycentricPoint convex_combination(const Rational& t, const BarycentricPoint& a, const BarycentricPoint& b);

}  // namespace coarse
