#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace coarse {

using PointId = std::uint32_t;

/// Finite set of point ids, stored sorted and duplicate-free.
class PointSet {
 public:
  using const_iterator = std::vector<PointId>::const_iterator;

  PointSet() = default;
  explicit PointSet(std::vector<PointId> ids);
  PointSet(std::initializer_list<PointId> ids) : PointSet(std::vector<PointId>(ids)) {}

  /// Caller guarantees `ids` is strictly increasing.
  static PointSet from_sorted(std::vector<PointId> ids);
  /// {first, first+1, ..., last}; empty when last < first.
  static PointSet interval(PointId first, PointId last);
  static PointSet universe(std::size_t n);
  /// Points i with mask[i] != 0.
  static PointSet from_mask(const std::vector<char>& mask);

  bool contains(PointId x) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  PointId front() const { return ids_.front(); }
  PointId back() const { return ids_.back(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<PointId>& ids() const { return ids_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<PointId> ids_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
/// {0..n-1} minus a.
PointSet complement(const PointSet& a, std::size_t n);
/// a ⊆ b
bool is_subset(const PointSet& a, const PointSet& b);
bool intersects(const PointSet& a, const PointSet& b);

}  // namespace coarse
