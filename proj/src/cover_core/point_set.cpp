#include "coarse/point_set.hpp"

#include <algorithm>
#include <iterator>

namespace coarse {

PointSet::PointSet(std::vector<PointId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

PointSet PointSet::from_sorted(std::vector<PointId> ids) {
  PointSet s;
  s.ids_ = std::move(ids);
  return s;
}

PointSet PointSet::interval(PointId first, PointId last) {
  PointSet s;
  if (last < first) return s;
  s.ids_.reserve(static_cast<std::size_t>(last - first) + 1);
  for (PointId x = first;; ++x) {
    s.ids_.push_back(x);
    if (x == last) break;
  }
  return s;
}

PointSet PointSet::universe(std::size_t n) {
  PointSet s;
  s.ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.ids_[i] = static_cast<PointId>(i);
  return s;
}

PointSet PointSet::from_mask(const std::vector<char>& mask) {
  PointSet s;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s.ids_.push_back(static_cast<PointId>(i));
  }
  return s;
}

bool PointSet::contains(PointId x) const { return std::binary_search(ids_.begin(), ids_.end(), x); }

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(std::move(out));
}

PointSet complement(const PointSet& a, std::size_t n) { return set_difference(PointSet::universe(n), a); }

bool is_subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool intersects(const PointSet& a, const PointSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace coarse
