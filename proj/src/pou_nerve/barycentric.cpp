#include "coarse/barycentric.hpp"

#include <algorithm>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

BarycentricPoint::BarycentricPoint(std::vector<Entry> weights) {
  std::sort(weights.begin(), weights.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Rational total;
  for (auto& [v, w] : weights) {
    if (w.sign() < 0) throw InputError("negative barycentric weight " + w.str() + " at vertex " + std::to_string(v));
    total += w;
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += w;
    } else {
      entries_.emplace_back(v, std::move(w));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second.is_zero(); });
  if (entries_.empty()) throw InputError("barycentric point with empty carrier");
  if (total != Rational(1)) throw InputError("barycentric weights sum to " + total.str() + ", not 1");
}

BarycentricPoint BarycentricPoint::vertex(VertexId v) {
  BarycentricPoint p;
  p.entries_.emplace_back(v, Rational(1));
  return p;
}

Rational BarycentricPoint::weight(VertexId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VertexId key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : Rational();
}

bool BarycentricPoint::in_carrier(VertexId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VertexId key) { return e.first < key; });
  return it != entries_.end() && it->first == v;
}

std::vector<VertexId> BarycentricPoint::carrier() const {
  std::vector<VertexId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

Rational l1_distance(const BarycentricPoint& a, const BarycentricPoint& b) {
  Rational sum;
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() || j != b.entries().end()) {
    if (j == b.entries().end() || (i != a.entries().end() && i->first < j->first)) {
      sum += i->second;
      ++i;
    } else if (i == a.entries().end() || j->first < i->first) {
      sum += j->second;
      ++j;
    } else {
      sum += (i->second - j->second).abs();
      ++i;
      ++j;
    }
  }
  return sum;
}

BarycentricPoint convex_combination(const Rational& t, const BarycentricPoint& a, const BarycentricPoint& b) {
  if (t.sign() < 0 || t > Rational(1)) throw InputError("convex weight " + t.str() + " outside [0,1]");
  const Rational s = Rational(1) - t;
  std::vector<BarycentricPoint::Entry> merged;
  merged.reserve(a.carrier_size() + b.carrier_size());
  for (const auto& [v, w] : a.entries()) merged.emplace_back(v, t * w);
  for (const auto& [v, w] : b.entries()) merged.emplace_back(v, s * w);
  return BarycentricPoint(std::move(merged));
}

}  // namespace coarse
