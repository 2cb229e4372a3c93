#include "coarse/chain.hpp"

#include <algorithm>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

ChainGraph::ChainGraph(Cover cover) : cover_(std::move(cover)) {}

bool ChainGraph::adjacent(PointId x, PointId y) const {
  for (ElementIndex r : cover_.containing(x)) {
    if (cover_[r].contains(y)) return true;
  }
  return false;
}

std::vector<PointId> ChainGraph::neighbors(PointId x) const {
  std::vector<PointId> out;
  for (ElementIndex r : cover_.containing(x)) out.insert(out.end(), cover_[r].begin(), cover_[r].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ExtNat> ChainGraph::distances_from(const PointSet& sources, std::optional<std::size_t> max_depth) const {
  const std::size_t n = size();
  std::vector<ExtNat> dist(n, ExtNat::infinity());
  std::vector<char> element_done(cover_.size(), 0);
  std::vector<PointId> frontier;
  for (PointId s : sources) {
    if (s >= n) throw InputError("unknown point id " + std::to_string(s));
    dist[s] = 0;
    frontier.push_back(s);
  }
  std::uint64_t depth = 0;
  while (!frontier.empty()) {
    if (max_depth && depth >= *max_depth) break;
    std::vector<PointId> next;
    for (PointId x : frontier) {
      for (ElementIndex r : cover_.containing(x)) {
        if (element_done[r]) continue;
        element_done[r] = 1;
        for (PointId y : cover_[r]) {
          if (dist[y].is_infinite()) {
            dist[y] = depth + 1;
            next.push_back(y);
          }
        }
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return dist;
}

std::vector<ExtNat> ChainGraph::indices_into(const PointSet& v) const {
  const std::size_t n = size();
  std::vector<char> inside(n, 0);
  for (PointId x : v) {
    if (x >= n) throw InputError("unknown point id " + std::to_string(x));
    inside[x] = 1;
  }
  std::vector<ExtNat> index(n, ExtNat(0));
  for (PointId x : v) index[x] = ExtNat::infinity();

  // Layer 1: points of V sharing an element with a point outside V.
  std::vector<char> element_done(cover_.size(), 0);
  std::vector<PointId> frontier;
  for (PointId x : v) {
    for (ElementIndex r : cover_.containing(x)) {
      if (element_done[r]) continue;
      const PointSet& element = cover_[r];
      const bool leaves = std::any_of(element.begin(), element.end(), [&](PointId y) { return !inside[y]; });
      if (!leaves) continue;
      element_done[r] = 1;
      for (PointId y : element) {
        if (inside[y] && index[y].is_infinite()) {
          index[y] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
  // Remaining layers stay inside V.
  std::uint64_t depth = 1;
  while (!frontier.empty()) {
    std::vector<PointId> next;
    for (PointId x : frontier) {
      for (ElementIndex r : cover_.containing(x)) {
        if (element_done[r]) continue;
        element_done[r] = 1;
        for (PointId y : cover_[r]) {
          if (index[y].is_infinite()) {
            index[y] = depth + 1;
            next.push_back(y);
          }
        }
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return index;
}

ExtNat ChainGraph::diameter(const PointSet& a, std::optional<std::size_t> budget) const {
  ExtNat best = 0;
  for (PointId x : a) {
    const auto dist = distances_from(PointSet::from_sorted({x}), budget);
    for (PointId y : a) {
      if (dist[y] > best) best = dist[y];
      if (best.is_infinite()) return budget ? ExtNat(*budget + 1) : ExtNat::infinity();
    }
  }
  return best;
}

ExtNat chain_index(const Cover& u, PointId x, const PointSet& v) {
  if (x >= u.universe_size()) throw InputError("unknown point id " + std::to_string(x));
  return ChainGraph(u).indices_into(v)[x];
}

ExtNat chain_diameter(const PointSet& a, const Cover& u) { return ChainGraph(u).diameter(a); }

BoundednessCertificate is_uniformly_bounded(const Cover& family, const FiniteCoarseSpace& space, std::size_t budget) {
  if (family.universe_size() != space.size()) throw InputError("family and space have different point sets");
  const ChainGraph gauge(space.gauge());
  BoundednessCertificate cert;
  cert.budget = budget;
  cert.max_diameter = 0;
  for (ElementIndex s = 0; s < family.size(); ++s) {
    const ExtNat d = gauge.diameter(family[s], budget);
    if (d.is_infinite() || d.value() > budget) {
      cert.ok = false;
      cert.worst = s;
      cert.max_diameter = gauge.diameter(family[s]);
      return cert;
    }
    if (!cert.worst || d > cert.max_diameter) {
      cert.max_diameter = d;
      cert.worst = s;
    }
  }
  return cert;
}

}  // namespace coarse
