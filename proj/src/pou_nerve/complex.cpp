#include "coarse/complex.hpp"

#include <algorithm>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

namespace {

bool simplex_less(const SimplicialComplex::Simplex& a, const SimplicialComplex::Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::size_t dimension_cap,
                                     std::vector<Simplex> simplices)
    : vertex_count_(vertex_count), dimension_cap_(dimension_cap), simplices_(std::move(simplices)) {
  for (auto& s : simplices_) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InputError("simplex must be a nonempty set of distinct vertices");
    }
    if (s.back() >= vertex_count_) throw InputError("simplex vertex " + std::to_string(s.back()) + " out of range");
    if (s.size() > dimension_cap_ + 1) throw InputError("simplex exceeds the dimension cap");
  }
  std::sort(simplices_.begin(), simplices_.end(), simplex_less);
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    Simplex face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::size_t j = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) face[j++] = s[i];
      }
      if (!contains(face)) throw InputError("simplicial complex is not closed under faces");
    }
  }
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::size_t SimplicialComplex::count(std::size_t dim) const {
  return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
                                                [dim](const Simplex& s) { return s.size() == dim + 1; }));
}

bool SimplicialComplex::contains(std::span<const VertexId> simplex) const {
  const Simplex key(simplex.begin(), simplex.end());
  return std::binary_search(simplices_.begin(), simplices_.end(), key, simplex_less);
}

SimplicialComplex nerve(const Cover& v, std::size_t d_cap) {
  const std::size_t m = v.size();
  // Pairwise-intersection graph, from the incidence of each point.
  std::vector<std::vector<ElementIndex>> higher(m);
  for (std::size_t x = 0; x < v.universe_size(); ++x) {
    const auto here = v.containing(static_cast<PointId>(x));
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = i + 1; j < here.size(); ++j) higher[here[i]].push_back(here[j]);
    }
  }
  for (auto& h : higher) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
  }

  std::vector<SimplicialComplex::Simplex> simplices;
  SimplicialComplex::Simplex current;
  // Extends `current` (common points `common`) by larger indices adjacent to
  // its last vertex; the exact intersection decides membership.
  auto expand = [&](auto&& self, const PointSet& common) -> void {
    simplices.push_back(current);
    if (current.size() == d_cap + 1) return;
    for (ElementIndex j : higher[current.back()]) {
      PointSet next = set_intersection(common, v[j]);
      if (next.empty()) continue;
      current.push_back(static_cast<VertexId>(j));
      self(self, next);
      current.pop_back();
    }
  };
  for (ElementIndex s = 0; s < m; ++s) {
    if (v[s].empty()) continue;
    current.assign(1, static_cast<VertexId>(s));
    expand(expand, v[s]);
  }
  return SimplicialComplex(m, d_cap, std::move(simplices));
}

}  // namespace coarse
