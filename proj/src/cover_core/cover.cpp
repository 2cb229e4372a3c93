#include "coarse/cover.hpp"

#include <algorithm>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

Cover::Cover(std::size_t universe, std::vector<PointSet> elements)
    : universe_(universe), elements_(std::move(elements)) {
  offsets_.assign(universe_ + 1, 0);
  for (ElementIndex s = 0; s < elements_.size(); ++s) {
    for (PointId x : elements_[s]) {
      if (x >= universe_) {
        throw InputError("cover element " + std::to_string(s) + " contains point " + std::to_string(x) +
                         " outside universe of size " + std::to_string(universe_));
      }
      ++offsets_[x + 1];
    }
  }
  for (std::size_t x = 0; x < universe_; ++x) offsets_[x + 1] += offsets_[x];
  incidence_.resize(offsets_[universe_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (ElementIndex s = 0; s < elements_.size(); ++s) {
    for (PointId x : elements_[s]) incidence_[cursor[x]++] = s;
  }
}

std::span<const ElementIndex> Cover::containing(PointId x) const {
  if (x >= universe_) throw InputError("unknown point id " + std::to_string(x));
  return {incidence_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
}

std::optional<PointId> Cover::first_uncovered() const {
  for (std::size_t x = 0; x < universe_; ++x) {
    if (offsets_[x + 1] == offsets_[x]) return static_cast<PointId>(x);
  }
  return std::nullopt;
}

std::optional<ElementIndex> Cover::first_empty() const {
  for (ElementIndex s = 0; s < elements_.size(); ++s) {
    if (elements_[s].empty()) return s;
  }
  return std::nullopt;
}

void Cover::validate() const {
  if (auto x = first_uncovered()) throw InputError("point " + std::to_string(*x) + " is not covered");
  if (auto s = first_empty()) throw InputError("cover element " + std::to_string(*s) + " is empty");
}

FiniteCoarseSpace::FiniteCoarseSpace(std::size_t n, Cover gauge) : n_(n), gauge_(std::move(gauge)) {
  if (gauge_.universe_size() != n_) throw InputError("gauge universe does not match the point count");
  gauge_.validate();
}

std::size_t multiplicity(const Cover& cover, PointId x) { return cover.containing(x).size(); }

std::vector<std::size_t> multiplicities(const Cover& cover) {
  std::vector<std::size_t> m(cover.universe_size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = cover.containing(static_cast<PointId>(x)).size();
  return m;
}

std::size_t max_multiplicity(const Cover& cover) {
  const auto m = multiplicities(cover);
  return m.empty() ? 0 : *std::max_element(m.begin(), m.end());
}

RefinementResult is_refinement(const Cover& fine, const Cover& coarse) {
  if (fine.universe_size() != coarse.universe_size()) throw InputError("covers over different point sets");
  RefinementResult result;
  result.witness.reserve(fine.size());
  for (ElementIndex t = 0; t < fine.size(); ++t) {
    const PointSet& element = fine[t];
    std::optional<ElementIndex> found;
    if (element.empty()) {
      if (!coarse.empty()) found = 0;
    } else {
      for (ElementIndex s : coarse.containing(element.front())) {
        if (is_subset(element, coarse[s])) {
          found = s;
          break;
        }
      }
    }
    if (!found) {
      result.counterexample = t;
      result.witness.clear();
      return result;
    }
    result.witness.push_back(*found);
  }
  return result;
}

namespace {

// Adds to `mask` every point of every element of u meeting `points`;
// appends the newly marked points to `added`.
void expand_once(std::span<const PointId> points, const Cover& u, std::vector<char>& mask,
                 std::vector<char>& element_done, std::vector<PointId>& added) {
  for (PointId x : points) {
    for (ElementIndex r : u.containing(x)) {
      if (element_done[r]) continue;
      element_done[r] = 1;
      for (PointId y : u[r]) {
        if (!mask[y]) {
          mask[y] = 1;
          added.push_back(y);
        }
      }
    }
  }
}

}  // namespace

PointSet star_set(const PointSet& a, const Cover& u) {
  std::vector<char> mask(u.universe_size(), 0);
  std::vector<char> done(u.size(), 0);
  std::vector<PointId> added;
  expand_once(a.ids(), u, mask, done, added);
  return PointSet::from_mask(mask);
}

PointSet iterated_star_set(const PointSet& a, const Cover& u, std::size_t m) {
  if (m == 0) return a;
  std::vector<char> mask(u.universe_size(), 0);
  for (PointId x : a) {
    if (x >= u.universe_size()) throw InputError("unknown point id " + std::to_string(x));
    mask[x] = 1;
  }
  std::vector<char> done(u.size(), 0);
  // star(S) = S ∪ star(frontier), where frontier = points added last round.
  // The first round also needs the elements through points of A.
  std::vector<PointId> frontier(a.begin(), a.end());
  for (std::size_t round = 0; round < m && !frontier.empty(); ++round) {
    std::vector<PointId> added;
    expand_once(frontier, u, mask, done, added);
    frontier = std::move(added);
  }
  return PointSet::from_mask(mask);
}

Cover star_cover(const Cover& v, const Cover& u) {
  if (v.universe_size() != u.universe_size()) throw InputError("covers over different point sets");
  std::vector<PointSet> out;
  out.reserve(v.size());
  for (const PointSet& element : v.elements()) out.push_back(star_set(element, u));
  return Cover(v.universe_size(), std::move(out));
}

Cover iterated_star(const Cover& u, std::size_t k) {
  if (k == 0) return u;
  std::vector<PointSet> out;
  out.reserve(u.size());
  for (const PointSet& element : u.elements()) out.push_back(iterated_star_set(element, u, k));
  return Cover(u.universe_size(), std::move(out));
}

}  // namespace coarse
