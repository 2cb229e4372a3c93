#include "coarse/shrink.hpp"

#include <string>

#include "coarse/error.hpp"

namespace coarse {

Shrinking shrink_with_multiplicity(const Cover& fine, const Cover& coarse) {
  const RefinementResult refinement = is_refinement(fine, coarse);
  if (!refinement.ok()) {
    throw PreconditionError("shrinking requires the first cover to refine the second",
                            "element " + std::to_string(*refinement.counterexample));
  }
  const std::size_t n = coarse.universe_size();
  const auto m_fine = multiplicities(fine);
  const auto m_coarse = multiplicities(coarse);

  std::vector<std::vector<char>> masks(coarse.size());
  auto mark = [&](ElementIndex s, PointId x) {
    if (masks[s].empty()) masks[s].assign(n, 0);
    masks[s][x] = 1;
  };
  for (ElementIndex t = 0; t < fine.size(); ++t) {
    for (PointId x : fine[t]) mark(refinement.witness[t], x);
  }
  for (ElementIndex s = 0; s < coarse.size(); ++s) {
    for (PointId x : coarse[s]) {
      if (m_coarse[x] <= m_fine[x]) mark(s, x);
    }
  }

  Shrinking result;
  std::vector<PointSet> elements;
  elements.reserve(coarse.size());
  for (ElementIndex s = 0; s < coarse.size(); ++s) {
    elements.push_back(masks[s].empty() ? PointSet() : PointSet::from_mask(masks[s]));
    if (elements.back().empty()) result.empty_elements.push_back(s);
  }
  result.cover = Cover(n, std::move(elements));
  result.assignment = refinement.witness;
  return result;
}

}  // namespace coarse
