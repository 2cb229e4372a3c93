#pragma once

#include <vector>

#include "coarse/cover.hpp"

namespace coarse {

struct Shrinking {
  /// W, index-aligned with the coarse cover. Members may be empty.
  Cover cover;
  /// Indices s with W_s = ∅.
  std::vector<ElementIndex> empty_elements;
  /// assignment[t] = least coarse index containing fine[t].
  std::vector<ElementIndex> assignment;
};

/// Given `fine` refining `coarse` = {V_s}, builds the shrinking W of V with
///   W_s = ⋃{U_t : s is the least index with U_t ⊆ V_s}
///         ∪ {x ∈ V_s : m_V(x) <= m_U(x)}.
/// W_s ⊆ V_s, U refines W, m_W <= m_U pointwise.
/// Throws PreconditionError (witness = offending fine index) when U does not
/// refine V.
Shrinking shrink_with_multiplicity(const Cover& fine, const Cover& coarse);

}  // namespace coarse
