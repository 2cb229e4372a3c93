#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coarse/point_set.hpp"

namespace coarse {

using ElementIndex = std::size_t;

/// Indexed family {V_s} of subsets of {0..N-1}. The index order is the
/// well-order used wherever a construction needs one.
///
/// A Cover value does not force coverage or nonempty elements: shrinking and
/// trimming produce index-aligned families with empty members. Use
/// `validate()` where the full cover invariants are required.
class Cover {
 public:
  Cover() = default;
  /// Throws InputError if an element mentions a point >= universe.
  Cover(std::size_t universe, std::vector<PointSet> elements);

  std::size_t universe_size() const { return universe_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const PointSet& operator[](ElementIndex i) const { return elements_[i]; }
  const std::vector<PointSet>& elements() const { return elements_; }

  /// Indices of the elements containing x, ascending.
  std::span<const ElementIndex> containing(PointId x) const;

  std::optional<PointId> first_uncovered() const;
  bool covers_universe() const { return !first_uncovered().has_value(); }
  std::optional<ElementIndex> first_empty() const;
  bool has_empty_element() const { return first_empty().has_value(); }

  /// Throws InputError unless every point is covered and no element is empty.
  void validate() const;

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.universe_ == b.universe_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<PointSet> elements_;
  // CSR incidence: elements containing point x are
  // incidence_[offsets_[x] .. offsets_[x+1]).
  std::vector<std::size_t> offsets_;
  std::vector<ElementIndex> incidence_;
};

/// Finite stand-in for a coarse space: points 0..N-1 plus a gauge cover whose
/// chain graph measures sizes. A family is uniformly bounded at budget D when
/// each member has gauge chain-diameter <= D.
class FiniteCoarseSpace {
 public:
  /// Throws InputError unless the gauge is a cover of {0..n-1} without empty elements.
  FiniteCoarseSpace(std::size_t n, Cover gauge);

  std::size_t size() const { return n_; }
  const Cover& gauge() const { return gauge_; }

 private:
  std::size_t n_;
  Cover gauge_;
};

/// Number of indices s with x in C_s (duplicates counted per index).
std::size_t multiplicity(const Cover& cover, PointId x);
/// Pointwise multiplicities.
std::vector<std::size_t> multiplicities(const Cover& cover);
std::size_t max_multiplicity(const Cover& cover);

struct RefinementResult {
  /// witness[t] = least index s of the coarse cover with fine[t] ⊆ coarse[s].
  /// Only meaningful when ok().
  std::vector<ElementIndex> witness;
  /// First fine element contained in no coarse element.
  std::optional<ElementIndex> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// Does `fine` refine `coarse`? Throws InputError on mismatched universes.
RefinementResult is_refinement(const Cover& fine, const Cover& coarse);

/// st(A, U): union of the elements of U meeting A.
PointSet star_set(const PointSet& a, const Cover& u);
/// m-fold iterate of star_set on A (m = 0 returns A).
PointSet iterated_star_set(const PointSet& a, const Cover& u, std::size_t m);
/// st(V, U) = {st(V_s, U)}_s, index-aligned with V.
Cover star_cover(const Cover& v, const Cover& u);
/// st^0(U) = U, st^{k+1}(U)_t = st(st^k(U)_t, U): element t is the k-fold
/// set star of U_t. Index set matches U.
Cover iterated_star(const Cover& u, std::size_t k);

}  // namespace coarse
