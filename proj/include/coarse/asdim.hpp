#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/parallel.hpp"
#include "coarse/partition.hpp"

namespace coarse {

struct AsdimPairCertificate {
  std::size_t n = 0;
  /// counts[t] = number of elements of V meeting U_t.
  std::vector<std::size_t> counts;
  /// Least t with the largest count; empty when U has no elements.
  std::optional<ElementIndex> worst;
  bool passed = true;
};

/// Does every element of U meet at most n + 1 elements of V?
/// Throws InputError when the covers live on different point sets.
AsdimPairCertificate check_asdim_pair(const Cover& u, const Cover& v, std::size_t n);

/// Largest space find_witness_bruteforce accepts.
inline constexpr std::size_t kBruteforceLimit = 12;

/// Exhaustive search for V with check_asdim_pair(U, V, n) passing, built from
/// distinct gauge chain-metric balls of diameter <= D. Balls are ordered by
/// decreasing size, then lexicographically; the search repeatedly covers the
/// smallest uncovered point with the next ball in that order and returns the
/// first complete cover found. nullopt means no witness in this family.
/// Throws InputError above kBruteforceLimit points.
std::optional<Cover> find_witness_bruteforce(const FiniteCoarseSpace& space, const Cover& u, std::size_t n,
                                             std::size_t d);

struct SkeletonPU {
  /// star_cover(W, iterated_star(U, k)).
  Cover v;
  PartitionOfUnity f;
  /// Hypothesis check on star_cover(U, iterated_star(U, k)) against W.
  AsdimPairCertificate hypothesis;
  /// chain budget used for condition (c).
  std::size_t declared_budget = 0;
  PUCertificate certificate;
};

/// Budget for the star preimages of build_skeleton_pu: diam(W) + 2(2k+1)·diam(U).
std::size_t skeleton_budget(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k);

/// φ_U^V for V := st(W, st^k(U)), certified as a (U, (2n+2)²/k)-partition of
/// unity into nerve(V, n).
/// Throws InputError unless k >= 1 and W covers the space; throws
/// PreconditionError naming the first element of st(U, st^k(U)) that meets
/// more than n + 1 elements of W.
SkeletonPU build_skeleton_pu(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k,
                             std::size_t n, Parallelism par = {});

struct TrimResult {
  /// V_v = f^{-1}(st v) minus every U-element meeting its complement.
  Cover v;
  /// (st²(U), ∞) check of f, conditions (b) and (c).
  PUCertificate hypothesis;
  AsdimPairCertificate check;
};

/// Trims the star preimages of f to an asdim witness for U at level n.
/// Throws PreconditionError when f is not a (st²(U), ∞)-partition of unity
/// at the given budget or has a carrier with more than n + 1 vertices.
TrimResult trim_to_cover(const PartitionOfUnity& f, const Cover& u, std::size_t n, const DiameterBudget& budget,
                         Parallelism par = {});

}  // namespace coarse
