#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coarse/cover.hpp"
#include "coarse/shrink.hpp"

// Brute-force reference implementations for tiny instances. They work on
// plain adjacency matrices and vectors and share no code with the chain or
// shrinking implementations they are compared against.
namespace coarse::oracle {

/// adjacency[x][y]: x and y lie in a common element (x == y included when covered).
std::vector<std::vector<char>> adjacency(const Cover& u);

/// Shortest chain from x to a point outside v, by enumerating every simple
/// chain starting at x. 0 when x is outside v, nullopt when no chain leaves v.
/// Throws InputError above 10 points.
std::optional<std::size_t> enumerate_chain_index(const Cover& u, PointId x, const PointSet& v);

/// Count of elements containing x, by scanning.
std::size_t count_containing(const Cover& c, PointId x);

/// fine[t] ⊆ coarse[s] for some s, for every t.
bool refines(const Cover& fine, const Cover& coarse);

/// A first failing clause of the shrinking lemma for W against (U, V), or
/// nullopt if all clauses hold: (i) W_s ⊆ V_s, (ii) U refines W,
/// (iii) m_W <= m_U pointwise, (iv) x ∈ V_s with m_V(x) <= m_U(x) implies x ∈ W_s.
std::optional<std::string> shrink_clause_failure(const Cover& u, const Cover& v, const Cover& w);

/// m-fold star of A by repeated scanning.
std::vector<char> iterated_star_mask(const std::vector<char>& a, const Cover& u, std::size_t m);

}  // namespace coarse::oracle
