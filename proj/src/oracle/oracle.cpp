#include "coarse/oracle.hpp"

#include <algorithm>
#include <functional>

#include "coarse/error.hpp"

namespace coarse::oracle {

std::vector<std::vector<char>> adjacency(const Cover& u) {
  const std::size_t n = u.universe_size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : u.elements()) {
    for (PointId x : e) {
      for (PointId y : e) adj[x][y] = 1;
    }
  }
  return adj;
}

std::optional<std::size_t> enumerate_chain_index(const Cover& u, PointId x, const PointSet& v) {
  const std::size_t n = u.universe_size();
  if (n > 10) throw InputError("chain enumeration oracle is limited to 10 points");
  std::vector<char> in_v(n, 0);
  for (PointId y : v) in_v[y] = 1;
  if (!in_v[x]) return 0;
  const auto adj = adjacency(u);
  std::optional<std::size_t> best;
  std::vector<char> on_path(n, 0);
  std::function<void(PointId, std::size_t)> walk = [&](PointId at, std::size_t length) {
    for (PointId y = 0; y < n; ++y) {
      if (y == at || !adj[at][y] || on_path[y]) continue;
      if (!in_v[y]) {
        if (!best || length + 1 < *best) best = length + 1;
        continue;
      }
      on_path[y] = 1;
      walk(y, length + 1);
      on_path[y] = 0;
    }
  };
  on_path[x] = 1;
  walk(x, 0);
  return best;
}

std::size_t count_containing(const Cover& c, PointId x) {
  std::size_t count = 0;
  for (const auto& e : c.elements()) {
    if (std::find(e.begin(), e.end(), x) != e.end()) ++count;
  }
  return count;
}

bool refines(const Cover& fine, const Cover& coarse) {
  for (const auto& f : fine.elements()) {
    const bool inside = std::any_of(coarse.elements().begin(), coarse.elements().end(), [&](const PointSet& c) {
      return std::includes(c.begin(), c.end(), f.begin(), f.end());
    });
    if (!inside) return false;
  }
  return true;
}

std::optional<std::string> shrink_clause_failure(const Cover& u, const Cover& v, const Cover& w) {
  if (w.size() != v.size()) return "W is not index-aligned with V";
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (!std::includes(v[s].begin(), v[s].end(), w[s].begin(), w[s].end())) {
      return "(i) W_" + std::to_string(s) + " is not inside V_" + std::to_string(s);
    }
  }
  if (!refines(u, w)) return "(ii) U does not refine W";
  for (PointId x = 0; x < u.universe_size(); ++x) {
    const std::size_t mu = count_containing(u, x);
    if (count_containing(w, x) > mu) return "(iii) m_W > m_U at point " + std::to_string(x);
    if (count_containing(v, x) <= mu) {
      for (std::size_t s = 0; s < v.size(); ++s) {
        const bool in_v = std::find(v[s].begin(), v[s].end(), x) != v[s].end();
        const bool in_w = std::find(w[s].begin(), w[s].end(), x) != w[s].end();
        if (in_v && !in_w) return "(iv) point " + std::to_string(x) + " missing from W_" + std::to_string(s);
      }
    }
  }
  return std::nullopt;
}

std::vector<char> iterated_star_mask(const std::vector<char>& a, const Cover& u, std::size_t m) {
  std::vector<char> cur = a;
  for (std::size_t step = 0; step < m; ++step) {
    std::vector<char> next = cur;
    for (const auto& e : u.elements()) {
      const bool meets = std::any_of(e.begin(), e.end(), [&](PointId x) { return cur[x] != 0; });
      if (meets) {
        for (PointId x : e) next[x] = 1;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace coarse::oracle
