#pragma once

// Hand-rolled random instance generators for the property tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "coarse/chain.hpp"
#include "coarse/cover.hpp"
#include "coarse/rational.hpp"

namespace coarse::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Random nonempty subset of {0..n-1} with about `density` of the points.
inline PointSet random_subset(Rng& rng, std::size_t n, double density) {
  std::vector<PointId> ids;
  for (PointId x = 0; x < n; ++x) {
    if (coin(rng, density)) ids.push_back(x);
  }
  if (ids.empty()) ids.push_back(static_cast<PointId>(uniform(rng, 0, n - 1)));
  return PointSet(std::move(ids));
}

/// Random cover of {0..n-1}: `elements` random subsets, then every uncovered
/// point is added to a random element.
inline Cover random_cover(Rng& rng, std::size_t n, std::size_t elements, double density) {
  std::vector<std::vector<PointId>> sets(elements);
  for (auto& s : sets) {
    for (PointId x = 0; x < n; ++x) {
      if (coin(rng, density)) s.push_back(x);
    }
  }
  std::vector<char> covered(n, 0);
  for (const auto& s : sets) {
    for (PointId x : s) covered[x] = 1;
  }
  for (PointId x = 0; x < n; ++x) {
    if (!covered[x]) sets[uniform(rng, 0, elements - 1)].push_back(x);
  }
  std::vector<PointSet> out;
  for (auto& s : sets) {
    if (s.empty()) s.push_back(static_cast<PointId>(uniform(rng, 0, n - 1)));
    out.emplace_back(std::move(s));
  }
  return Cover(n, std::move(out));
}

/// Random cover whose chain graph is connected: a random spanning tree of
/// pairs plus a few random larger elements.
inline Cover random_connected_cover(Rng& rng, std::size_t n, std::size_t extra) {
  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PointSet> out;
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(PointSet{order[i], order[uniform(rng, 0, i - 1)]});
  }
  if (n == 1) out.push_back(PointSet{0});
  for (std::size_t e = 0; e < extra; ++e) out.push_back(random_subset(rng, n, 0.3));
  std::shuffle(out.begin(), out.end(), rng);
  return Cover(n, std::move(out));
}

/// Random coarse cover V and a fine cover U refining it: every element of U
/// is a random nonempty subset of a random element of V, and each point is
/// reached by at least one U element.
inline std::pair<Cover, Cover> random_refinement_pair(Rng& rng, std::size_t n) {
  Cover v = random_cover(rng, n, uniform(rng, 1, 6), 0.35);
  std::vector<PointSet> fine;
  const std::size_t extra = uniform(rng, 0, 8);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto& host = v[uniform(rng, 0, v.size() - 1)];
    std::vector<PointId> ids;
    for (PointId x : host) {
      if (coin(rng, 0.5)) ids.push_back(x);
    }
    if (ids.empty()) ids.push_back(host.front());
    fine.emplace_back(std::move(ids));
  }
  for (PointId x = 0; x < n; ++x) {
    const auto hosts = v.containing(x);
    const auto& host = v[hosts[uniform(rng, 0, hosts.size() - 1)]];
    std::vector<PointId> ids{x};
    for (PointId y : host) {
      if (y != x && coin(rng, 0.3)) ids.push_back(y);
    }
    fine.emplace_back(std::move(ids));
  }
  std::shuffle(fine.begin(), fine.end(), rng);
  return {Cover(n, std::move(fine)), std::move(v)};
}

/// Random rational in [0, bound] with denominator up to `den`.
inline Rational random_rational(Rng& rng, const Rational& bound, long den = 12) {
  const long d = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(den)));
  const long k = static_cast<long>(uniform(rng, 0, static_cast<std::size_t>(d)));
  return bound * Rational(k, d);
}

/// p, q and m with p <= q, var_U(p) <= 1, var_U(q) <= n and q >= m on a
/// connected cover U. p and q are scaled chain distances from random sources.
struct QuotientTriple {
  Cover u;
  std::vector<Rational> p;
  std::vector<Rational> q;
  Rational m;
  std::size_t n = 0;
};

inline QuotientTriple random_quotient_triple(Rng& rng, std::size_t max_points = 20) {
  const std::size_t size = uniform(rng, 2, max_points);
  Cover u = random_connected_cover(rng, size, uniform(rng, 0, 3));
  const ChainGraph g(u);
  auto sources = [&] {
    return set_union(random_subset(rng, size, 0.2), PointSet{static_cast<PointId>(uniform(rng, 0, size - 1))});
  };
  const auto dp = g.distances_from(sources());
  const auto dr = g.distances_from(sources());
  const Rational scale = random_rational(rng, Rational(1));
  const std::size_t n = uniform(rng, 0, 3);
  const Rational m(static_cast<long>(uniform(rng, 1, 30)), static_cast<long>(uniform(rng, 1, 3)));
  const Rational shift = random_rational(rng, Rational(5));
  const Rational rn(static_cast<unsigned long>(n));
  std::vector<Rational> p(size), q(size);
  Rational pmax(0);
  for (PointId x = 0; x < size; ++x) {
    p[x] = scale * Rational(static_cast<unsigned long>(dp[x].value()));
    pmax = std::max(pmax, p[x]);
  }
  for (PointId x = 0; x < size; ++x) {
    // n = 0 forces q constant.
    q[x] = n == 0 ? std::max(m, pmax) + shift
                  : std::max({m, p[x], rn * Rational(static_cast<unsigned long>(dr[x].value()))}) + shift;
  }
  return QuotientTriple{std::move(u), std::move(p), std::move(q), m, n};
}

}  // namespace coarse::testing
