#include "coarse/asdim.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "coarse/chain.hpp"
#include "coarse/error.hpp"

namespace coarse {

AsdimPairCertificate check_asdim_pair(const Cover& u, const Cover& v, std::size_t n) {
  if (u.universe_size() != v.universe_size()) throw InputError("covers over different point sets");
  AsdimPairCertificate cert;
  cert.n = n;
  cert.counts.resize(u.size(), 0);
  // stamp[s] == t + 1 once V_s has been counted for U_t.
  std::vector<std::size_t> stamp(v.size(), 0);
  for (ElementIndex t = 0; t < u.size(); ++t) {
    std::size_t count = 0;
    for (PointId x : u[t]) {
      for (ElementIndex s : v.containing(x)) {
        if (stamp[s] != t + 1) {
          stamp[s] = t + 1;
          ++count;
        }
      }
    }
    cert.counts[t] = count;
    if (!cert.worst || count > cert.counts[*cert.worst]) cert.worst = t;
    if (count > n + 1) cert.passed = false;
  }
  return cert;
}

std::optional<Cover> find_witness_bruteforce(const FiniteCoarseSpace& space, const Cover& u, std::size_t n,
                                             std::size_t d) {
  const std::size_t size = space.size();
  if (size > kBruteforceLimit) {
    throw InputError("brute-force witness search is limited to " + std::to_string(kBruteforceLimit) +
                     " points, got " + std::to_string(size));
  }
  if (u.universe_size() != size) throw InputError("cover and space have different point sets");
  const ChainGraph gauge(space.gauge());

  std::vector<std::vector<ExtNat>> dist(size);
  for (PointId c = 0; c < size; ++c) dist[c] = gauge.distances_from(PointSet{c});

  std::vector<PointSet> balls;
  for (PointId c = 0; c < size; ++c) {
    for (std::size_t r = 0; r < size; ++r) {
      std::vector<PointId> members;
      for (PointId y = 0; y < size; ++y) {
        if (dist[c][y].is_finite() && dist[c][y].value() <= r) members.push_back(y);
      }
      PointSet ball = PointSet::from_sorted(std::move(members));
      const ExtNat diam = gauge.diameter(ball);
      if (diam.is_infinite() || diam.value() > d) break;
      balls.push_back(std::move(ball));
    }
  }
  std::sort(balls.begin(), balls.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());

  std::vector<std::vector<ElementIndex>> meets(balls.size());
  for (std::size_t b = 0; b < balls.size(); ++b) {
    for (ElementIndex t = 0; t < u.size(); ++t) {
      if (intersects(balls[b], u[t])) meets[b].push_back(t);
    }
  }

  std::vector<std::size_t> counts(u.size(), 0);
  std::vector<int> covered(size, 0);
  std::vector<std::size_t> chosen;

  std::function<bool()> search = [&]() -> bool {
    const auto first = std::find(covered.begin(), covered.end(), 0);
    if (first == covered.end()) return true;
    const auto x = static_cast<PointId>(first - covered.begin());
    for (std::size_t b = 0; b < balls.size(); ++b) {
      if (!balls[b].contains(x)) continue;
      bool fits = true;
      for (ElementIndex t : meets[b]) {
        if (counts[t] + 1 > n + 1) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (ElementIndex t : meets[b]) ++counts[t];
      for (PointId y : balls[b]) ++covered[y];
      chosen.push_back(b);
      if (search()) return true;
      chosen.pop_back();
      for (PointId y : balls[b]) --covered[y];
      for (ElementIndex t : meets[b]) --counts[t];
    }
    return false;
  };

  if (!search()) return std::nullopt;
  std::vector<PointSet> elements;
  for (std::size_t b : chosen) elements.push_back(balls[b]);
  return Cover(size, std::move(elements));
}

namespace {

std::size_t finite_max_diameter(const Cover& family, const FiniteCoarseSpace& space, const char* what) {
  const ChainGraph gauge(space.gauge());
  std::size_t best = 0;
  for (ElementIndex t = 0; t < family.size(); ++t) {
    const ExtNat d = gauge.diameter(family[t]);
    if (d.is_infinite()) {
      throw InputError(std::string(what) + " element " + std::to_string(t) + " has infinite gauge diameter");
    }
    best = std::max<std::size_t>(best, d.value());
  }
  return best;
}

}  // namespace

std::size_t skeleton_budget(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k) {
  return finite_max_diameter(w, space, "W") + 2 * (2 * k + 1) * finite_max_diameter(u, space, "U");
}

SkeletonPU build_skeleton_pu(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k,
                             std::size_t n, Parallelism par) {
  if (k == 0) throw InputError("build_skeleton_pu needs k >= 1");
  if (u.universe_size() != space.size() || w.universe_size() != space.size()) {
    throw InputError("covers and space have different point sets");
  }
  if (auto x = w.first_uncovered()) throw InputError("W does not cover point " + std::to_string(*x));

  const Cover star_k = iterated_star(u, k);
  AsdimPairCertificate hypothesis = check_asdim_pair(star_cover(u, star_k), w, n);
  if (!hypothesis.passed) {
    ElementIndex bad = 0;
    while (hypothesis.counts[bad] <= n + 1) ++bad;
    throw PreconditionError("element " + std::to_string(bad) + " of st(U, st^" + std::to_string(k) +
                                "(U)) meets " + std::to_string(hypothesis.counts[bad]) + " elements of W, more than " +
                                std::to_string(n + 1),
                            "element " + std::to_string(bad));
  }

  Cover v = star_cover(w, star_k);
  if (max_multiplicity(v) > n + 1) {
    throw InvariantViolation("st(W, st^k(U)) has multiplicity " + std::to_string(max_multiplicity(v)) + " > " +
                             std::to_string(n + 1));
  }
  PartitionOfUnity f = barycentric_map(u, v, n, par);
  const std::size_t budget = skeleton_budget(space, u, w, k);
  const Rational scale(static_cast<long>(2 * n + 2));
  const Rational epsilon = scale * scale / Rational(static_cast<long>(k));
  PUCertificate cert = certify_pu(f, u, epsilon, space, budget, par);
  return SkeletonPU{std::move(v), std::move(f), std::move(hypothesis), budget, std::move(cert)};
}

TrimResult trim_to_cover(const PartitionOfUnity& f, const Cover& u, std::size_t n, const DiameterBudget& budget,
                         Parallelism par) {
  if (f.size() != u.universe_size()) throw InputError("partition and cover have different point sets");
  PUCertificate hypothesis = certify_pu(f, iterated_star(u, 2), ExtRational::infinity(), budget, par);
  if (!hypothesis.coarsening_ok) {
    const auto t = *hypothesis.coarsening_counterexample;
    throw PreconditionError("no vertex star contains element " + std::to_string(t) + " of st^2(U)",
                            "element " + std::to_string(t));
  }
  if (!hypothesis.bounded_ok) {
    throw PreconditionError("star preimage of vertex " + std::to_string(*hypothesis.widest_vertex) +
                                " has diameter " + hypothesis.max_star_diameter.str() + " over budget " +
                                hypothesis.diameter_budget.str(),
                            "vertex " + std::to_string(*hypothesis.widest_vertex));
  }
  for (PointId x = 0; x < f.size(); ++x) {
    if (f[x].carrier_size() > n + 1) {
      throw PreconditionError("carrier of point " + std::to_string(x) + " has " +
                                  std::to_string(f[x].carrier_size()) + " vertices, more than " +
                                  std::to_string(n + 1),
                              "point " + std::to_string(x));
    }
  }

  const Cover preimages = star_preimage_cover(f);
  const std::size_t size = f.size();
  std::vector<PointSet> trimmed;
  trimmed.reserve(preimages.size());
  std::vector<char> inside(size), removed(size);
  for (ElementIndex v = 0; v < preimages.size(); ++v) {
    std::fill(inside.begin(), inside.end(), 0);
    std::fill(removed.begin(), removed.end(), 0);
    for (PointId x : preimages[v]) inside[x] = 1;
    for (ElementIndex t = 0; t < u.size(); ++t) {
      const bool leaves = std::any_of(u[t].begin(), u[t].end(), [&](PointId x) { return !inside[x]; });
      if (leaves) {
        for (PointId x : u[t]) removed[x] = 1;
      }
    }
    std::vector<PointId> keep;
    for (PointId x : preimages[v]) {
      if (!removed[x]) keep.push_back(x);
    }
    trimmed.push_back(PointSet::from_sorted(std::move(keep)));
  }
  Cover v(size, std::move(trimmed));

  const RefinementResult refines = is_refinement(u, v);
  if (!refines.ok()) {
    throw InvariantViolation("trimmed cover misses element " + std::to_string(*refines.counterexample) + " of U");
  }
  AsdimPairCertificate check = check_asdim_pair(u, v, n);
  if (!check.passed) {
    throw InvariantViolation("trimmed cover fails the asdim check at element " + std::to_string(*check.worst));
  }
  return TrimResult{std::move(v), std::move(hypothesis), std::move(check)};
}

}  // namespace coarse
