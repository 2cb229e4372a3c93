#include "coarse/metric.hpp"

#include <algorithm>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<Rational> distances) : n_(n), d_(std::move(distances)) {
  if (d_.size() != n_ * n_) throw InputError("distance matrix has the wrong size");
  for (PointId x = 0; x < n_; ++x) {
    if (!distance(x, x).is_zero()) throw InputError("d(" + std::to_string(x) + ", " + std::to_string(x) + ") != 0");
    for (PointId y = x + 1; y < n_; ++y) {
      const std::string pair = "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
      if (distance(x, y) != distance(y, x)) throw InputError("distance is not symmetric at " + pair);
      if (distance(x, y).sign() <= 0) throw InputError("distance is not positive at " + pair);
    }
  }
  if (n_ <= kTriangleCheckLimit) {
    for (PointId x = 0; x < n_; ++x) {
      for (PointId y = 0; y < n_; ++y) {
        for (PointId z = 0; z < n_; ++z) {
          if (distance(x, z) > distance(x, y) + distance(y, z)) {
            throw InputError("triangle inequality fails for " + std::to_string(x) + ", " + std::to_string(y) +
                             ", " + std::to_string(z));
          }
        }
      }
    }
    triangle_checked_ = true;
  }
}

PointSet FiniteMetricSpace::ball(PointId x, const Rational& r) const {
  if (x >= n_) throw InputError("unknown point " + std::to_string(x));
  std::vector<PointId> out;
  for (PointId y = 0; y < n_; ++y) {
    if (distance(x, y) <= r) out.push_back(y);
  }
  return PointSet::from_sorted(std::move(out));
}

Rational FiniteMetricSpace::diameter(const PointSet& a) const {
  Rational best(0);
  const auto& ids = a.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) best = std::max(best, distance(ids[i], ids[j]));
  }
  return best;
}

Cover ball_cover(const FiniteMetricSpace& m, const Rational& r) {
  if (r.sign() <= 0) throw InputError("ball radius must be positive, got " + r.str());
  std::vector<PointSet> balls;
  balls.reserve(m.size());
  for (PointId x = 0; x < m.size(); ++x) balls.push_back(m.ball(x, r));
  return Cover(m.size(), std::move(balls));
}

DiameterBudget metric_budget(const FiniteMetricSpace& m, const Rational& budget) {
  return DiameterBudget{"metric", ExtRational(budget),
                        [&m](const PointSet& a) -> ExtRational { return m.diameter(a); }};
}

std::optional<std::pair<PointId, PointId>> pair_lebesgue_failure(const Cover& cover, const FiniteMetricSpace& m,
                                                                 const Rational& l) {
  if (cover.universe_size() != m.size()) throw InputError("cover and metric have different point sets");
  for (PointId x = 0; x < m.size(); ++x) {
    const auto here = cover.containing(x);
    for (PointId y = x + 1; y < m.size(); ++y) {
      if (!(m.distance(x, y) < l)) continue;
      const auto there = cover.containing(y);
      auto i = here.begin();
      auto j = there.begin();
      bool shared = false;
      while (i != here.end() && j != there.end()) {
        if (*i == *j) {
          shared = true;
          break;
        }
        if (*i < *j) {
          ++i;
        } else {
          ++j;
        }
      }
      if (!shared) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

namespace {

bool carriers_meet(const BarycentricPoint& a, const BarycentricPoint& b) {
  auto i = a.entries().begin();
  auto j = b.entries().begin();
  while (i != a.entries().end() && j != b.entries().end()) {
    if (i->first == j->first) return true;
    if (i->first < j->first) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct PairScan {
  std::optional<std::pair<PointId, PointId>> worst;
  Rational excess;
  std::optional<std::pair<PointId, PointId>> lebesgue;
};

}  // namespace

DeltaPUCertificate certify_delta_pu(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                    const Rational& d_metric, Parallelism par) {
  if (delta.sign() <= 0) throw InputError("δ must be positive, got " + delta.str());
  if (f.size() != m.size()) throw InputError("partition and metric have different point sets");
  const std::size_t n = m.size();
  const Rational reach = Rational(1) / delta;

  std::vector<PairScan> partial(std::max<std::size_t>(1, std::min(par.threads, n)));
  parallel_chunks(n, par, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    PairScan scan;
    for (std::size_t xi = begin; xi < end; ++xi) {
      const auto x = static_cast<PointId>(xi);
      for (PointId y = x + 1; y < n; ++y) {
        const Rational& d = m.distance(x, y);
        Rational excess = l1_distance(f[x], f[y]) - delta * d - delta;
        if (!scan.worst || excess > scan.excess) {
          scan.excess = std::move(excess);
          scan.worst = std::make_pair(x, y);
        }
        if (!scan.lebesgue && d < reach && !carriers_meet(f[x], f[y])) scan.lebesgue = std::make_pair(x, y);
      }
    }
    partial[chunk] = std::move(scan);
  });

  DeltaPUCertificate cert;
  cert.delta = delta;
  // Chunks cover increasing x ranges, so the first chunk with a candidate
  // holds the lexicographically least one.
  for (auto& scan : partial) {
    if (scan.worst && (!cert.lipschitz_worst || scan.excess > cert.worst_excess)) {
      cert.worst_excess = scan.excess;
      cert.lipschitz_worst = scan.worst;
    }
    if (scan.lebesgue && !cert.lebesgue_failure) cert.lebesgue_failure = scan.lebesgue;
  }
  cert.lipschitz_ok = !cert.lipschitz_worst || cert.worst_excess.sign() <= 0;
  cert.lebesgue_ok = !cert.lebesgue_failure;

  cert.diameter_budget = d_metric;
  cert.bounded_ok = true;
  const Cover preimages = star_preimage_cover(f);
  for (ElementIndex v = 0; v < preimages.size(); ++v) {
    const Rational d = m.diameter(preimages[v]);
    if (!cert.widest_vertex || d > cert.max_star_diameter) {
      cert.max_star_diameter = d;
      cert.widest_vertex = static_cast<VertexId>(v);
    }
    if (d > d_metric) cert.bounded_ok = false;
  }
  return cert;
}

namespace {

void check_delta_range(const Rational& delta) {
  if (delta.sign() <= 0 || !(delta < Rational(2))) throw InputError("comparison needs 0 < δ < 2, got " + delta.str());
}

std::string pair_text(const std::pair<PointId, PointId>& p) {
  return "pair " + std::to_string(p.first) + " " + std::to_string(p.second);
}

}  // namespace

ForwardComparison comparison_forward(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                     const Rational& d_metric, Parallelism par) {
  check_delta_range(delta);
  DeltaPUCertificate hypothesis = certify_delta_pu(f, m, delta * delta / Rational(4), d_metric, par);
  if (!hypothesis.lipschitz_ok) {
    throw PreconditionError("f is not (δ²/4, δ²/4)-Lipschitz", pair_text(*hypothesis.lipschitz_worst));
  }
  if (!hypothesis.lebesgue_ok) {
    throw PreconditionError("star preimages of f have pairwise Lebesgue number below 4/δ²",
                            pair_text(*hypothesis.lebesgue_failure));
  }
  if (!hypothesis.bounded_ok) {
    throw PreconditionError("star preimage of vertex " + std::to_string(*hypothesis.widest_vertex) +
                                " exceeds the metric budget",
                            "vertex " + std::to_string(*hypothesis.widest_vertex));
  }
  Cover u = ball_cover(m, Rational(1) / delta);
  PUCertificate cert = certify_pu(f, u, delta, metric_budget(m, d_metric), par);
  return ForwardComparison{std::move(hypothesis), std::move(u), std::move(cert)};
}

BackwardComparison comparison_backward(const PartitionOfUnity& f, const FiniteMetricSpace& m, const Rational& delta,
                                       const Rational& d_metric, std::optional<Cover> u, Parallelism par) {
  check_delta_range(delta);
  Cover cover = u ? std::move(*u) : ball_cover(m, Rational(1) / delta);
  if (cover.universe_size() != m.size()) throw InputError("cover and metric have different point sets");
  const Rational reach = Rational(1) / delta;
  for (ElementIndex t = 0; t < cover.size(); ++t) {
    if (m.diameter(cover[t]) > Rational(2) * reach) {
      throw PreconditionError("element " + std::to_string(t) + " of U has diameter above 2/δ",
                              "element " + std::to_string(t));
    }
  }
  if (auto bad = pair_lebesgue_failure(cover, m, reach)) {
    throw PreconditionError("U has pairwise Lebesgue number below 1/δ", pair_text(*bad));
  }
  PUCertificate hypothesis = certify_pu(f, cover, delta, metric_budget(m, d_metric), par);
  if (!hypothesis.passed()) {
    std::string witness = "certificate";
    if (!hypothesis.variation_ok) {
      witness = pair_text(*hypothesis.variation.pair);
    } else if (!hypothesis.coarsening_ok) {
      witness = "element " + std::to_string(*hypothesis.coarsening_counterexample);
    } else {
      witness = "vertex " + std::to_string(*hypothesis.widest_vertex);
    }
    throw PreconditionError("f is not a (U, δ)-partition of unity", witness);
  }
  DeltaPUCertificate cert = certify_delta_pu(f, m, Rational(2) * delta, d_metric, par);
  return BackwardComparison{std::move(cover), std::move(hypothesis), std::move(cert)};
}

}  // namespace coarse
