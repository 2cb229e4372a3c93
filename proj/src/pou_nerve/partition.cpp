#include "coarse/partition.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

PartitionOfUnity::PartitionOfUnity(std::size_t vertex_count, std::vector<BarycentricPoint> values,
                                   std::optional<SimplicialComplex> target)
    : vertex_count_(vertex_count), values_(std::move(values)), target_(std::move(target)) {
  if (target_ && target_->vertex_count() != vertex_count_) {
    throw InputError("target complex has a different vertex set");
  }
  for (std::size_t x = 0; x < values_.size(); ++x) {
    const auto& p = values_[x];
    if (p.max_vertex() >= vertex_count_) {
      throw InputError("point " + std::to_string(x) + " has weight on unknown vertex " +
                       std::to_string(p.max_vertex()));
    }
    if (target_ && !target_->contains(p.carrier())) {
      throw InputError("carrier of point " + std::to_string(x) + " is not a simplex of the target complex");
    }
  }
}

std::size_t PartitionOfUnity::max_carrier_size() const {
  std::size_t best = 0;
  for (const auto& p : values_) best = std::max(best, p.carrier_size());
  return best;
}

VariationResult variation(const PartitionOfUnity& f, const Cover& u, Parallelism par) {
  if (f.size() != u.universe_size()) throw InputError("partition and cover have different point sets");
  return variation_of(std::span<const BarycentricPoint>(f.values()), u,
                      [](const BarycentricPoint& a, const BarycentricPoint& b) { return l1_distance(a, b); }, par);
}

VariationResult scalar_variation(std::span<const Rational> values, const Cover& u) {
  if (values.size() != u.universe_size()) throw InputError("function and cover have different point sets");
  return variation_of(values, u, [](const Rational& a, const Rational& b) { return (a - b).abs(); });
}

PointSet star_preimage(const PartitionOfUnity& f, VertexId v) {
  if (v >= f.vertex_count()) throw InputError("unknown vertex " + std::to_string(v));
  std::vector<PointId> out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[static_cast<PointId>(x)].in_carrier(v)) out.push_back(static_cast<PointId>(x));
  }
  return PointSet::from_sorted(std::move(out));
}

Cover star_preimage_cover(const PartitionOfUnity& f) {
  std::vector<std::vector<PointId>> members(f.vertex_count());
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (const auto& [v, w] : f[static_cast<PointId>(x)].entries()) members[v].push_back(static_cast<PointId>(x));
  }
  std::vector<PointSet> elements;
  elements.reserve(members.size());
  for (auto& m : members) elements.push_back(PointSet::from_sorted(std::move(m)));
  return Cover(f.size(), std::move(elements));
}

PartitionOfUnity barycentric_map(const Cover& u, const Cover& v, std::optional<std::size_t> d_cap, Parallelism par) {
  if (u.universe_size() != v.universe_size()) throw InputError("covers over different point sets");
  if (auto x = v.first_uncovered()) {
    throw InputError("barycentric map needs a cover; point " + std::to_string(*x) + " is uncovered");
  }
  const std::size_t n = v.universe_size();
  const ChainGraph graph(u);

  // indices[s][j] = i_U(x, V_s) for the j-th point x of V_s (zero elsewhere).
  std::vector<std::vector<ExtNat>> indices(v.size());
  parallel_chunks(v.size(), par, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const auto all = graph.indices_into(v[s]);
      indices[s].reserve(v[s].size());
      for (PointId x : v[s]) indices[s].push_back(all[x]);
    }
  });

  std::vector<std::vector<std::pair<VertexId, ExtNat>>> at_point(n);
  for (ElementIndex s = 0; s < v.size(); ++s) {
    std::size_t j = 0;
    for (PointId x : v[s]) at_point[x].emplace_back(static_cast<VertexId>(s), indices[s][j++]);
  }

  std::vector<std::optional<BarycentricPoint>> slots(n);
  parallel_chunks(n, par, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      const auto& here = at_point[x];
      const auto infinite = static_cast<long>(
          std::count_if(here.begin(), here.end(), [](const auto& e) { return e.second.is_infinite(); }));
      std::vector<BarycentricPoint::Entry> weights;
      if (infinite > 0) {
        for (const auto& [s, i] : here) {
          if (i.is_infinite()) weights.emplace_back(s, Rational(1, infinite));
        }
      } else {
        std::uint64_t total = 0;
        for (const auto& e : here) total += e.second.value();
        for (const auto& [s, i] : here) {
          if (i.value() > 0) {
            weights.emplace_back(s, Rational(static_cast<long>(i.value()), static_cast<long>(total)));
          }
        }
      }
      slots[x].emplace(std::move(weights));
    }
  });

  std::vector<BarycentricPoint> values;
  values.reserve(n);
  for (auto& slot : slots) values.push_back(std::move(*slot));
  const std::size_t cap = d_cap.value_or(max_multiplicity(v) == 0 ? 0 : max_multiplicity(v) - 1);
  return PartitionOfUnity(v.size(), std::move(values), nerve(v, cap));
}

DiameterBudget chain_budget(const FiniteCoarseSpace& space, std::size_t budget) {
  auto graph = std::make_shared<const ChainGraph>(space.gauge());
  return DiameterBudget{"chain", ExtRational(Rational(static_cast<unsigned long>(budget))),
                        [graph](const PointSet& a) -> ExtRational {
                          const ExtNat d = graph->diameter(a);
                          if (d.is_infinite()) return ExtRational::infinity();
                          return Rational(static_cast<unsigned long>(d.value()));
                        }};
}

PUCertificate certify_pu(const PartitionOfUnity& f, const Cover& u, const ExtRational& epsilon,
                         const DiameterBudget& budget, Parallelism par) {
  if (f.size() != u.universe_size()) throw InputError("partition and cover have different point sets");
  PUCertificate cert;
  cert.epsilon = epsilon;
  cert.variation = variation(f, u, par);
  cert.variation_ok = epsilon.is_infinite() || cert.variation.value < epsilon.value();

  cert.coarsening_ok = true;
  cert.coarsening_witness.reserve(u.size());
  for (ElementIndex t = 0; t < u.size(); ++t) {
    const PointSet& element = u[t];
    if (element.empty()) {
      cert.coarsening_witness.push_back(0);
      continue;
    }
    std::vector<VertexId> common = f[element.front()].carrier();
    for (PointId y : element) {
      std::erase_if(common, [&](VertexId v) { return !f[y].in_carrier(v); });
      if (common.empty()) break;
    }
    if (common.empty()) {
      cert.coarsening_ok = false;
      cert.coarsening_counterexample = t;
      cert.coarsening_witness.clear();
      break;
    }
    cert.coarsening_witness.push_back(common.front());
  }

  cert.diameter_measure = budget.measure;
  cert.diameter_budget = budget.budget;
  cert.bounded_ok = true;
  const Cover preimages = star_preimage_cover(f);
  for (ElementIndex v = 0; v < preimages.size(); ++v) {
    const ExtRational d = budget.diameter(preimages[v]);
    if (!cert.widest_vertex || d > cert.max_star_diameter) {
      cert.max_star_diameter = d;
      cert.widest_vertex = static_cast<VertexId>(v);
    }
    if (d > budget.budget) cert.bounded_ok = false;
  }
  return cert;
}

PUCertificate certify_pu(const PartitionOfUnity& f, const Cover& u, const ExtRational& epsilon,
                         const FiniteCoarseSpace& space, std::size_t budget, Parallelism par) {
  if (f.size() != space.size()) throw InputError("partition and space have different point sets");
  return certify_pu(f, u, epsilon, chain_budget(space, budget), par);
}

Rational quotient_variation_bound(const Rational& m, const Rational& n) {
  if (m.sign() <= 0) throw InputError("quotient bound needs m > 0, got " + m.str());
  return (n + Rational(1)) / m;
}

}  // namespace coarse
