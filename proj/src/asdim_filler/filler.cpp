#include "coarse/filler.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "coarse/chain.hpp"
#include "coarse/error.hpp"

namespace coarse {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

Rational min_budget(const Rational& epsilon, std::size_t n) {
  return std::min(epsilon, Rational(1) / from_size(n + 1));
}

}  // namespace

Rational FillerParams::term_budget() const { return min_budget(epsilon, n) / Rational(4); }

Rational FillerParams::total_budget() const {
  const Rational mm = from_size(m);
  const Rational scale = from_size(2 * n + 2);
  return from_size(2 * m + 1) * delta + Rational(3) / mm + Rational(2) * scale * scale / from_size(k) +
         Rational(3) / mm;
}

void FillerParams::validate() const {
  if (epsilon.sign() <= 0) throw InputError("filler parameters need ε > 0");
  if (m < 1 || k <= m) throw InputError("filler parameters need k > m >= 1");
  if (delta.sign() <= 0) throw InputError("filler parameters need δ > 0");
  const Rational b = term_budget();
  const Rational scale = from_size(2 * n + 2);
  if (!(from_size(2 * m + 1) * delta < b)) throw InputError("(2m+1)δ is not below the term budget " + b.str());
  if (!(Rational(3) / from_size(m) < b)) throw InputError("3/m is not below the term budget " + b.str());
  if (!(Rational(2) * scale * scale / from_size(k) < b)) {
    throw InputError("2(2n+2)^2/k is not below the term budget " + b.str());
  }
}

FillerParams choose_filler_params(const Rational& epsilon, std::size_t n) {
  if (epsilon.sign() <= 0) throw InputError("ε must be positive, got " + epsilon.str());
  FillerParams p;
  p.epsilon = epsilon;
  p.n = n;
  const Rational b = min_budget(epsilon, n) / Rational(4);
  p.m = static_cast<std::size_t>((Rational(3) / b).floor()) + 1;
  const Rational scale = from_size(2 * n + 2);
  p.k = std::max(p.m + 1, static_cast<std::size_t>((Rational(2) * scale * scale / b).floor()) + 1);
  p.delta = b / from_size(2 * (2 * p.m + 1));
  p.validate();
  return p;
}

const char* to_string(BlendCase c) {
  switch (c) {
    case BlendCase::BothFinite: return "both-finite";
    case BlendCase::BothInfinite: return "both-infinite";
    case BlendCase::FirstInfinite: return "first-infinite";
    case BlendCase::SecondInfinite: return "second-infinite";
  }
  return "?";
}

BlendFunction blend_alpha(const PointSet& a, std::size_t m, const Cover& u) {
  const std::size_t size = u.universe_size();
  if (m < 1) throw InputError("blend needs m >= 1");
  if (!a.empty() && a.back() >= size) throw InputError("A mentions unknown point " + std::to_string(a.back()));
  if (a.empty()) throw InputError("blend needs a nonempty A");
  if (a.size() == size) throw InputError("blend needs A to be a proper subset");

  const ChainGraph graph(u);
  BlendFunction out;
  out.p = graph.indices_into(iterated_star_set(a, u, m));
  out.q = graph.indices_into(complement(a, size));
  out.alpha.resize(size);
  out.cases.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    const ExtNat& p = out.p[x];
    const ExtNat& q = out.q[x];
    if (p.is_finite() && q.is_finite()) {
      out.cases[x] = BlendCase::BothFinite;
      out.alpha[x] = Rational(static_cast<long>(p.value()), static_cast<long>(p.value() + q.value()));
    } else if (p.is_infinite() && q.is_infinite()) {
      out.cases[x] = BlendCase::BothInfinite;
      out.alpha[x] = Rational(1, 2);
    } else if (p.is_infinite()) {
      out.cases[x] = BlendCase::FirstInfinite;
      out.alpha[x] = Rational(1);
    } else {
      out.cases[x] = BlendCase::SecondInfinite;
      out.alpha[x] = Rational(0);
    }
  }
  return out;
}

namespace {

// Multi-source breadth-first search over the chain graph of U, limited to
// depth `limit`. anchor[x] is the least source among those at minimal
// distance from x; unreached points keep nullopt. Each layer is expanded in
// increasing anchor order, so the first time a point is reached it receives
// the least anchor available at that distance.
std::vector<std::optional<PointId>> nearest_sources(const Cover& u, const PointSet& sources, std::size_t limit) {
  const std::size_t size = u.universe_size();
  std::vector<std::optional<PointId>> anchor(size);
  std::vector<char> element_done(u.size(), 0);
  std::vector<PointId> frontier;
  for (PointId s : sources) {
    anchor[s] = s;
    frontier.push_back(s);
  }
  for (std::size_t depth = 0; depth < limit && !frontier.empty(); ++depth) {
    std::stable_sort(frontier.begin(), frontier.end(),
                     [&](PointId x, PointId y) { return *anchor[x] < *anchor[y]; });
    std::vector<PointId> next;
    for (PointId z : frontier) {
      for (ElementIndex t : u.containing(z)) {
        if (element_done[t]) continue;
        element_done[t] = 1;
        for (PointId y : u[t]) {
          if (!anchor[y]) {
            anchor[y] = anchor[z];
            next.push_back(y);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return anchor;
}

}  // namespace

Retraction retract_near_A(const PartitionOfUnity& f, const PointSet& a, std::size_t m, const Cover& u,
                          const Rational& delta, std::size_t n) {
  const std::size_t size = f.size();
  if (u.universe_size() != size) throw InputError("partition and cover have different point sets");
  if (a.empty()) throw InputError("retraction needs a nonempty A");
  if (a.back() >= size) throw InputError("A mentions unknown point " + std::to_string(a.back()));
  const Rational limit = Rational(1) / from_size(8 * (n + 1));
  if (!(from_size(m) * delta < limit)) {
    throw PreconditionError("m·δ = " + (from_size(m) * delta).str() + " is not below " + limit.str(), "m*delta");
  }
  for (PointId x : a) {
    if (f[x].carrier_size() > n + 1) {
      throw PreconditionError("f(" + std::to_string(x) + ") has " + std::to_string(f[x].carrier_size()) +
                                  " vertices, more than " + std::to_string(n + 1),
                              "point " + std::to_string(x));
    }
  }

  PointSet region = iterated_star_set(a, u, m);
  const auto nearest = nearest_sources(u, a, m);
  Retraction out{f, region, std::vector<PointId>(size), std::vector<Rational>(size), Rational(0)};
  std::vector<BarycentricPoint> values = f.values();
  for (PointId x = 0; x < size; ++x) out.anchor[x] = x;

  for (PointId x : region) {
    if (!nearest[x]) throw InvariantViolation("point " + std::to_string(x) + " of st^m(A) was not reached from A");
    const PointId c = *nearest[x];
    out.anchor[x] = c;
    if (c == x) continue;
    const BarycentricPoint& here = f[x];
    const BarycentricPoint& there = f[c];
    std::optional<VertexId> target;
    Rational target_weight;
    for (const auto& [v, w] : there.entries()) {
      if (!here.in_carrier(v)) continue;
      if (!target || w > target_weight) {
        target = v;
        target_weight = w;
      }
    }
    if (!target) {
      throw PreconditionError("carriers of f(" + std::to_string(x) + ") and f(" + std::to_string(c) +
                                  ") are disjoint",
                              "point " + std::to_string(x));
    }
    Rational moved(0);
    std::vector<BarycentricPoint::Entry> weights;
    for (const auto& [v, w] : here.entries()) {
      if (there.in_carrier(v)) {
        weights.emplace_back(v, w);
      } else {
        moved = moved + w;
      }
    }
    weights.emplace_back(*target, moved);
    BarycentricPoint g(std::move(weights));
    for (VertexId v : g.carrier()) {
      if (!there.in_carrier(v)) throw InvariantViolation("retracted carrier leaves carrier of f(c(x))");
    }
    const Rational shift = l1_distance(g, here);
    if (shift != Rational(2) * moved) throw InvariantViolation("retraction shift is not twice the moved weight");
    out.max_shift = std::max(out.max_shift, shift);
    out.transferred[x] = moved;
    values[x] = std::move(g);
  }
  out.g = PartitionOfUnity(f.vertex_count(), std::move(values));
  return out;
}

FillerResult filler(const PartitionOfUnity& f, const PointSet& a, const Cover& u, const Cover& v,
                    const FillerParams& params, const FiniteCoarseSpace& space, std::size_t d, Parallelism par) {
  params.validate();
  const std::size_t size = space.size();
  const std::size_t n = params.n;
  if (f.size() != size || u.universe_size() != size || v.universe_size() != size) {
    throw InputError("filler inputs live on different point sets");
  }
  BlendFunction blend = blend_alpha(a, params.m, u);

  PUCertificate input = certify_pu(f, v, params.delta, chain_budget(space, d), par);
  if (!input.variation_ok) {
    throw PreconditionError("var_V(f) = " + input.variation.value.str() + " is not below δ = " + params.delta.str(),
                            "pair " + std::to_string(input.variation.pair->first) + " " +
                                std::to_string(input.variation.pair->second));
  }
  if (!input.coarsening_ok) {
    throw PreconditionError("no vertex star of f contains element " +
                                std::to_string(*input.coarsening_counterexample) + " of V",
                            "element " + std::to_string(*input.coarsening_counterexample));
  }
  if (!input.bounded_ok) {
    throw PreconditionError("star preimage of vertex " + std::to_string(*input.widest_vertex) + " has diameter " +
                                input.max_star_diameter.str() + " over budget " + std::to_string(d),
                            "vertex " + std::to_string(*input.widest_vertex));
  }
  for (PointId x : a) {
    if (f[x].carrier_size() > n + 1) {
      throw PreconditionError("f(A) is not in the " + std::to_string(n) + "-skeleton at point " + std::to_string(x),
                              "point " + std::to_string(x));
    }
  }
  const RefinementResult coarsens = is_refinement(iterated_star(u, params.k), v);
  if (!coarsens.ok()) {
    throw PreconditionError("element " + std::to_string(*coarsens.counterexample) + " of st^" +
                                std::to_string(params.k) + "(U) lies in no element of V",
                            "element " + std::to_string(*coarsens.counterexample));
  }
  if (max_multiplicity(v) > n + 1) {
    PointId x = 0;
    while (multiplicity(v, x) <= n + 1) ++x;
    throw PreconditionError("V has multiplicity " + std::to_string(multiplicity(v, x)) + " at point " +
                                std::to_string(x),
                            "point " + std::to_string(x));
  }

  Retraction retraction = retract_near_A(f, a, params.m, u, params.delta, n);
  Shrinking w = shrink_with_multiplicity(v, star_preimage_cover(f));
  PartitionOfUnity phi = barycentric_map(u, w.cover, std::nullopt, par);

  std::vector<std::optional<BarycentricPoint>> slots(size);
  parallel_chunks(size, par, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      const auto id = static_cast<PointId>(x);
      slots[x].emplace(convex_combination(blend.alpha[x], retraction.g[id], phi[id]));
    }
  });
  std::vector<BarycentricPoint> values;
  values.reserve(size);
  for (auto& s : slots) values.push_back(std::move(*s));
  PartitionOfUnity h(f.vertex_count(), std::move(values));

  PUCertificate cert = certify_pu(h, u, min_budget(params.epsilon, n), chain_budget(space, d), par);

  FillerResult out{std::move(h),
                   params,
                   std::move(input),
                   std::move(blend),
                   std::move(retraction),
                   std::move(w),
                   std::move(phi),
                   std::move(cert),
                   params.total_budget(),
                   false,
                   Rational(0),
                   {},
                   0,
                   0};
  out.within_budget = out.certificate.variation.value <= out.variation_budget;
  for (PointId x : a) out.max_shift_on_a = std::max(out.max_shift_on_a, l1_distance(out.h[x], out.retraction.g[x]));
  const Rational heavy = Rational(1) / from_size(n + 1);
  out.carrier_sizes.resize(size);
  for (PointId x = 0; x < size; ++x) {
    const auto& p = out.h[x];
    out.carrier_sizes[x] = p.carrier_size();
    if (p.carrier_size() <= n + 1) ++out.skeletal_points;
    if (std::any_of(p.entries().begin(), p.entries().end(), [&](const auto& e) { return e.second >= heavy; })) {
      ++out.heavy_points;
    }
  }
  return out;
}

}  // namespace coarse
