#include <doctest.h>

#include "coarse/asdim.hpp"
#include "coarse/chain.hpp"
#include "coarse/error.hpp"
#include "coarse/filler.hpp"
#include "coarse/generators.hpp"
#include "coarse/oracle.hpp"
#include "coarse/partition.hpp"
#include "coarse/pipeline.hpp"
#include "random_instances.hpp"

using namespace coarse;
using coarse::testing::Rng;

namespace {

Cover singletons(std::size_t n) {
  std::vector<PointSet> out;
  for (PointId x = 0; x < n; ++x) out.push_back(PointSet{x});
  return Cover(n, std::move(out));
}

// Chain index on a path with adjacent-pair gauge, for an interval [lo, hi]:
// steps needed to step off either end, infinite at the ends of the line.
ExtNat line_index(std::size_t n, std::size_t x, std::size_t lo, std::size_t hi) {
  if (x < lo || x > hi) return ExtNat(0);
  ExtNat best = ExtNat::infinity();
  if (lo > 0) best = std::min(best, ExtNat(x - lo + 1));
  if (hi + 1 < n) best = std::min(best, ExtNat(hi - x + 1));
  return best;
}

}  // namespace

TEST_SUITE("asdim-filler") {

TEST_CASE("asdim pair check counts meeting elements") {
  const Cover u(3, {PointSet{0, 1, 2}});
  CHECK_FALSE(check_asdim_pair(u, singletons(3), 1).passed);
  const auto ok = check_asdim_pair(u, singletons(3), 2);
  CHECK(ok.passed);
  CHECK(ok.counts == std::vector<std::size_t>{3});
  CHECK(ok.worst == std::optional<ElementIndex>(0));
  const Cover pairs(4, {PointSet{0, 1}, PointSet{1, 2}, PointSet{2, 3}});
  const auto c = check_asdim_pair(pairs, Cover(4, {PointSet{0}, PointSet{1, 2}, PointSet{3}}), 0);
  CHECK(c.counts == std::vector<std::size_t>{2, 1, 2});
  CHECK(c.worst == std::optional<ElementIndex>(0));
  CHECK_THROWS_AS(check_asdim_pair(u, singletons(4), 2), InputError);
}

TEST_CASE("property: asdim pair counts match a direct scan") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = testing::uniform(rng, 1, 16);
    const Cover u = testing::random_cover(rng, size, testing::uniform(rng, 1, 6), 0.3);
    const Cover v = testing::random_cover(rng, size, testing::uniform(rng, 1, 6), 0.3);
    const std::size_t n = testing::uniform(rng, 0, 4);
    const auto cert = check_asdim_pair(u, v, n);
    bool passed = true;
    for (ElementIndex t = 0; t < u.size(); ++t) {
      std::size_t meets = 0;
      for (const auto& e : v.elements()) {
        if (!set_intersection(u[t], e).empty()) ++meets;
      }
      REQUIRE(cert.counts[t] == meets);
      passed = passed && meets <= n + 1;
    }
    REQUIRE(cert.passed == passed);
  }
}

TEST_CASE("brute-force witness search on six points") {
  const FiniteCoarseSpace line = gen_line(6);
  const Cover u = line.gauge();
  const auto two = find_witness_bruteforce(line, u, 1, 2);
  REQUIRE(two.has_value());
  CHECK(two->elements() == std::vector<PointSet>{PointSet{0, 1, 2}, PointSet{1, 2, 3}, PointSet{4, 5}});
  const auto five = find_witness_bruteforce(line, u, 0, 5);
  REQUIRE(five.has_value());
  CHECK(five->elements() == std::vector<PointSet>{PointSet::universe(6)});
  for (std::size_t d = 0; d < 5; ++d) CHECK_FALSE(find_witness_bruteforce(line, u, 0, d).has_value());
  CHECK_THROWS_AS(find_witness_bruteforce(gen_line(13), gen_line(13).gauge(), 1, 2), InputError);
}

TEST_CASE("property: brute-force witnesses pass the pair check") {
  Rng rng(32);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t size = testing::uniform(rng, 2, 10);
    const Cover g = testing::random_connected_cover(rng, size, testing::uniform(rng, 0, 2));
    const FiniteCoarseSpace space(size, g);
    const Cover u = testing::random_connected_cover(rng, size, 0);
    const std::size_t n = testing::uniform(rng, 0, 2);
    const auto w = find_witness_bruteforce(space, u, n, testing::uniform(rng, 1, 5));
    if (!w) continue;
    ++found;
    REQUIRE(w->first_uncovered() == std::nullopt);
    REQUIRE(check_asdim_pair(u, *w, n).passed);
  }
  CHECK(found > 10);
}

TEST_CASE("skeleton partition on a line") {
  const FiniteCoarseSpace line = gen_line(200);
  const Cover u = line.gauge();
  const Cover w = line_intervals(200, 43);
  CHECK(skeleton_budget(line, u, w, 10) == 84);
  const auto s = build_skeleton_pu(line, u, w, 10, 1);
  CHECK(s.hypothesis.passed);
  CHECK(s.declared_budget == 84);
  CHECK(s.certificate.passed());
  CHECK(s.certificate.epsilon == ExtRational(Rational(16, 10)));
  CHECK(s.f.max_carrier_size() <= 2);
  CHECK(max_multiplicity(s.v) <= 2);

  CHECK_THROWS_AS(build_skeleton_pu(line, u, w, 0, 1), InputError);
  CHECK_THROWS_AS(build_skeleton_pu(line, u, Cover(200, {PointSet{0, 1}}), 10, 1), InputError);
  try {
    build_skeleton_pu(line, u, line_intervals(200, 10), 10, 1);
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(e.witness() == "element 0");
  }
}

TEST_CASE("trim of a skeleton partition") {
  const FiniteCoarseSpace line = gen_line(200);
  const Cover u = line.gauge();
  const auto s = build_skeleton_pu(line, u, line_intervals(200, 43), 10, 1);
  const auto t = trim_to_cover(s.f, u, 1, chain_budget(line, s.declared_budget));
  CHECK(t.hypothesis.coarsening_ok);
  CHECK(t.hypothesis.bounded_ok);
  CHECK(t.check.passed);
  CHECK(is_refinement(u, t.v).ok());

  const PartitionOfUnity constant(1, std::vector<BarycentricPoint>(200, BarycentricPoint::vertex(0)));
  CHECK_THROWS_AS(trim_to_cover(constant, u, 0, chain_budget(line, 10)), PreconditionError);
  const auto whole = trim_to_cover(constant, u, 0, chain_budget(line, 199));
  CHECK(whole.v.elements() == std::vector<PointSet>{PointSet::universe(200)});
  CHECK_THROWS_AS(trim_to_cover(s.f, u, 0, chain_budget(line, s.declared_budget)), PreconditionError);
}

TEST_CASE("property: skeleton then trim yields an asdim witness") {
  Rng rng(33);
  int built = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t size = testing::uniform(rng, 3, 12);
    const FiniteCoarseSpace line = gen_line(size);
    const Cover u = line.gauge();
    const std::size_t n = testing::uniform(rng, 0, 2);
    const auto w = find_witness_bruteforce(line, u, n, testing::uniform(rng, 2, 8));
    if (!w) continue;
    const std::size_t k = testing::uniform(rng, 1, 3);
    try {
      const auto s = build_skeleton_pu(line, u, *w, k, n);
      REQUIRE(s.certificate.passed());
      const auto t = trim_to_cover(s.f, u, n, chain_budget(line, s.declared_budget));
      REQUIRE(t.check.passed);
      REQUIRE(is_refinement(u, t.v).ok());
      ++built;
    } catch (const PreconditionError&) {
    }
  }
  CHECK(built > 5);
}

TEST_CASE("filler parameters") {
  const auto p = choose_filler_params(Rational(1), 1);
  CHECK(p.m == 25);
  CHECK(p.k == 257);
  CHECK(p.delta == Rational(1, 816));
  CHECK(p.term_budget() == Rational(1, 8));
  CHECK(p.total_budget() < Rational(1, 2));
  const auto q = choose_filler_params(Rational(7), 0);
  CHECK(q.m == 13);
  CHECK(q.k == 33);
  CHECK(q.delta == Rational(1, 216));
  CHECK_THROWS_AS(choose_filler_params(Rational(0), 1), InputError);
  FillerParams bad = p;
  bad.k = bad.m;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = p;
  bad.k = 256;
  CHECK_THROWS_AS(bad.validate(), InputError);
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("blend function on a line") {
  const std::size_t n = 31;
  const Cover u = gen_line(n).gauge();
  const auto b = blend_alpha(PointSet::interval(0, 9), 3, u);
  for (PointId x = 0; x <= 9; ++x) CHECK(b.alpha[x] == Rational(1));
  CHECK(b.alpha[10] == Rational(3, 4));
  CHECK(b.alpha[11] == Rational(1, 2));
  CHECK(b.alpha[12] == Rational(1, 4));
  for (PointId x = 13; x < n; ++x) CHECK(b.alpha[x] == Rational(0));
  for (PointId x = 0; x < n; ++x) {
    CHECK(b.cases[x] == BlendCase::BothFinite);
    CHECK(b.p[x] == line_index(n, x, 0, 12));
    CHECK(b.q[x] == line_index(n, x, 10, n - 1));
  }
  CHECK_THROWS_AS(blend_alpha(PointSet::universe(n), 3, u), InputError);
  CHECK_THROWS_AS(blend_alpha(PointSet{}, 3, u), InputError);
  CHECK_THROWS_AS(blend_alpha(PointSet{0}, 0, u), InputError);
}

TEST_CASE("blend function cases off a connected gauge") {
  // Two components: {0, 1} and {2, 3}.
  const Cover u(4, {PointSet{0, 1}, PointSet{2, 3}});
  const auto b = blend_alpha(PointSet{0, 1}, 1, u);
  CHECK(b.cases[0] == BlendCase::FirstInfinite);
  CHECK(b.alpha[0] == Rational(1));
  CHECK(b.cases[2] == BlendCase::SecondInfinite);
  CHECK(b.alpha[2] == Rational(0));
  const auto c = blend_alpha(PointSet{0}, 1, u);
  CHECK(c.cases[1] == BlendCase::FirstInfinite);
  CHECK(c.alpha[1] == Rational(1));
  CHECK(c.cases[2] == BlendCase::SecondInfinite);
  CHECK(c.alpha[3] == Rational(0));
  CHECK(std::string(to_string(BlendCase::SecondInfinite)) == "second-infinite");
}

TEST_CASE("property: blend variation at most 3/m") {
  Rng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = testing::uniform(rng, 2, 30);
    const Cover u = testing::random_connected_cover(rng, size, testing::uniform(rng, 0, 3));
    PointSet a = testing::random_subset(rng, size, 0.3);
    if (a.empty() || a.size() == size) continue;
    const std::size_t m = testing::uniform(rng, 1, 8);
    const auto b = blend_alpha(a, m, u);
    for (PointId x : a) REQUIRE(b.alpha[x] == Rational(1));
    for (PointId x = 0; x < size; ++x) {
      REQUIRE(b.alpha[x] >= Rational(0));
      REQUIRE(b.alpha[x] <= Rational(1));
    }
    REQUIRE(scalar_variation(b.alpha, u).value <= Rational(3) / Rational(static_cast<unsigned long>(m)));
  }
}

TEST_CASE("retraction near A") {
  const auto params = choose_filler_params(Rational(1), 1);
  const auto inst = line_filler_instance(2001, params);
  const auto r = retract_near_A(inst.f, inst.a, params.m, inst.u, params.delta, 1);
  CHECK(r.region == PointSet::interval(0, static_cast<PointId>(inst.a.back() + params.m)));
  for (PointId x = 0; x < inst.f.size(); ++x) {
    if (!r.region.contains(x)) {
      CHECK(r.g[x] == inst.f[x]);
      CHECK(r.anchor[x] == x);
      continue;
    }
    CHECK(r.anchor[x] == std::min<PointId>(x, inst.a.back()));
    for (VertexId v : r.g[x].carrier()) CHECK(inst.f[r.anchor[x]].in_carrier(v));
  }
  for (PointId x : inst.a) CHECK(r.g[x] == inst.f[x]);
  CHECK(r.max_shift <= Rational(2) * params.delta);
  CHECK_THROWS_AS(retract_near_A(inst.f, inst.a, params.m, inst.u, Rational(1), 1), PreconditionError);
  // f has three vertices on A, too many for the 0-skeleton.
  CHECK_THROWS_AS(retract_near_A(inst.f, inst.a, params.m, inst.u, params.delta, 0), PreconditionError);
}

TEST_CASE("filler on the designed line instance") {
  const auto params = choose_filler_params(Rational(1), 1);
  const auto inst = line_filler_instance(2001, params);
  const auto r = filler(inst.f, inst.a, inst.u, inst.v, params, inst.space, inst.budget);
  CHECK(r.input_certificate.passed());
  CHECK(r.certificate.passed());
  CHECK(r.certificate.epsilon == ExtRational(Rational(1, 2)));
  CHECK(r.within_budget);
  CHECK(r.variation_budget == params.total_budget());
  CHECK(r.max_shift_on_a == Rational(0));
  for (PointId x : inst.a) CHECK(r.h[x] == r.retraction.g[x]);
  CHECK(r.skeletal_points == 2001);
  CHECK(r.heavy_points == 2001);
  for (std::size_t s : r.carrier_sizes) CHECK(s <= 2);
}

TEST_CASE("filler of a constant partition stays constant") {
  const auto params = choose_filler_params(Rational(1), 1);
  const auto inst = line_filler_constant(2001, params);
  const auto r = filler(inst.f, inst.a, inst.u, inst.v, params, inst.space, inst.budget);
  CHECK(r.certificate.passed());
  for (PointId x = 0; x < 2001; ++x) CHECK(r.h[x] == BarycentricPoint::vertex(0));
}

TEST_CASE("filler preconditions") {
  const auto params = choose_filler_params(Rational(1), 1);
  const auto inst = line_filler_instance(2001, params);
  const auto phi = barycentric_map(inst.u, inst.v);
  CHECK_THROWS_AS(filler(phi, inst.a, inst.u, inst.v, params, inst.space, inst.budget), PreconditionError);
  CHECK_THROWS_AS(filler(inst.f, inst.a, inst.u, inst.v, params, inst.space, 10), PreconditionError);
  CHECK_THROWS_AS(filler(inst.f, inst.a, inst.u, inst.u, params, inst.space, inst.budget), PreconditionError);
  CHECK_THROWS(filler(inst.f, PointSet::universe(2001), inst.u, inst.v, params, inst.space, inst.budget));
}

}  // TEST_SUITE
