// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// rational comparisons; there are no floating-point tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coarse/asdim.hpp"
#include "coarse/certificates.hpp"
#include "coarse/chain.hpp"
#include "coarse/filler.hpp"
#include "coarse/generators.hpp"
#include "coarse/io.hpp"
#include "coarse/metric.hpp"
#include "coarse/oracle.hpp"
#include "coarse/partition.hpp"
#include "coarse/pipeline.hpp"
#include "coarse/shrink.hpp"
#include "random_instances.hpp"

using namespace coarse;
using coarse::testing::Rng;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Shared by criterion 8: every partition of unity and document produced by the
// other criteria is recorded here and checked afterwards.
struct Emitted {
  std::size_t points = 0;
  std::size_t bad_points = 0;
  std::size_t documents = 0;
  std::size_t bad_documents = 0;

  void add(const PartitionOfUnity& f) {
    for (const auto& b : f.values()) {
      Rational total(0);
      for (const auto& [v, w] : b.entries()) {
        if (w.sign() <= 0) ++bad_points;
        total = total + w;
      }
      ++points;
      if (total != Rational(1)) ++bad_points;
    }
  }

  void add(const CertificateDocument& doc) {
    ++documents;
    const std::string text = to_text(doc);
    const CertificateDocument back = certificate_from_text(text);
    if (!(back == doc) || to_text(back) != text) ++bad_documents;
  }
};

Emitted emitted;

std::string str(std::size_t v) { return std::to_string(v); }

Outcome index_oracle() {
  Rng rng(1001);
  std::size_t instances = 0, queries = 0, mismatches = 0;
  for (; instances < 600; ++instances) {
    const std::size_t n = testing::uniform(rng, 1, 8);
    const Cover u = testing::random_connected_cover(rng, n, testing::uniform(rng, 0, 3));
    for (int rep = 0; rep < 3; ++rep) {
      const PointSet v = testing::random_subset(rng, n, 0.6);
      for (PointId x = 0; x < n; ++x) {
        const ExtNat got = chain_index(u, x, v);
        const auto want = oracle::enumerate_chain_index(u, x, v);
        ++queries;
        if (want ? got != ExtNat(*want) : !got.is_infinite()) ++mismatches;
      }
    }
  }
  return {mismatches == 0, str(instances) + " covers, " + str(queries) + " queries, " + str(mismatches) + " mismatches"};
}

Outcome shrinking() {
  Rng rng(1002);
  std::size_t pairs = 0, failures = 0;
  std::string first;
  for (; pairs < 600; ++pairs) {
    const auto [u, v] = testing::random_refinement_pair(rng, testing::uniform(rng, 1, 30));
    const Shrinking s = shrink_with_multiplicity(u, v);
    if (auto bad = oracle::shrink_clause_failure(u, v, s.cover)) {
      if (failures++ == 0) first = *bad;
    }
  }
  return {failures == 0, str(pairs) + " pairs, " + str(failures) + " failures" + (first.empty() ? "" : ": " + first)};
}

Outcome quotient_lemma() {
  Rng rng(1003);
  std::size_t triples = 0, violations = 0;
  Rational worst_slack(-1);
  for (; triples < 1200; ++triples) {
    const auto t = testing::random_quotient_triple(rng, 30);
    const Rational n(static_cast<unsigned long>(t.n));
    bool ok = scalar_variation(t.p, t.u).value <= Rational(1) && scalar_variation(t.q, t.u).value <= n;
    std::vector<Rational> ratio(t.p.size());
    for (PointId x = 0; x < t.p.size(); ++x) {
      ok = ok && t.p[x] <= t.q[x] && t.q[x] >= t.m;
      ratio[x] = t.p[x] / t.q[x];
    }
    if (!ok) return {false, "generator produced a triple outside the hypotheses at " + str(triples)};
    const Rational var = scalar_variation(ratio, t.u).value;
    const Rational bound = quotient_variation_bound(t.m, n);
    if (var > bound) ++violations;
    if (bound > Rational(0) && var / bound > worst_slack) worst_slack = var / bound;
  }
  return {violations == 0, str(triples) + " triples, " + str(violations) + " violations, max var/bound " +
                               worst_slack.str()};
}

Outcome line_sweep_bound() {
  const auto rows = line_sweep(2000, 1, 64);
  std::size_t over = 0, increases = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].variation > rows[i].bound) ++over;
    if (i > 0 && rows[i].variation > rows[i - 1].variation) ++increases;
  }
  return {rows.size() == 64 && over == 0 && increases == 0,
          "k=1..64, var(k=1) " + rows.front().variation.str() + ", var(k=64) " + rows.back().variation.str() + ", " +
              str(over) + " over 16/k, " + str(increases) + " increases"};
}

Roundtrip run_roundtrip(const std::string& spec, std::size_t k, std::size_t n, Parallelism par) {
  const RealizedSpace space = realize(SpaceSpec::parse(spec));
  const Cover u = space.space.gauge();
  const Cover w = auto_witness(space, u, k, n);
  return asdim_roundtrip(space.space, u, w, k, n, par);
}

Outcome asdim_roundtrips() {
  std::string detail;
  bool pass = true;
  struct Case {
    const char* spec;
    std::size_t k, n;
  };
  for (const Case c : {Case{"line2000", 10, 1}, Case{"grid40x40", 5, 2}}) {
    const Roundtrip r = run_roundtrip(c.spec, c.k, c.n, {});
    const auto& sk = r.skeleton;
    const Rational scale(static_cast<unsigned long>(2 * c.n + 2));
    const bool sk_ok = sk.hypothesis.passed && sk.certificate.passed() &&
                       sk.certificate.epsilon == ExtRational(scale * scale / Rational(static_cast<unsigned long>(c.k))) &&
                       sk.f.target() && sk.f.target()->dimension() <= static_cast<int>(c.n) &&
                       sk.f.max_carrier_size() <= c.n + 1;
    const bool trim_ok = r.trim.hypothesis.coarsening_ok && r.trim.hypothesis.bounded_ok && r.trim.check.passed &&
                         check_asdim_pair(realize(SpaceSpec::parse(c.spec)).space.gauge(), r.trim.v, c.n).passed;
    emitted.add(sk.f);
    emitted.add(to_document(r));
    pass = pass && sk_ok && trim_ok;
    if (!detail.empty()) detail += "; ";
    detail += std::string(c.spec) + " n=" + str(c.n) + " k=" + str(c.k) + " var " + sk.certificate.variation.value.str() +
              " < " + sk.certificate.epsilon.str() + ", trimmed " + str(r.trim.v.size()) + " elements" +
              (sk_ok && trim_ok ? "" : " FAILED");
  }
  return {pass, detail};
}

FillerResult run_filler(Parallelism par) {
  const FillerParams params = choose_filler_params(Rational(1), 1);
  const LineFillerInstance inst = line_filler_instance(2001, params);
  return filler(inst.f, inst.a, inst.u, inst.v, params, inst.space, inst.budget, par);
}

Outcome filler_budget() {
  const auto start = std::chrono::steady_clock::now();
  const FillerResult r = run_filler({});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Rational var = r.certificate.variation.value;
  const bool pass = r.input_certificate.passed() && r.certificate.passed() && var < r.params.epsilon &&
                    var <= r.params.total_budget() && r.within_budget;
  emitted.add(r.h);
  emitted.add(r.retraction.g);
  emitted.add(r.phi);
  emitted.add(to_document(r));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  return {pass, "k=" + str(r.params.k) + " m=" + str(r.params.m) + " delta=" + r.params.delta.str() + ", var " +
                    var.str() + " <= budget " + r.params.total_budget().str() + ", filler " + buf + " s"};
}

// Slowly varying partitions of unity on 100 points: a background vertex 0 of
// weight beta mixed with a piecewise-linear path through random points.
PartitionOfUnity slow_pu(Rng& rng, std::size_t n) {
  const std::size_t extra = testing::uniform(rng, 1, 3);
  const std::size_t widths[] = {5, 10, 20, 50, 99};
  const std::size_t w = widths[testing::uniform(rng, 0, 4)];
  const Rational betas[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(15, 16)};
  const Rational beta = betas[testing::uniform(rng, 0, 4)];
  auto knot = [&] {
    std::vector<Rational> raw(extra);
    Rational total(0);
    for (auto& r : raw) {
      r = testing::random_rational(rng, Rational(1), 6);
      total = total + r;
    }
    if (total.is_zero()) {
      raw[0] = Rational(1);
      total = Rational(1);
    }
    std::vector<BarycentricPoint::Entry> e;
    for (std::size_t i = 0; i < extra; ++i) e.emplace_back(static_cast<VertexId>(i + 1), raw[i] / total);
    return BarycentricPoint(std::move(e));
  };
  std::vector<BarycentricPoint> values(n, BarycentricPoint::vertex(0));
  BarycentricPoint left = knot();
  for (std::size_t x0 = 0; x0 + 1 < n; x0 += w) {
    const std::size_t x1 = std::min(x0 + w, n - 1);
    const BarycentricPoint right = knot();
    for (std::size_t x = x0; x <= x1; ++x) {
      const Rational t(static_cast<long>(x1 - x), static_cast<long>(x1 - x0));
      values[x] = convex_combination(beta, BarycentricPoint::vertex(0), convex_combination(t, left, right));
    }
    left = right;
  }
  return PartitionOfUnity(extra + 1, std::move(values));
}

bool is_constant(const PartitionOfUnity& f) {
  for (const auto& b : f.values()) {
    if (!(b == f[0])) return false;
  }
  return true;
}

Outcome comparisons() {
  const std::size_t n = 100;
  const FiniteMetricSpace m = line_metric(n);
  const Rational budget(static_cast<unsigned long>(n - 1));
  Rng rng(1007);
  std::vector<PartitionOfUnity> candidates;
  const Cover gauge = gen_line(n).gauge();
  for (std::size_t len = 4; len <= 200; len += 4) candidates.push_back(barycentric_map(gauge, line_staggered(n, len)));
  for (int i = 0; i < 400; ++i) candidates.push_back(slow_pu(rng, n));

  bool pass = true;
  std::string detail;
  for (const Rational& delta : {Rational(1, 2), Rational(1, 4)}) {
    std::size_t fwd = 0, fwd_varied = 0, fwd_fail = 0, bwd = 0, bwd_varied = 0, bwd_fail = 0;
    for (const auto& f : candidates) {
      if (certify_delta_pu(f, m, delta * delta / Rational(4), budget).passed()) {
        const ForwardComparison r = comparison_forward(f, m, delta, budget);
        ++fwd;
        if (!is_constant(f)) ++fwd_varied;
        if (!r.certificate.passed()) ++fwd_fail;
        if (fwd <= 3) emitted.add(to_document(r));
      }
      const Cover balls = ball_cover(m, Rational(1) / delta);
      if (certify_pu(f, balls, delta, metric_budget(m, budget)).passed()) {
        const BackwardComparison r = comparison_backward(f, m, delta, budget);
        ++bwd;
        if (!is_constant(f)) ++bwd_varied;
        if (!r.certificate.passed()) ++bwd_fail;
        if (bwd <= 3) emitted.add(to_document(r));
      }
      emitted.add(f);
    }
    // Each direction must have checked some nonconstant partition.
    pass = pass && fwd_fail == 0 && bwd_fail == 0 && fwd_varied > 0 && bwd_varied > 0;
    if (!detail.empty()) detail += "; ";
    detail += "delta=" + delta.str() + " forward " + str(fwd) + " (" + str(fwd_varied) + " nonconstant, " +
              str(fwd_fail) + " failed) backward " + str(bwd) + " (" + str(bwd_varied) + " nonconstant, " +
              str(bwd_fail) + " failed)";
  }
  return {pass, str(candidates.size()) + " candidates; " + detail};
}

Outcome exactness() {
  std::size_t pu_files = 0, bad_files = 0;
  Rng rng(1008);
  for (int i = 0; i < 50; ++i) {
    const PartitionOfUnity f = slow_pu(rng, 40);
    std::stringstream s;
    write_pu(s, f);
    ++pu_files;
    if (!(read_pu(s) == f)) ++bad_files;
  }
  const bool pass = emitted.points > 0 && emitted.documents > 0 && emitted.bad_points == 0 &&
                    emitted.bad_documents == 0 && bad_files == 0;
  return {pass, str(emitted.points) + " points (" + str(emitted.bad_points) + " bad), " + str(emitted.documents) +
                    " documents (" + str(emitted.bad_documents) + " bad), " + str(pu_files) + " pu files (" +
                    str(bad_files) + " bad)"};
}

std::string pipeline_output(Parallelism par) {
  std::ostringstream out;
  out << to_text(to_document(run_roundtrip("line2000", 10, 1, par)));
  out << to_text(to_document(run_roundtrip("grid40x40", 5, 2, par)));
  const FillerResult f = run_filler(par);
  out << to_text(to_document(f));
  write_pu(out, f.h);
  write_sweep_csv(out, line_sweep(2000, 1, 16, par));
  return out.str();
}

Outcome determinism() {
  const std::string a = pipeline_output({1});
  const std::string b = pipeline_output({1});
  const std::string c = pipeline_output({4});
  return {a == b && a == c, str(a.size()) + " bytes; threads 1 vs 1 " + (a == b ? "identical" : "differ") +
                                ", threads 1 vs 4 " + (a == c ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"chain index matches exhaustive enumeration", index_oracle},
      {"shrinking satisfies all four clauses", shrinking},
      {"quotient variation bound (n+1)/m", quotient_lemma},
      {"line sweep variation <= 16/k and nonincreasing", line_sweep_bound},
      {"asdim round trip on line and grid", asdim_roundtrips},
      {"filler certificate and five-term budget", filler_budget},
      {"metric comparison in both directions", comparisons},
      {"exact weights and document round trips", exactness},
      {"byte-identical pipeline output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s: %s [%.2f s, tolerance exact] %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
