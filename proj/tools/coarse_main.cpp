// Command-line front end: generators, certificates and pipelines over the
// text formats of coarse/io.hpp.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "coarse/asdim.hpp"
#include "coarse/certificates.hpp"
#include "coarse/chain.hpp"
#include "coarse/error.hpp"
#include "coarse/filler.hpp"
#include "coarse/generators.hpp"
#include "coarse/io.hpp"
#include "coarse/metric.hpp"
#include "coarse/oracle.hpp"
#include "coarse/pipeline.hpp"

using namespace coarse;

namespace {

struct Options {
  std::size_t threads = 1;
  std::string out;

  std::string space = "line200";
  std::string u = "gauge";
  std::string v;
  std::string w;
  std::string pu;
  std::string pu_out;
  std::string cover_out;
  std::string metric;
  std::string kind = "intervals";
  std::string overlap = "full";
  std::string a;
  std::string k_range = "1..64";
  std::string eps = "inf";
  std::string delta;
  std::string radius = "1/10";
  std::string budget_metric;

  std::size_t n_points = 200;
  std::size_t width = 10;
  std::size_t height = 10;
  std::size_t seed = 1;
  std::size_t len = 10;
  std::size_t brick_h = 0;
  std::size_t n = 1;
  std::size_t k = 1;
  std::optional<std::size_t> d_cap;
  std::optional<std::size_t> budget;
  bool constant = false;
};

/// Thrown after a document has been written; carries the exit code.
struct Finished {
  int code;
};

Parallelism par_of(const Options& o) { return Parallelism{std::max<std::size_t>(1, o.threads)}; }

void emit(const Options& o, const std::function<void(std::ostream&)>& write) {
  if (o.out.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw InputError("cannot write '" + o.out + "'");
  write(file);
}

void save(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  write(file);
}

[[noreturn]] void finish(const Options& o, const CertificateDocument& doc) {
  emit(o, [&](std::ostream& out) { write_certificate(out, doc); });
  throw Finished{doc.passed() ? 0 : 1};
}

Cover cover_arg(const std::string& text, const RealizedSpace& space) {
  if (text == "gauge") return space.space.gauge();
  if (text.empty()) throw InputError("missing cover argument");
  Cover c = load_cover(text);
  if (c.universe_size() != space.space.size()) throw InputError("cover '" + text + "' has the wrong point count");
  return c;
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw InputError(std::string("bad ") + what + " '" + text + "': " + e.what());
  }
}

ExtRational ext_rational_arg(const std::string& text, const char* what) {
  if (text == "inf") return ExtRational::infinity();
  return rational_arg(text, what);
}

std::pair<std::size_t, std::size_t> range_arg(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad range '" + text + "', expected LO..HI");
    }
    return std::stoull(s);
  };
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

BrickOverlap overlap_arg(const std::string& text) {
  if (text == "none") return BrickOverlap::None;
  if (text == "horizontal") return BrickOverlap::Horizontal;
  if (text == "full") return BrickOverlap::Full;
  throw InputError("overlap must be none, horizontal or full");
}

std::size_t gauge_diameter(const Cover& c, const FiniteCoarseSpace& space) {
  const ChainGraph g(space.gauge());
  std::size_t best = 0;
  for (const auto& e : c.elements()) {
    const ExtNat d = g.diameter(e);
    if (d.is_infinite()) throw InputError("cover element has infinite gauge diameter; pass --budget");
    best = std::max<std::size_t>(best, d.value());
  }
  return best;
}

// ---- gen ------------------------------------------------------------------

void run_gen_space(const Options& o, const FiniteCoarseSpace& space) {
  emit(o, [&](std::ostream& out) { write_space(out, space); });
  throw Finished{0};
}

void run_gen_cover(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const auto& spec = rs.spec;
  Cover c;
  if (o.kind == "gauge") {
    c = rs.space.gauge();
  } else if (o.kind == "intervals" || o.kind == "staggered") {
    if (spec.kind != SpaceSpec::Kind::Line) throw InputError("interval covers need a line space");
    c = o.kind == "intervals" ? line_intervals(spec.n, o.len) : line_staggered(spec.n, o.len);
  } else if (o.kind == "bricks") {
    if (spec.kind != SpaceSpec::Kind::Grid2d) throw InputError("brick covers need a grid space");
    c = grid_bricks(spec.w, spec.h, o.len, o.brick_h == 0 ? o.len : o.brick_h, overlap_arg(o.overlap));
  } else if (o.kind == "balls") {
    c = ball_cover(metric_of(rs), rational_arg(o.radius, "radius"));
  } else if (o.kind == "star") {
    c = iterated_star(rs.space.gauge(), o.k);
  } else {
    throw InputError("unknown cover kind '" + o.kind + "'");
  }
  emit(o, [&](std::ostream& out) { write_cover(out, c); });
  throw Finished{0};
}

void run_gen_metric(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const FiniteMetricSpace m = metric_of(rs);
  emit(o, [&](std::ostream& out) { write_metric(out, m); });
  throw Finished{0};
}

// ---- phi / certify ----------------------------------------------------------

void run_phi(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const Cover v = cover_arg(o.v, rs);
  const PartitionOfUnity f = barycentric_map(u, v, o.d_cap, par_of(o));
  save(o.pu_out, [&](std::ostream& out) { write_pu(out, f); });
  const std::size_t budget = o.budget ? *o.budget : gauge_diameter(v, rs.space);
  const PUCertificate cert = certify_pu(f, u, ext_rational_arg(o.eps, "epsilon"), rs.space, budget, par_of(o));
  CertificateDocument doc;
  doc.construction = "phi";
  doc.param("space", rs.spec.str())
      .param("elements", v.size())
      .measure("max_carrier", Rational(static_cast<unsigned long>(f.max_carrier_size())))
      .child(to_document(cert));
  finish(o, doc);
}

void run_certify(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  if (o.pu.empty()) throw InputError("certify needs --pu");
  const PartitionOfUnity f = load_pu(o.pu);
  if (f.size() != rs.space.size()) throw InputError("partition of unity has the wrong point count");
  if (!o.delta.empty()) {
    const FiniteMetricSpace m = o.metric.empty() ? metric_of(rs) : load_metric(o.metric);
    if (o.budget_metric.empty()) throw InputError("metric certification needs --budget-metric");
    const auto cert = certify_delta_pu(f, m, rational_arg(o.delta, "delta"),
                                       rational_arg(o.budget_metric, "metric budget"), par_of(o));
    finish(o, to_document(cert));
  }
  const Cover u = cover_arg(o.u, rs);
  if (!o.budget) throw InputError("certify needs --budget");
  finish(o, to_document(certify_pu(f, u, ext_rational_arg(o.eps, "epsilon"), rs.space, *o.budget, par_of(o))));
}

// ---- asdim ----------------------------------------------------------------

Cover witness_arg(const Options& o, const RealizedSpace& rs, const Cover& u) {
  if (!o.w.empty()) return cover_arg(o.w, rs);
  return auto_witness(rs, u, o.k, o.n);
}

void run_asdim_check(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  finish(o, to_document(check_asdim_pair(cover_arg(o.u, rs), cover_arg(o.v, rs), o.n)));
}

void run_asdim_skeleton(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const Cover w = witness_arg(o, rs, u);
  const SkeletonPU result = build_skeleton_pu(rs.space, u, w, o.k, o.n, par_of(o));
  save(o.pu_out, [&](std::ostream& out) { write_pu(out, result.f); });
  save(o.cover_out, [&](std::ostream& out) { write_cover(out, result.v); });
  finish(o, to_document(result));
}

void run_asdim_trim(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  if (o.pu.empty()) throw InputError("trim needs --pu");
  if (!o.budget) throw InputError("trim needs --budget");
  const PartitionOfUnity f = load_pu(o.pu);
  const TrimResult result = trim_to_cover(f, cover_arg(o.u, rs), o.n, chain_budget(rs.space, *o.budget), par_of(o));
  save(o.cover_out, [&](std::ostream& out) { write_cover(out, result.v); });
  finish(o, to_document(result));
}

void run_asdim_roundtrip(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const Cover w = witness_arg(o, rs, u);
  const Roundtrip result = asdim_roundtrip(rs.space, u, w, o.k, o.n, par_of(o));
  save(o.cover_out, [&](std::ostream& out) { write_cover(out, result.trim.v); });
  CertificateDocument doc = to_document(result);
  doc.params.insert(doc.params.begin(), {{"space", rs.spec.str()},
                                         {"k", std::to_string(o.k)},
                                         {"n", std::to_string(o.n)},
                                         {"witness_elements", std::to_string(w.size())}});
  finish(o, doc);
}

// ---- filler ---------------------------------------------------------------

void run_filler(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const FillerParams params = choose_filler_params(rational_arg(o.eps, "epsilon"), o.n);
  FillerResult result = [&] {
    if (o.pu.empty()) {
      if (rs.spec.kind != SpaceSpec::Kind::Line) {
        throw InputError("the built-in filler instance needs a line space; pass --pu, --v, --a and --budget");
      }
      const LineFillerInstance inst =
          o.constant ? line_filler_constant(rs.spec.n, params) : line_filler_instance(rs.spec.n, params);
      return filler(inst.f, inst.a, inst.u, inst.v, params, inst.space, inst.budget, par_of(o));
    }
    if (o.v.empty() || o.a.empty() || !o.budget) throw InputError("explicit filler input needs --v, --a and --budget");
    const auto [lo, hi] = range_arg(o.a);
    if (lo > hi || hi >= rs.space.size()) throw InputError("A = " + o.a + " is out of range");
    const PartitionOfUnity f = load_pu(o.pu);
    return filler(f, PointSet::interval(static_cast<PointId>(lo), static_cast<PointId>(hi)), cover_arg(o.u, rs),
                  cover_arg(o.v, rs), params, rs.space, *o.budget, par_of(o));
  }();
  save(o.pu_out, [&](std::ostream& out) { write_pu(out, result.h); });
  CertificateDocument doc = to_document(result);
  doc.params.insert(doc.params.begin(), {"space", rs.spec.str()});
  finish(o, doc);
}

// ---- oracle ---------------------------------------------------------------

void run_oracle_index(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const Cover v = o.v.empty() ? star_cover(u, u) : cover_arg(o.v, rs);
  std::size_t checked = 0;
  std::vector<std::int64_t> mismatch;
  for (ElementIndex s = 0; s < v.size() && mismatch.empty(); ++s) {
    for (PointId x = 0; x < u.universe_size(); ++x) {
      const ExtNat fast = chain_index(u, x, v[s]);
      const auto slow = oracle::enumerate_chain_index(u, x, v[s]);
      ++checked;
      const bool same = slow ? fast.is_finite() && fast.value() == *slow : fast.is_infinite();
      if (!same) {
        mismatch = {static_cast<std::int64_t>(s), static_cast<std::int64_t>(x)};
        break;
      }
    }
  }
  CertificateDocument doc;
  doc.construction = "oracle_index";
  doc.param("checked", checked).verdict("match", mismatch.empty()).witness("mismatch", mismatch);
  finish(o, doc);
}

void run_oracle_shrink(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const Cover v = cover_arg(o.v, rs);
  const Shrinking w = shrink_with_multiplicity(u, v);
  save(o.cover_out, [&](std::ostream& out) { write_cover(out, w.cover); });
  const auto failure = oracle::shrink_clause_failure(u, v, w.cover);
  CertificateDocument doc;
  doc.construction = "oracle_shrink";
  std::vector<std::int64_t> empty(w.empty_elements.begin(), w.empty_elements.end());
  doc.verdict("clauses", !failure).witness("empty_elements", empty);
  if (failure) std::cerr << *failure << '\n';
  finish(o, doc);
}

void run_oracle_witness(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  const Cover u = cover_arg(o.u, rs);
  const std::size_t d = o.budget.value_or(0);
  const auto found = find_witness_bruteforce(rs.space, u, o.n, d);
  if (found) save(o.cover_out, [&](std::ostream& out) { write_cover(out, *found); });
  CertificateDocument doc;
  doc.construction = "oracle_witness";
  doc.param("n", o.n).param("budget", d).verdict("found", found.has_value());
  if (found) doc.param("elements", found->size()).child(to_document(check_asdim_pair(u, *found, o.n)));
  finish(o, doc);
}

// ---- sweep ----------------------------------------------------------------

void run_sweep(const Options& o) {
  const RealizedSpace rs = realize(SpaceSpec::parse(o.space));
  if (rs.spec.kind != SpaceSpec::Kind::Line) throw InputError("sweep needs a line space");
  const auto [lo, hi] = range_arg(o.k_range);
  const auto rows = line_sweep(rs.spec.n, lo, hi, par_of(o));
  emit(o, [&](std::ostream& out) { write_sweep_csv(out, rows); });
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.variation <= r.bound; });
  throw Finished{ok ? 0 : 1};
}

int report(const Options& o, ErrorKind kind, const std::string& message, const std::string& witness = {}) {
  ErrorDocument doc{kind, message, witness};
  try {
    emit(o, [&](std::ostream& out) { write_error(out, doc); });
  } catch (const std::exception&) {
    write_error(std::cout, doc);
  }
  return kind == ErrorKind::Input ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Finite coarse spaces: covers, partitions of unity and asymptotic dimension certificates"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads (results do not depend on it)");
  app.add_option("--out", o.out, "Output file (default: standard output)");

  std::function<void()> action;
  auto bind = [&](CLI::App* cmd, std::function<void(const Options&)> run) {
    cmd->callback([&action, run, &o] { action = [run, &o] { run(o); }; });
  };
  auto space_opt = [&](CLI::App* cmd) {
    cmd->add_option("--space", o.space, "line<N>, grid<W>x<H>, rgg<N>:<radius>:<seed> or a space file");
  };

  auto* gen = app.add_subcommand("gen", "Generate spaces, covers and metrics");
  gen->require_subcommand(1);
  auto* gen_line_cmd = gen->add_subcommand("line", "Line with adjacent-pair gauge");
  gen_line_cmd->add_option("--n", o.n_points)->required();
  bind(gen_line_cmd, [](const Options& opt) { run_gen_space(opt, gen_line(opt.n_points)); });
  auto* gen_grid_cmd = gen->add_subcommand("grid", "Grid with unit-pair gauge");
  gen_grid_cmd->add_option("--width", o.width)->required();
  gen_grid_cmd->add_option("--height", o.height)->required();
  bind(gen_grid_cmd, [](const Options& opt) { run_gen_space(opt, gen_grid2d(opt.width, opt.height)); });
  auto* gen_rgg_cmd = gen->add_subcommand("rgg", "Random geometric space");
  gen_rgg_cmd->add_option("--n", o.n_points)->required();
  gen_rgg_cmd->add_option("--radius", o.radius);
  gen_rgg_cmd->add_option("--seed", o.seed);
  bind(gen_rgg_cmd, [](const Options& opt) {
    run_gen_space(opt, gen_random_geometric(opt.n_points, rational_arg(opt.radius, "radius"), opt.seed).space);
  });
  auto* gen_cover_cmd = gen->add_subcommand("cover", "Canonical covers of a generated space");
  space_opt(gen_cover_cmd);
  gen_cover_cmd->add_option("--kind", o.kind, "gauge, intervals, staggered, bricks, balls or star");
  gen_cover_cmd->add_option("--len", o.len, "Interval length or brick width");
  gen_cover_cmd->add_option("--brick-h", o.brick_h, "Brick height (default: --len)");
  gen_cover_cmd->add_option("--overlap", o.overlap, "Brick overlap: none, horizontal or full");
  gen_cover_cmd->add_option("--radius", o.radius, "Ball radius");
  gen_cover_cmd->add_option("--k", o.k, "Star iterations for --kind star");
  bind(gen_cover_cmd, run_gen_cover);
  auto* gen_metric_cmd = gen->add_subcommand("metric", "Metric of a generated space");
  space_opt(gen_metric_cmd);
  bind(gen_metric_cmd, run_gen_metric);

  auto* phi = app.add_subcommand("phi", "Barycentric partition of unity of U over V");
  space_opt(phi);
  phi->add_option("--u", o.u, "Cover file or 'gauge'");
  phi->add_option("--v", o.v, "Cover file")->required();
  phi->add_option("--d-cap", o.d_cap, "Dimension cap of the target nerve");
  phi->add_option("--eps", o.eps, "Variation bound for the certificate");
  phi->add_option("--budget", o.budget, "Chain-diameter budget (default: max gauge diameter of V)");
  phi->add_option("--pu-out", o.pu_out, "Write the partition of unity here");
  bind(phi, run_phi);

  auto* certify = app.add_subcommand("certify", "Certify a partition of unity file");
  space_opt(certify);
  certify->add_option("--pu", o.pu)->required();
  certify->add_option("--u", o.u, "Cover file or 'gauge'");
  certify->add_option("--eps", o.eps);
  certify->add_option("--budget", o.budget, "Chain-diameter budget");
  certify->add_option("--delta", o.delta, "Metric mode: certify as a δ-partition of unity");
  certify->add_option("--metric", o.metric, "Metric file (default: built-in metric of the space)");
  certify->add_option("--budget-metric", o.budget_metric, "Metric diameter budget");
  bind(certify, run_certify);

  auto* asdim = app.add_subcommand("asdim", "Asymptotic dimension constructions");
  asdim->require_subcommand(1);
  auto* check = asdim->add_subcommand("check", "Count V-elements meeting each U-element");
  space_opt(check);
  check->add_option("--u", o.u);
  check->add_option("--v", o.v)->required();
  check->add_option("--n", o.n);
  bind(check, run_asdim_check);
  auto* skeleton = asdim->add_subcommand("skeleton", "Skeleton partition of unity from a witness");
  auto* trim = asdim->add_subcommand("trim", "Trim star preimages to an asdim witness");
  auto* roundtrip = asdim->add_subcommand("roundtrip", "Skeleton then trim");
  for (auto* cmd : {skeleton, roundtrip}) {
    space_opt(cmd);
    cmd->add_option("--u", o.u);
    cmd->add_option("--w", o.w, "Witness cover (default: generator-backed search)");
    cmd->add_option("--k", o.k)->required();
    cmd->add_option("--n", o.n)->required();
    cmd->add_option("--cover-out", o.cover_out);
  }
  skeleton->add_option("--pu-out", o.pu_out);
  bind(skeleton, run_asdim_skeleton);
  bind(roundtrip, run_asdim_roundtrip);
  space_opt(trim);
  trim->add_option("--pu", o.pu)->required();
  trim->add_option("--u", o.u);
  trim->add_option("--n", o.n)->required();
  trim->add_option("--budget", o.budget)->required();
  trim->add_option("--cover-out", o.cover_out);
  bind(trim, run_asdim_trim);

  auto* fill = app.add_subcommand("filler", "Choose parameters and run the skeleton filler");
  space_opt(fill);
  fill->add_option("--eps", o.eps)->required();
  fill->add_option("--n", o.n)->required();
  fill->add_flag("--constant", o.constant, "Use the constant instance on a line");
  fill->add_option("--pu", o.pu, "Explicit f");
  fill->add_option("--u", o.u);
  fill->add_option("--v", o.v);
  fill->add_option("--a", o.a, "A as LO..HI");
  fill->add_option("--budget", o.budget);
  fill->add_option("--pu-out", o.pu_out);
  bind(fill, run_filler);

  auto* orc = app.add_subcommand("oracle", "Brute-force comparisons on tiny instances");
  orc->require_subcommand(1);
  auto* oidx = orc->add_subcommand("index", "Chain index against chain enumeration");
  auto* oshr = orc->add_subcommand("shrink", "Shrinking clauses");
  auto* owit = orc->add_subcommand("witness", "Exhaustive asdim witness search");
  for (auto* cmd : {oidx, oshr, owit}) {
    space_opt(cmd);
    cmd->add_option("--u", o.u);
  }
  oidx->add_option("--v", o.v, "Sets to index into (default: st(U, U))");
  oshr->add_option("--v", o.v)->required();
  oshr->add_option("--cover-out", o.cover_out);
  owit->add_option("--n", o.n);
  owit->add_option("--budget", o.budget, "Ball diameter bound");
  owit->add_option("--cover-out", o.cover_out);
  bind(oidx, run_oracle_index);
  bind(oshr, run_oracle_shrink);
  bind(owit, run_oracle_witness);

  auto* sweep = app.add_subcommand("sweep", "Variation of φ against k on a line");
  space_opt(sweep);
  sweep->add_option("--k", o.k_range, "LO..HI");
  bind(sweep, run_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(o, ErrorKind::Input, e.what());
  }

  try {
    action();
  } catch (const Finished& f) {
    return f.code;
  } catch (const InputError& e) {
    return report(o, ErrorKind::Input, e.what());
  } catch (const PreconditionError& e) {
    return report(o, ErrorKind::Precondition, e.what(), e.witness());
  } catch (const std::exception& e) {
    return report(o, ErrorKind::Internal, e.what());
  }
  return 0;
}
