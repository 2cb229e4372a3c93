#include "coarse/pipeline.hpp"

#include <ostream>
#include <regex>

#include "coarse/certificates.hpp"
#include "coarse/error.hpp"
#include "coarse/generators.hpp"
#include "coarse/io.hpp"

namespace coarse {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::size_t parse_size(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw InputError("bad integer '" + s + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InputError("bad integer '" + s + "'");
  }
}

}  // namespace

SpaceSpec SpaceSpec::parse(const std::string& text) {
  static const std::regex line(R"(line(\d+))");
  static const std::regex grid(R"(grid(\d+)x(\d+))");
  static const std::regex rgg(R"(rgg(\d+):([0-9/]+):(\d+))");
  std::smatch m;
  SpaceSpec spec;
  if (std::regex_match(text, m, line)) {
    spec.kind = Kind::Line;
    spec.n = parse_size(m[1]);
  } else if (std::regex_match(text, m, grid)) {
    spec.kind = Kind::Grid2d;
    spec.w = parse_size(m[1]);
    spec.h = parse_size(m[2]);
  } else if (std::regex_match(text, m, rgg)) {
    spec.kind = Kind::RandomGeometric;
    spec.n = parse_size(m[1]);
    spec.radius = Rational::parse(m[2].str());
    spec.seed = parse_size(m[3]);
  } else {
    spec.kind = Kind::Explicit;
    spec.path = text;
  }
  return spec;
}

std::string SpaceSpec::str() const {
  switch (kind) {
    case Kind::Line: return "line" + std::to_string(n);
    case Kind::Grid2d: return "grid" + std::to_string(w) + "x" + std::to_string(h);
    case Kind::RandomGeometric: return "rgg" + std::to_string(n) + ":" + radius.str() + ":" + std::to_string(seed);
    case Kind::Explicit: return path;
  }
  return path;
}

RealizedSpace realize(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceSpec::Kind::Line: return RealizedSpace{spec, gen_line(spec.n), std::nullopt};
    case SpaceSpec::Kind::Grid2d: return RealizedSpace{spec, gen_grid2d(spec.w, spec.h), std::nullopt};
    case SpaceSpec::Kind::RandomGeometric: {
      auto g = gen_random_geometric(spec.n, spec.radius, spec.seed);
      return RealizedSpace{spec, std::move(g.space), std::move(g.metric)};
    }
    case SpaceSpec::Kind::Explicit: return RealizedSpace{spec, load_space(spec.path), std::nullopt};
  }
  throw InputError("unknown space kind");
}

FiniteMetricSpace metric_of(const RealizedSpace& space) {
  if (space.metric) return *space.metric;
  switch (space.spec.kind) {
    case SpaceSpec::Kind::Line: return line_metric(space.spec.n);
    case SpaceSpec::Kind::Grid2d: return grid_metric(space.spec.w, space.spec.h);
    default: throw InputError("space '" + space.spec.str() + "' has no built-in metric; pass a metric file");
  }
}

Cover auto_witness(const RealizedSpace& space, const Cover& u, std::size_t k, std::size_t n) {
  const Cover probe = star_cover(u, iterated_star(u, k));
  const auto& spec = space.spec;
  if (spec.kind == SpaceSpec::Kind::Line) {
    for (std::size_t len = 1; len <= spec.n; ++len) {
      Cover w = line_intervals(spec.n, len);
      if (check_asdim_pair(probe, w, n).passed) return w;
    }
  } else if (spec.kind == SpaceSpec::Kind::Grid2d) {
    for (std::size_t bh = 1; bh <= spec.h; ++bh) {
      Cover w = grid_bricks(spec.w, spec.h, 2 * bh, bh, BrickOverlap::Full);
      if (check_asdim_pair(probe, w, n).passed) return w;
    }
  } else {
    throw InputError("no generator-backed witness for '" + spec.str() + "'; pass one explicitly");
  }
  throw InputError("no generator-backed witness for '" + spec.str() + "' at k = " + std::to_string(k) +
                   ", n = " + std::to_string(n));
}

Roundtrip asdim_roundtrip(const FiniteCoarseSpace& space, const Cover& u, const Cover& w, std::size_t k,
                          std::size_t n, Parallelism par) {
  SkeletonPU skeleton = build_skeleton_pu(space, u, w, k, n, par);
  TrimResult trim = trim_to_cover(skeleton.f, u, n, chain_budget(space, skeleton.declared_budget), par);
  return Roundtrip{std::move(skeleton), std::move(trim)};
}

CertificateDocument to_document(const Roundtrip& r) {
  CertificateDocument doc;
  doc.construction = "asdim_roundtrip";
  doc.child(to_document(r.skeleton)).child(to_document(r.trim));
  return doc;
}

namespace {

struct LineShape {
  FiniteCoarseSpace space;
  Cover u;
  Cover v;
  std::size_t a_end;
  std::size_t ramp_end;
};

LineShape line_shape(std::size_t n, const FillerParams& params) {
  FiniteCoarseSpace space = gen_line(n);
  Cover u = space.gauge();
  const std::size_t step = 2 * params.k + 1;
  Cover v = line_staggered(n, 2 * step);
  if (n < 3 || v.size() < 3) throw InputError("line of " + std::to_string(n) + " points is too short for k = " +
                                               std::to_string(params.k));
  const std::size_t a_end = n / 3 - 1;
  const std::size_t ramp_end = v[1].back();
  if (ramp_end <= a_end + 1) throw InputError("A reaches past the second element of V");
  return LineShape{std::move(space), std::move(u), std::move(v), a_end, ramp_end};
}

}  // namespace

LineFillerInstance line_filler_instance(std::size_t n, const FillerParams& params) {
  LineShape shape = line_shape(n, params);
  const Rational eta = params.delta / Rational(8);
  const Rational span = from_size(shape.ramp_end - shape.a_end);
  std::vector<BarycentricPoint> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Rational wa = eta;
    Rational wc(0);
    if (x > shape.a_end && x < shape.ramp_end) {
      wa = eta * from_size(shape.ramp_end - x) / span;
      wc = eta * from_size(x - shape.a_end) / span;
    } else if (x >= shape.ramp_end) {
      wa = Rational(0);
      wc = eta;
    }
    values.emplace_back(std::vector<BarycentricPoint::Entry>{{0, wa}, {1, wc}, {2, Rational(1) - wa - wc}});
  }
  PartitionOfUnity f(3, std::move(values));
  return LineFillerInstance{std::move(shape.space), std::move(shape.u), std::move(shape.v),
                            PointSet::interval(0, static_cast<PointId>(shape.a_end)), std::move(f), n - 1};
}

LineFillerInstance line_filler_constant(std::size_t n, const FillerParams& params) {
  LineShape shape = line_shape(n, params);
  PartitionOfUnity f(1, std::vector<BarycentricPoint>(n, BarycentricPoint::vertex(0)));
  return LineFillerInstance{std::move(shape.space), std::move(shape.u), std::move(shape.v),
                            PointSet::interval(0, static_cast<PointId>(shape.a_end)), std::move(f), n - 1};
}

std::vector<SweepRow> line_sweep(std::size_t n, std::size_t k_min, std::size_t k_max, Parallelism par) {
  if (k_min < 1 || k_min > k_max) throw InputError("sweep needs 1 <= k_min <= k_max");
  const FiniteCoarseSpace space = gen_line(n);
  std::vector<SweepRow> rows;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const Cover v = line_staggered(n, 2 * (2 * k + 1));
    const PartitionOfUnity phi = barycentric_map(space.gauge(), v, std::nullopt, par);
    rows.push_back(SweepRow{k, variation(phi, space.gauge(), par).value, Rational(16) / from_size(k)});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "k,variation_num,variation_den,bound_num,bound_den\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.variation.numerator() << ',' << r.variation.denominator() << ',' << r.bound.numerator()
        << ',' << r.bound.denominator() << '\n';
  }
}

}  // namespace coarse
