#include <doctest.h>

#include <sstream>

#include "coarse/certificates.hpp"
#include "coarse/error.hpp"
#include "coarse/generators.hpp"
#include "coarse/io.hpp"
#include "coarse/pipeline.hpp"
#include "random_instances.hpp"

using namespace coarse;
using coarse::testing::Rng;

namespace {

template <class T, class Write, class Read>
T roundtrip(const T& value, Write write, Read read) {
  std::stringstream s;
  write(s, value);
  return read(s);
}

Cover cover_from(const std::string& text) {
  std::istringstream in(text);
  return read_cover(in);
}

}  // namespace

TEST_SUITE("workbench") {

TEST_CASE("line generators") {
  const auto two = gen_line(2);
  CHECK(two.size() == 2);
  CHECK(two.gauge().elements() == std::vector<PointSet>{PointSet{0, 1}});
  CHECK_THROWS_AS(gen_line(1), InputError);
  CHECK(line_staggered(6, 4).elements() == std::vector<PointSet>{PointSet{0, 1, 2, 3}, PointSet{2, 3, 4, 5}});
  const auto v = line_staggered(200, 50);
  CHECK(v.size() == 7);
  CHECK(max_multiplicity(v) == 2);
  CHECK(v.elements().back() == PointSet::interval(150, 199));
  CHECK_THROWS_AS(line_staggered(10, 3), InputError);
  const auto blocks = line_intervals(10, 4);
  CHECK(blocks.elements() == std::vector<PointSet>{PointSet::interval(0, 3), PointSet::interval(4, 7), PointSet{8, 9}});
}

TEST_CASE("grid generators") {
  const auto g = gen_grid2d(4, 3);
  CHECK(g.size() == 12);
  CHECK(g.gauge().size() == 3 * 3 + 4 * 2);
  CHECK_THROWS_AS(gen_grid2d(1, 5), InputError);
  const auto m = grid_metric(4, 3);
  CHECK(m.distance(0, 11) == Rational(5));
  const auto bricks = grid_bricks(4, 4, 2);
  CHECK(bricks.first_uncovered() == std::nullopt);
  CHECK(max_multiplicity(bricks) <= 3);
  const auto part = grid_bricks(8, 6, 4, 2, BrickOverlap::None);
  CHECK(max_multiplicity(part) == 1);
  CHECK(max_multiplicity(grid_bricks(8, 6, 4, 2, BrickOverlap::Horizontal)) <= 2);
  CHECK_THROWS_AS(grid_bricks(8, 6, 3, 2, BrickOverlap::None), InputError);
}

TEST_CASE("random geometric spaces are deterministic") {
  const auto a = gen_random_geometric(40, Rational(1, 4), 7);
  const auto b = gen_random_geometric(40, Rational(1, 4), 7);
  CHECK(a.points == b.points);
  CHECK(a.space.gauge().elements() == b.space.gauge().elements());
  CHECK(a.points != gen_random_geometric(40, Rational(1, 4), 8).points);
  CHECK(a.space.gauge().first_uncovered() == std::nullopt);
  for (PointId x = 0; x < 40; ++x) {
    for (PointId y = x + 1; y < 40; ++y) CHECK(a.points[x] != a.points[y]);
  }
  // Radius 2 exceeds every ℓ¹ distance in the unit square.
  const auto full = gen_random_geometric(12, Rational(2), 3);
  CHECK(full.space.gauge().size() == 12 * 11 / 2);
  CHECK_THROWS_AS(gen_random_geometric(0, Rational(1), 1), InputError);
  Lcg lcg(1);
  const auto first = lcg.next();
  CHECK(Lcg(1).next() == first);
}

TEST_CASE("space specifications") {
  const auto line = SpaceSpec::parse("line200");
  CHECK(line.kind == SpaceSpec::Kind::Line);
  CHECK(line.n == 200);
  CHECK(line.str() == "line200");
  const auto grid = SpaceSpec::parse("grid40x30");
  CHECK(grid.kind == SpaceSpec::Kind::Grid2d);
  CHECK(grid.w == 40);
  CHECK(grid.h == 30);
  const auto rgg = SpaceSpec::parse("rgg50:1/5:9");
  CHECK(rgg.kind == SpaceSpec::Kind::RandomGeometric);
  CHECK(rgg.radius == Rational(1, 5));
  CHECK(rgg.seed == 9);
  CHECK(SpaceSpec::parse(rgg.str()).radius == Rational(1, 5));
  const auto file = SpaceSpec::parse("spaces/foo.txt");
  CHECK(file.kind == SpaceSpec::Kind::Explicit);
  CHECK(file.path == "spaces/foo.txt");
  CHECK(realize(line).space.size() == 200);
  CHECK(metric_of(realize(grid)).distance(0, 41) == Rational(2));
  CHECK(realize(rgg).metric.has_value());
  CHECK_THROWS_AS(metric_of(realize(SpaceSpec::parse("/nonexistent/space"))), InputError);
}

TEST_CASE("auto witnesses") {
  const auto line = realize(SpaceSpec::parse("line200"));
  const auto w = auto_witness(line, line.space.gauge(), 10, 1);
  CHECK(w.elements() == line_intervals(200, 43).elements());
  const auto grid = realize(SpaceSpec::parse("grid40x40"));
  const auto b = auto_witness(grid, grid.space.gauge(), 5, 2);
  CHECK(check_asdim_pair(star_cover(grid.space.gauge(), iterated_star(grid.space.gauge(), 5)), b, 2).passed);
  CHECK(auto_witness(line, line.space.gauge(), 10, 0).size() == 1);
}

TEST_CASE("space, cover, pu and metric files round-trip") {
  const auto space = gen_grid2d(3, 3);
  const auto s2 = roundtrip(space, write_space, read_space);
  CHECK(s2.size() == 9);
  CHECK(s2.gauge().elements() == space.gauge().elements());
  const auto m = line_metric(5);
  const auto m2 = roundtrip(m, write_metric, read_metric);
  for (PointId x = 0; x < 5; ++x) {
    for (PointId y = 0; y < 5; ++y) CHECK(m2.distance(x, y) == m.distance(x, y));
  }
  const auto f = barycentric_map(gen_line(6).gauge(), line_staggered(6, 4));
  CHECK(roundtrip(f, write_pu, read_pu) == f);
}

TEST_CASE("property: random covers round-trip") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = testing::uniform(rng, 1, 30);
    const Cover c = testing::random_cover(rng, size, testing::uniform(rng, 1, 10), 0.3);
    const Cover back = roundtrip(c, write_cover, read_cover);
    REQUIRE(back.universe_size() == size);
    REQUIRE(back.elements() == c.elements());
  }
}

TEST_CASE("malformed files are rejected with a line number") {
  CHECK_NOTHROW(cover_from("cover 1\npoints 2\nelements 1\n# a comment\ne 0 1\nend\n"));
  auto message = [](const std::string& text) {
    try {
      cover_from(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("cover 2\npoints 2\nelements 1\ne 0 1\nend\n").rfind("line 1:", 0) == 0);
  CHECK(message("cover 1\npoints 2\nelements 1\ne 0 5\nend\n").rfind("line 4:", 0) == 0);
  CHECK(message("cover 1\npoints 2\nelements 2\ne 0 1\nend\n") != "accepted");
  CHECK(message("cover 1\npoints 2\nelements 1\ne 0 1\n") != "accepted");
  CHECK(message("cover 1\npoints x\nelements 1\ne 0 1\nend\n").rfind("line 2:", 0) == 0);
  std::istringstream pu("pu 1\npoints 1\nvertices 1\nw 0 0 1 2\nend\n");
  CHECK_THROWS_AS(read_pu(pu), InputError);
  std::istringstream metric("metric 1\npoints 2\nend\n");
  CHECK_THROWS_AS(read_metric(metric), InputError);
  CHECK_THROWS_AS(load_cover("/nonexistent/cover"), InputError);
}

TEST_CASE("certificate documents round-trip with children") {
  CertificateDocument inner;
  inner.construction = "inner";
  inner.verdict("ok", false).measure("bound", ExtRational::infinity()).witness("empty", {});
  CertificateDocument doc;
  doc.construction = "outer";
  doc.param("space", "line10").param("n", std::size_t{3}).verdict("ok", true);
  doc.measure("value", Rational(-7, 3)).witness("pair", {4, -1}).child(inner);
  CHECK_FALSE(doc.passed());
  const auto back = certificate_from_text(to_text(doc));
  CHECK(back == doc);
  REQUIRE(back.find_child("inner") != nullptr);
  CHECK(*back.find_child("inner")->find_measure("bound") == ExtRational::infinity());
  CHECK(*back.find_param("n") == "3");
  CHECK(back.find_verdict("missing") == nullptr);

  const ErrorDocument err{ErrorKind::Precondition, "element 3 is too wide", "element 3"};
  CHECK(roundtrip(err, write_error, read_error) == err);
}

TEST_CASE("certificates of constructions") {
  const auto line = gen_line(200);
  const auto r = asdim_roundtrip(line, line.gauge(), line_intervals(200, 43), 10, 1);
  const auto doc = to_document(r);
  CHECK(doc.construction == "asdim_roundtrip");
  CHECK(doc.passed());
  REQUIRE(doc.find_child("build_skeleton_pu") != nullptr);
  REQUIRE(doc.find_child("trim_to_cover") != nullptr);
  CHECK(*doc.find_child("build_skeleton_pu")->find_child("certify_pu")->find_measure("epsilon") ==
        ExtRational(Rational(8, 5)));
  CHECK(certificate_from_text(to_text(doc)) == doc);
  const auto params = to_document(choose_filler_params(Rational(1), 1));
  CHECK(*params.find_param("k") == "257");
  CHECK(*params.find_param("delta") == "1/816");
  CHECK(*params.find_measure("term_budget") == ExtRational(Rational(1, 8)));
}

TEST_CASE("line sweep rows") {
  const auto rows = line_sweep(400, 1, 6);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.variation == Rational(1, static_cast<long>(row.k + 1)));
    CHECK(row.variation <= row.bound);
  }
  std::ostringstream csv;
  write_sweep_csv(csv, {rows[0]});
  CHECK(csv.str() == "k,variation_num,variation_den,bound_num,bound_den\n1,1,2,16,1\n");
  CHECK_THROWS_AS(line_sweep(400, 0, 3), InputError);
}

}  // TEST_SUITE
