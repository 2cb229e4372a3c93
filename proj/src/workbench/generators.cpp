#include "coarse/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::size_t gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

FiniteCoarseSpace gen_line(std::size_t n) {
  if (n < 2) throw InputError("line needs at least 2 points, got " + std::to_string(n));
  std::vector<PointSet> pairs;
  pairs.reserve(n - 1);
  for (PointId x = 0; x + 1 < n; ++x) pairs.push_back(PointSet{x, x + 1});
  return FiniteCoarseSpace(n, Cover(n, std::move(pairs)));
}

FiniteMetricSpace line_metric(std::size_t n) {
  std::vector<Rational> d;
  d.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) d.push_back(from_size(gap(x, y)));
  }
  return FiniteMetricSpace(n, std::move(d));
}

Cover line_intervals(std::size_t n, std::size_t len) {
  if (len == 0) throw InputError("interval length must be positive");
  std::vector<PointSet> out;
  for (std::size_t start = 0; start < n; start += len) {
    out.push_back(PointSet::interval(static_cast<PointId>(start), static_cast<PointId>(std::min(start + len, n) - 1)));
  }
  return Cover(n, std::move(out));
}

Cover line_staggered(std::size_t n, std::size_t len) {
  if (len < 2 || len % 2 != 0) throw InputError("staggered length must be even and >= 2, got " + std::to_string(len));
  const std::size_t step = len / 2;
  std::vector<PointSet> out;
  for (std::size_t start = 0;; start += step) {
    const std::size_t last = std::min(start + len - 1, n - 1);
    out.push_back(PointSet::interval(static_cast<PointId>(start), static_cast<PointId>(last)));
    if (last == n - 1) break;
  }
  return Cover(n, std::move(out));
}

FiniteCoarseSpace gen_grid2d(std::size_t w, std::size_t h) {
  if (w < 2 || h < 2) throw InputError("grid needs width and height >= 2");
  std::vector<PointSet> pairs;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto id = static_cast<PointId>(y * w + x);
      if (x + 1 < w) pairs.push_back(PointSet{id, id + 1});
      if (y + 1 < h) pairs.push_back(PointSet{id, static_cast<PointId>(id + w)});
    }
  }
  return FiniteCoarseSpace(w * h, Cover(w * h, std::move(pairs)));
}

FiniteMetricSpace grid_metric(std::size_t w, std::size_t h) {
  const std::size_t n = w * h;
  std::vector<Rational> d;
  d.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) d.push_back(from_size(gap(a % w, b % w) + gap(a / w, b / w)));
  }
  return FiniteMetricSpace(n, std::move(d));
}

Cover grid_bricks(std::size_t w, std::size_t h, std::size_t bw, std::size_t bh, BrickOverlap overlap) {
  if (bw < 2 || bw % 2 != 0) throw InputError("brick width must be even and >= 2");
  if (bh < 1) throw InputError("brick height must be positive");
  const std::size_t close_x = overlap == BrickOverlap::None ? 0 : 1;
  const std::size_t close_y = overlap == BrickOverlap::Full ? 1 : 0;
  std::vector<PointSet> out;
  for (std::size_t row = 0; row * bh < h; ++row) {
    const std::size_t y0 = row * bh;
    const std::size_t y1 = std::min(y0 + bh - 1 + close_y, h - 1);
    const std::size_t shift = row % 2 == 1 ? bw / 2 : 0;
    // Brick j spans x in [j·bw − shift, (j+1)·bw − 1 − shift + close_x].
    for (std::size_t j = 0; j * bw < w + shift; ++j) {
      const long left = static_cast<long>(j * bw) - static_cast<long>(shift);
      const long right = left + static_cast<long>(bw) - 1 + static_cast<long>(close_x);
      const std::size_t x0 = static_cast<std::size_t>(std::max(0L, left));
      const std::size_t x1 = std::min(static_cast<std::size_t>(std::max(0L, right)), w - 1);
      if (right < 0 || x0 > x1) continue;
      std::vector<PointId> members;
      for (std::size_t y = y0; y <= y1; ++y) {
        for (std::size_t x = x0; x <= x1; ++x) members.push_back(static_cast<PointId>(y * w + x));
      }
      out.emplace_back(std::move(members));
    }
  }
  return Cover(w * h, std::move(out));
}

Cover grid_bricks(std::size_t w, std::size_t h, std::size_t len) {
  return grid_bricks(w, h, len, len, BrickOverlap::Full);
}

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

Rational Lcg::unit(unsigned bits) {
  const std::uint64_t k = next() >> (64 - bits);
  return Rational::from_parts(std::to_string(k), std::to_string(1ULL << bits));
}

GeometricSpace gen_random_geometric(std::size_t n, const Rational& radius, std::uint64_t seed) {
  if (n < 1) throw InputError("random geometric space needs at least one point");
  if (radius.sign() <= 0) throw InputError("radius must be positive, got " + radius.str());
  Lcg rng(seed);
  std::vector<std::pair<Rational, Rational>> points;
  std::set<std::pair<Rational, Rational>> seen;
  while (points.size() < n) {
    Rational x = rng.unit();
    Rational y = rng.unit();
    if (seen.insert({x, y}).second) points.emplace_back(std::move(x), std::move(y));
  }
  std::vector<Rational> d;
  d.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      d.push_back((points[a].first - points[b].first).abs() + (points[a].second - points[b].second).abs());
    }
  }
  FiniteMetricSpace metric(n, std::move(d));
  std::vector<PointSet> gauge;
  std::vector<char> linked(n, 0);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      if (metric.distance(a, b) <= radius) {
        gauge.push_back(PointSet{a, b});
        linked[a] = linked[b] = 1;
      }
    }
  }
  for (PointId a = 0; a < n; ++a) {
    if (!linked[a]) gauge.push_back(PointSet{a});
  }
  std::sort(gauge.begin(), gauge.end());
  FiniteCoarseSpace space(n, Cover(n, std::move(gauge)));
  return GeometricSpace{std::move(space), std::move(metric), std::move(points)};
}

}  // namespace coarse
