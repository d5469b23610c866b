#include "cpv/check/generators.hpp"

#include <algorithm>

namespace cpv::check {

namespace {

std::vector<Scalar> distinct_points(Rng& rng, std::size_t count, std::int64_t lo, std::int64_t hi,
                                    std::int64_t den) {
  std::vector<std::int64_t> picks;
  const std::size_t available = static_cast<std::size_t>((hi - lo) * den + 1);
  count = std::min(count, available);
  while (picks.size() < count) {
    const std::int64_t k = rng.uniform(lo * den, hi * den);
    if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
  }
  std::sort(picks.begin(), picks.end());
  std::vector<Scalar> out;
  for (std::int64_t k : picks) out.emplace_back(Scalar(k, den));
  return out;
}

Parity random_parity(Rng& rng) { return rng.chance(1, 2) ? Parity::Odd : Parity::Even; }

}  // namespace

Barcode random_barcode(Rng& rng, const BarcodeShape& shape) {
  const std::size_t min_points = shape.allow_infinite ? 1 : 2;
  const auto npoints = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(min_points), static_cast<std::int64_t>(std::max(min_points, shape.max_points))));
  std::vector<Scalar> pts = distinct_points(rng, npoints, 0, shape.span, shape.denominator);
  const auto n = static_cast<std::int64_t>(pts.size());
  const auto nbars = rng.uniform(0, static_cast<std::int64_t>(shape.max_bars));
  std::vector<Bar> bars;
  for (std::int64_t i = 0; i < nbars; ++i) {
    // Index -1 is -inf and index n is +inf.
    const std::int64_t lo = shape.allow_infinite ? -1 : 0;
    const std::int64_t hi = shape.allow_infinite ? n : n - 1;
    const std::int64_t b = rng.uniform(lo, hi - 1);
    const std::int64_t d = rng.uniform(b + 1, hi);
    bars.push_back({b < 0 ? Scalar::neg_inf() : pts[static_cast<std::size_t>(b)],
                    d >= n ? Scalar::pos_inf() : pts[static_cast<std::size_t>(d)], random_parity(rng), false});
  }
  return {Spectrum(std::move(pts), Scalar(0), Scalar(shape.span)), std::move(bars)};
}

Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Gf2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.chance(1, 2));
  }
  return m;
}

Gf2Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Gf2Matrix m = random_matrix(rng, n, n);
    if (m.is_invertible()) return m;
  }
}

SampledModule random_module(Rng& rng, const ModuleShape& shape) {
  const auto npoints = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(shape.max_points)));
  std::vector<Scalar> pts = distinct_points(rng, npoints, 1, shape.span - 1, 2);

  std::vector<Scalar> edges{Scalar(0)};
  edges.insert(edges.end(), pts.begin(), pts.end());
  edges.push_back(Scalar(shape.span));

  SampledModule m;
  m.spectrum = Spectrum(pts, Scalar(0), Scalar(shape.span));
  std::vector<std::size_t> gap_of_sample;
  for (std::size_t g = 0; g + 1 < edges.size(); ++g) {
    const std::int64_t count = shape.extra_samples && rng.chance(1, 3) ? 2 : 1;
    const auto total = static_cast<std::int64_t>(shape.max_total_dim);
    GradedDim d;
    d.even = static_cast<std::size_t>(rng.uniform(0, total));
    d.odd = shape.allow_odd ? static_cast<std::size_t>(rng.uniform(0, total - static_cast<std::int64_t>(d.even))) : 0;
    for (std::int64_t t = 1; t <= count; ++t) {
      m.samples.push_back(edges[g] + (edges[g + 1] - edges[g]) * Scalar(t, count + 1));
      m.dims.push_back(d);
      gap_of_sample.push_back(g);
    }
  }
  for (std::size_t i = 0; i + 1 < m.samples.size(); ++i) {
    const GradedDim& from = m.dims[i];
    const GradedDim& to = m.dims[i + 1];
    if (gap_of_sample[i] == gap_of_sample[i + 1]) {
      m.maps.push_back({random_invertible(rng, from.even), random_invertible(rng, from.odd)});
    } else {
      m.maps.push_back({random_matrix(rng, to.even, from.even), random_matrix(rng, to.odd, from.odd)});
    }
  }
  return m;
}

}  // namespace cpv::check
