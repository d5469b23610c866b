#pragma once

#include "cpv/persistence.hpp"
#include "cpv/random.hpp"

namespace cpv::check {

struct BarcodeShape {
  std::size_t max_bars = 8;
  std::size_t max_points = 6;
  std::int64_t span = 10;  // points drawn from [0, span]
  std::int64_t denominator = 2;
  bool allow_infinite = true;
};

/// Random barcode over a random spectrum; every finite endpoint is a spectrum
/// point and the horizon [0, span] contains them all.
Barcode random_barcode(Rng& rng, const BarcodeShape& shape = {});

struct ModuleShape {
  std::size_t max_points = 4;
  std::size_t max_total_dim = 4;  // per sample, both parities together
  std::int64_t span = 8;
  bool allow_odd = true;
  bool extra_samples = true;  // sometimes two samples per gap
};

/// Random valid sampled module with arbitrary Z/2 maps across spectrum points
/// and random isomorphisms inside spectrum-free gaps.
SampledModule random_module(Rng& rng, const ModuleShape& shape = {});

/// Random invertible n x n matrix.
Gf2Matrix random_invertible(Rng& rng, std::size_t n);
Gf2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

}  // namespace cpv::check
