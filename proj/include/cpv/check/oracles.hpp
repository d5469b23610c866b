#pragma once

// Brute-force reference implementations. These deliberately share no code
// path with the library algorithms they are compared against.

#include "cpv/ellipsoid.hpp"
#include "cpv/persistence.hpp"

#include <optional>
#include <vector>

namespace cpv::check {

/// Interval decomposition by depth-first search over Z/2 basis changes: a
/// basis per sample such that every structure map sends basis vectors to
/// basis vectors or to zero, injectively. Needs per-parity dimension <= 8.
std::optional<Barcode> brute_force_decompose(const SampledModule& m);

/// Exhaustive minimum over all partial bijections (unmatched bars go to the
/// diagonal). Exponential; meant for <= 7 bars per side.
Scalar brute_force_bottleneck(const std::vector<Bar>& left, const std::vector<Bar>& right, bool graded = false);

/// Minimum number of open delta/2-balls covering `points`, searching all
/// center sets drawn from pairwise midpoints.
std::size_t brute_force_cover(const std::vector<Scalar>& points, const Scalar& delta);

/// s is k * a_j for some j and integer k, and lies in [0, T].
bool in_ellipsoid_spectrum(const Scalar& s, const EllipsoidParams& p);

/// Graded count of bars over each sample, read straight off the bars.
std::vector<GradedDim> bar_counts(const Barcode& b, const std::vector<Scalar>& samples);

/// Finite bar endpoints that are not spectrum points.
std::vector<Scalar> off_spectrum_endpoints(const Barcode& b);

}  // namespace cpv::check
