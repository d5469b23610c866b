#pragma once

#include "cpv/persistence.hpp"

#include <utility>
#include <vector>

namespace cpv {

/// Ellipsoid {r_a = 1} in C^n with Reeb periods a_1 <= ... <= a_n, observed
/// on the window [0, horizon]. Irrational periods are passed as rational
/// approximants.
class EllipsoidParams {
 public:
  /// Sorts `a`; throws InvalidArgument unless every a_j and the horizon are
  /// finite and positive and a is nonempty.
  EllipsoidParams(std::vector<Scalar> a, Scalar horizon);

  const std::vector<Scalar>& periods() const noexcept { return a_; }
  const Scalar& horizon() const noexcept { return horizon_; }
  std::size_t dimension() const noexcept { return a_.size(); }

 private:
  std::vector<Scalar> a_;
  Scalar horizon_;
};

/// Union of the multiples k * a_j inside [0, T].
Spectrum ellipsoid_spectrum(const EllipsoidParams& p);

struct CzIndex {
  Integer index;
  Parity parity;
};

/// n + 2 * sum_j floor(s / a_j) for s > 0 off the spectrum.
/// Throws OnSpectrum when some s / a_j is an integer.
CzIndex cz_index(const Scalar& s, const EllipsoidParams& p);

/// One bar per spectrum-free component of (0, T); the component touching T
/// is reported as a truncated (a, +inf) bar. All bars have parity n mod 2.
Barcode ellipsoid_barcode(const EllipsoidParams& p);

/// Maximal spectrum-free open intervals of (0, T) longer than `ell`, ascending.
std::vector<std::pair<Scalar, Scalar>> gaps_longer_than(const EllipsoidParams& p, const Scalar& ell);

}  // namespace cpv
