#include "cpv/ellipsoid.hpp"

#include "cpv/error.hpp"

#include <algorithm>

namespace cpv {

EllipsoidParams::EllipsoidParams(std::vector<Scalar> a, Scalar horizon) : a_(std::move(a)), horizon_(std::move(horizon)) {
  if (a_.empty()) throw Error(ErrorKind::InvalidArgument, "ellipsoid needs at least one period");
  for (const Scalar& x : a_) {
    if (!x.is_finite() || !(Scalar(0) < x)) throw Error(ErrorKind::InvalidArgument, "period " + x.str() + " must be positive");
  }
  if (!horizon_.is_finite() || !(Scalar(0) < horizon_)) {
    throw Error(ErrorKind::InvalidArgument, "horizon " + horizon_.str() + " must be positive and finite");
  }
  std::sort(a_.begin(), a_.end());
}

Spectrum ellipsoid_spectrum(const EllipsoidParams& p) {
  std::vector<Scalar> pts;
  for (const Scalar& a : p.periods()) {
    const Integer last = floor(p.horizon() / a);
    for (Integer k = 0; k <= last; ++k) pts.push_back(Scalar(Rational(k)) * a);
  }
  return Spectrum::from_unsorted(std::move(pts), Scalar(0), p.horizon());
}

CzIndex cz_index(const Scalar& s, const EllipsoidParams& p) {
  if (!s.is_finite() || !(Scalar(0) < s)) throw Error(ErrorKind::InvalidArgument, "CZ index needs finite s > 0");
  Integer sum = 0;
  for (const Scalar& a : p.periods()) {
    const Scalar ratio = s / a;
    if (is_integer(ratio)) throw Error(ErrorKind::OnSpectrum, s.str() + " is a multiple of " + a.str());
    sum += floor(ratio);
  }
  const Integer index = Integer(p.dimension()) + 2 * sum;
  const Parity parity = (index % 2 == 0) ? Parity::Even : Parity::Odd;
  return {index, parity};
}

std::vector<std::pair<Scalar, Scalar>> gaps_longer_than(const EllipsoidParams& p, const Scalar& ell) {
  if (!ell.is_finite() || ell < Scalar(0)) throw Error(ErrorKind::InvalidArgument, "gap length must be >= 0");
  const Spectrum spec = ellipsoid_spectrum(p);
  std::vector<Scalar> cuts = spec.points();
  if (cuts.back() < p.horizon()) cuts.push_back(p.horizon());
  std::vector<std::pair<Scalar, Scalar>> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (ell < cuts[i + 1] - cuts[i]) out.emplace_back(cuts[i], cuts[i + 1]);
  }
  return out;
}

Barcode ellipsoid_barcode(const EllipsoidParams& p) {
  Spectrum spec = ellipsoid_spectrum(p);
  const Parity parity = parity_of(static_cast<long long>(p.dimension()));
  std::vector<Bar> bars;
  for (const auto& [lo, hi] : gaps_longer_than(p, Scalar(0))) {
    if (hi == p.horizon()) {
      bars.push_back({lo, Scalar::pos_inf(), parity, true});
    } else {
      bars.push_back({lo, hi, parity, false});
    }
  }
  return {std::move(spec), std::move(bars)};
}

}  // namespace cpv
