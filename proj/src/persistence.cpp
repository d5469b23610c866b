#include "cpv/persistence.hpp"

#include "cpv/error.hpp"

#include <algorithm>

namespace cpv {

Spectrum::Spectrum(std::vector<Scalar> points, Scalar lo, Scalar hi)
    : points_(std::move(points)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!lo_.is_finite() || !hi_.is_finite() || hi_ < lo_) {
    throw Error(ErrorKind::InvalidArgument, "spectrum horizon must be finite with lo <= hi");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Scalar& p = points_[i];
    if (!p.is_finite()) throw Error(ErrorKind::InvalidArgument, "spectrum point " + p.str() + " is not finite");
    if (p < lo_ || hi_ < p) {
      throw Error(ErrorKind::InvalidArgument, "spectrum point " + p.str() + " outside horizon [" + lo_.str() +
                                                  ", " + hi_.str() + "]");
    }
    if (i > 0 && !(points_[i - 1] < p)) {
      throw Error(ErrorKind::InvalidArgument, "spectrum points must be strictly increasing");
    }
  }
}

Spectrum Spectrum::from_unsorted(std::vector<Scalar> points, Scalar lo, Scalar hi) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {std::move(points), std::move(lo), std::move(hi)};
}

bool Spectrum::contains(const Scalar& s) const { return std::binary_search(points_.begin(), points_.end(), s); }

std::vector<Scalar> Spectrum::points_between(const Scalar& a, const Scalar& b) const {
  auto first = std::upper_bound(points_.begin(), points_.end(), a);
  auto last = std::lower_bound(first, points_.end(), b);
  return {first, last};
}

Barcode::Barcode(Spectrum s, std::vector<Bar> b) : spectrum(std::move(s)), bars(std::move(b)) {
  std::sort(bars.begin(), bars.end());
}

GradedDim Barcode::dim_at(const Scalar& s) const {
  GradedDim d;
  for (const Bar& bar : bars) {
    if (bar.contains(s)) ++d[bar.parity];
  }
  return d;
}

bool same_bars(const Barcode& a, const Barcode& b) {
  if (!(a.spectrum == b.spectrum) || a.bars.size() != b.bars.size()) return false;
  auto strip = [](std::vector<Bar> bars) {
    for (Bar& bar : bars) bar.truncated = false;
    std::sort(bars.begin(), bars.end());
    return bars;
  };
  return strip(a.bars) == strip(b.bars);
}

std::vector<std::string> validate_barcode(const Barcode& b) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    const Bar& bar = b.bars[i];
    const std::string tag = "bar " + std::to_string(i) + " (" + bar.birth.str() + ", " + bar.death.str() + ")";
    if (bar.birth.is_pos_inf()) out.push_back(tag + ": birth is +inf");
    if (bar.death.is_neg_inf()) out.push_back(tag + ": death is -inf");
    if (!(bar.birth < bar.death)) out.push_back(tag + ": birth must be strictly below death");
    if (bar.birth.is_finite() && !b.spectrum.contains(bar.birth)) out.push_back(tag + ": birth not in spectrum");
    if (bar.death.is_finite() && !b.spectrum.contains(bar.death)) out.push_back(tag + ": death not in spectrum");
    if (bar.truncated && !bar.death.is_pos_inf()) out.push_back(tag + ": truncated bar must have death inf");
  }
  return out;
}

namespace {

std::string dim_str(const GradedDim& d) {
  return "(" + std::to_string(d.even) + "," + std::to_string(d.odd) + ")";
}

}  // namespace

std::vector<ModuleViolation> validate_module(const SampledModule& m) {
  using K = ModuleViolation::Kind;
  std::vector<ModuleViolation> out;
  const std::size_t k = m.samples.size();
  if (k == 0) {
    out.push_back({K::EmptyGrid, 0, "module has no samples"});
    return out;
  }
  bool sorted = true;
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar& s = m.samples[i];
    if (!s.is_finite()) {
      out.push_back({K::NonFiniteSample, i, "sample " + s.str() + " is not finite"});
      sorted = false;
      continue;
    }
    if (m.spectrum.contains(s)) out.push_back({K::SampleOnSpectrum, i, "sample " + s.str() + " is a spectrum point"});
    if (i > 0 && m.samples[i - 1].is_finite() && !(m.samples[i - 1] < s)) {
      out.push_back({K::UnsortedSamples, i, "samples must be strictly increasing"});
      sorted = false;
    }
  }
  if (m.dims.size() != k) {
    out.push_back({K::ShapeMismatch, 0,
                   std::to_string(m.dims.size()) + " dims for " + std::to_string(k) + " samples"});
    return out;
  }
  if (m.maps.size() + 1 != k) {
    out.push_back({K::ShapeMismatch, 0,
                   std::to_string(m.maps.size()) + " maps for " + std::to_string(k) + " samples"});
    return out;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const GradedMatrix& f = m.maps[i];
    if (!(f.source() == m.dims[i]) || !(f.target() == m.dims[i + 1])) {
      out.push_back({K::ShapeMismatch, i,
                     "map " + std::to_string(i) + " is " + dim_str(f.source()) + " -> " + dim_str(f.target()) +
                         ", expected " + dim_str(m.dims[i]) + " -> " + dim_str(m.dims[i + 1])});
      shapes_ok = false;
    }
  }
  if (!sorted) return out;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto between = m.spectrum.points_between(m.samples[i], m.samples[i + 1]);
    if (between.size() > 1) {
      out.push_back({K::CrowdedGap, i,
                     std::to_string(between.size()) + " spectrum points between samples " + std::to_string(i) +
                         " and " + std::to_string(i + 1)});
    }
    if (between.empty() && shapes_ok && !m.maps[i].is_invertible()) {
      out.push_back({K::NonInvertible, i,
                     "map " + std::to_string(i) + " crosses no spectrum point but is not an isomorphism"});
    }
  }
  for (const Scalar& p : m.spectrum.points()) {
    if (p < m.samples.front() || m.samples.back() < p) {
      out.push_back({K::Unbracketed, 0, "spectrum point " + p.str() + " lacks a sample on each side"});
    }
  }
  return out;
}

namespace {

void require_shapes(const SampledModule& m) {
  for (const ModuleViolation& v : validate_module(m)) {
    using K = ModuleViolation::Kind;
    if (v.kind == K::ShapeMismatch || v.kind == K::EmptyGrid || v.kind == K::UnsortedSamples ||
        v.kind == K::NonFiniteSample) {
      throw Error(ErrorKind::InvalidModule, v.detail);
    }
  }
}

}  // namespace

GradedMatrix structure_map(const SampledModule& m, std::size_t i, std::size_t j) {
  if (i > j || j >= m.samples.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "structure map " + std::to_string(i) + " -> " + std::to_string(j) +
                                                " on " + std::to_string(m.samples.size()) + " samples");
  }
  GradedMatrix c = GradedMatrix::identity(m.dims.at(i));
  for (std::size_t t = i; t < j; ++t) c = m.maps.at(t) * c;
  return c;
}

GradedDim rank_invariant(const SampledModule& m, std::size_t i, std::size_t j) {
  return structure_map(m, i, j).rank();
}

Barcode decompose(const SampledModule& m) {
  require_shapes(m);
  const std::size_t k = m.samples.size();

  // rank[i][j] for i <= j, per parity.
  std::vector<std::vector<GradedDim>> rank(k, std::vector<GradedDim>(k));
  for (std::size_t i = 0; i < k; ++i) {
    GradedMatrix c = GradedMatrix::identity(m.dims[i]);
    for (std::size_t j = i; j < k; ++j) {
      rank[i][j] = c.rank();
      if (j + 1 < k) c = m.maps[j] * c;
    }
  }
  auto r = [&](std::ptrdiff_t i, std::ptrdiff_t j, Parity p) -> long long {
    if (i < 0 || j >= static_cast<std::ptrdiff_t>(k)) return 0;
    return static_cast<long long>(rank[i][j][p]);
  };

  auto snap = [&](std::size_t left, const char* what) -> Scalar {
    const auto between = m.spectrum.points_between(m.samples[left], m.samples[left + 1]);
    if (between.size() != 1) {
      throw Error(ErrorKind::NonUniqueSnap, std::string(what) + " between samples " + m.samples[left].str() +
                                                " and " + m.samples[left + 1].str() + " sees " +
                                                std::to_string(between.size()) + " spectrum points");
    }
    return between.front();
  };

  std::vector<Bar> bars;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(k); ++i) {
    for (std::ptrdiff_t j = i; j < static_cast<std::ptrdiff_t>(k); ++j) {
      for (Parity p : kParities) {
        const long long mult = r(i, j, p) - r(i - 1, j, p) - r(i, j + 1, p) + r(i - 1, j + 1, p);
        if (mult < 0) throw Error(ErrorKind::InvalidModule, "negative bar multiplicity; module is not functorial");
        if (mult == 0) continue;
        const Scalar birth = i == 0 ? Scalar::neg_inf() : snap(static_cast<std::size_t>(i - 1), "birth");
        const Scalar death =
            j + 1 == static_cast<std::ptrdiff_t>(k) ? Scalar::pos_inf() : snap(static_cast<std::size_t>(j), "death");
        for (long long n = 0; n < mult; ++n) bars.push_back({birth, death, p, false});
      }
    }
  }
  return {m.spectrum, std::move(bars)};
}

namespace {

std::vector<Scalar> fill(const Scalar& lo, const Scalar& hi, int density) {
  std::vector<Scalar> out;
  const Scalar step = (hi - lo) / Scalar(density + 1);
  for (int t = 1; t <= density; ++t) out.push_back(lo + step * Scalar(t));
  return out;
}

}  // namespace

SampledModule module_from_barcode(const Barcode& b, int grid_density) {
  if (grid_density < 1) throw Error(ErrorKind::InvalidArgument, "grid density must be positive");
  if (const auto bad = validate_barcode(b); !bad.empty()) throw Error(ErrorKind::InvalidBarcode, bad.front());

  const Spectrum& spec = b.spectrum;
  const auto& pts = spec.points();
  SampledModule m;
  m.spectrum = spec;
  if (pts.empty()) {
    if (!(spec.lo() < spec.hi())) throw Error(ErrorKind::EmptyHorizon, "horizon [" + spec.lo().str() + ", " +
                                                                            spec.hi().str() + "] has no interior");
    m.samples = fill(spec.lo(), spec.hi(), grid_density);
  } else {
    // Outer gaps stay inside the horizon when there is room, otherwise step
    // outside it so that every spectrum point is bracketed.
    const Scalar width = spec.lo() < spec.hi() ? spec.hi() - spec.lo() : Scalar(1);
    const Scalar below = spec.lo() < pts.front() ? spec.lo() : pts.front() - width;
    const Scalar above = pts.back() < spec.hi() ? spec.hi() : pts.back() + width;
    auto append = [&](const Scalar& lo, const Scalar& hi) {
      for (Scalar& s : fill(lo, hi, grid_density)) m.samples.push_back(std::move(s));
    };
    append(below, pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) append(pts[i], pts[i + 1]);
    append(pts.back(), above);
  }

  // Per sample and parity: indices of the bars alive there, in bar order.
  const std::size_t k = m.samples.size();
  std::vector<std::vector<std::size_t>> alive[2];
  for (Parity p : kParities) alive[to_int(p)].resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t x = 0; x < b.bars.size(); ++x) {
      if (b.bars[x].contains(m.samples[i])) alive[to_int(b.bars[x].parity)][i].push_back(x);
    }
    m.dims.push_back({alive[0][i].size(), alive[1][i].size()});
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    GradedMatrix f = GradedMatrix::zero(m.dims[i + 1], m.dims[i]);
    for (Parity p : kParities) {
      const auto& from = alive[to_int(p)][i];
      const auto& to = alive[to_int(p)][i + 1];
      for (std::size_t c = 0; c < from.size(); ++c) {
        const auto it = std::find(to.begin(), to.end(), from[c]);
        if (it != to.end()) f[p].set(static_cast<std::size_t>(it - to.begin()), c);
      }
    }
    m.maps.push_back(std::move(f));
  }
  return m;
}

}  // namespace cpv
