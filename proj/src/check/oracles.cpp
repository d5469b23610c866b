#include "cpv/check/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace cpv::check {

namespace {

using Vec = std::uint32_t;

std::vector<Vec> row_masks(const Gf2Matrix& m) {
  std::vector<Vec> rows(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) rows[r] |= Vec{1} << c;
    }
  }
  return rows;
}

Vec apply(const std::vector<Vec>& rows, Vec v) {
  Vec out = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (std::popcount(rows[r] & v) % 2 == 1) out |= Vec{1} << r;
  }
  return out;
}

/// Inserts v into an echelon set; false if v is dependent on it.
bool absorb(std::vector<Vec>& echelon, Vec v) {
  for (Vec e : echelon) v = std::min(v, v ^ e);
  if (v == 0) return false;
  echelon.push_back(v);
  std::sort(echelon.begin(), echelon.end(), std::greater<>());
  return true;
}

/// All ways to extend the independent set `fixed` to a basis of GF(2)^dim.
/// Each extension is an increasing list of vectors.
void completions(std::size_t dim, const std::vector<Vec>& fixed, const std::function<bool(const std::vector<Vec>&)>& visit) {
  std::vector<Vec> echelon;
  for (Vec v : fixed) absorb(echelon, v);
  const std::size_t need = dim - echelon.size();
  const Vec top = dim == 0 ? 0 : (Vec{1} << dim) - 1;
  std::vector<Vec> chosen;
  std::function<bool(Vec, std::vector<Vec>)> rec = [&](Vec next, std::vector<Vec> ech) -> bool {
    if (chosen.size() == need) return visit(chosen);
    for (Vec v = next; v <= top && v != 0; ++v) {
      std::vector<Vec> grown = ech;
      if (!absorb(grown, v)) continue;
      chosen.push_back(v);
      if (rec(v + 1, grown)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(1, echelon);
}

struct Interval {
  std::size_t first;
  std::size_t last;
};

/// Bars (as sample-index ranges) for one parity, or nullopt if no normal
/// form is found.
std::optional<std::vector<Interval>> normal_form(const std::vector<std::size_t>& dims,
                                                 const std::vector<std::vector<Vec>>& maps) {
  const std::size_t k = dims.size();
  std::vector<std::vector<Vec>> basis(k);
  // parent[i][x]: index in basis[i-1] of the vector mapped onto basis[i][x].
  std::vector<std::vector<std::ptrdiff_t>> parent(k);

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i + 1 == k) return true;
    std::vector<Vec> images;
    std::vector<std::ptrdiff_t> sources;
    std::vector<Vec> echelon;
    for (std::size_t x = 0; x < basis[i].size(); ++x) {
      const Vec img = apply(maps[i], basis[i][x]);
      if (img == 0) continue;
      if (!absorb(echelon, img)) return false;
      images.push_back(img);
      sources.push_back(static_cast<std::ptrdiff_t>(x));
    }
    bool found = false;
    completions(dims[i + 1], images, [&](const std::vector<Vec>& extra) {
      basis[i + 1] = images;
      basis[i + 1].insert(basis[i + 1].end(), extra.begin(), extra.end());
      parent[i + 1] = sources;
      parent[i + 1].resize(basis[i + 1].size(), -1);
      found = dfs(i + 1);
      return found;
    });
    return found;
  };

  bool found = false;
  completions(dims[0], {}, [&](const std::vector<Vec>& start) {
    basis[0] = start;
    parent[0].assign(start.size(), -1);
    found = dfs(0);
    return found;
  });
  if (!found) return std::nullopt;

  std::vector<Interval> bars;
  std::vector<std::size_t> open(basis[0].size());  // bar id per basis vector at current sample
  for (std::size_t x = 0; x < basis[0].size(); ++x) {
    open[x] = bars.size();
    bars.push_back({0, 0});
  }
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<std::size_t> next(basis[i].size());
    for (std::size_t x = 0; x < basis[i].size(); ++x) {
      if (parent[i][x] >= 0) {
        next[x] = open[static_cast<std::size_t>(parent[i][x])];
      } else {
        next[x] = bars.size();
        bars.push_back({i, i});
      }
      bars[next[x]].last = i;
    }
    open = std::move(next);
  }
  return bars;
}

std::optional<Scalar> lone_point(const Spectrum& spec, const Scalar& a, const Scalar& b) {
  std::optional<Scalar> hit;
  for (const Scalar& p : spec.points()) {
    if (a < p && p < b) {
      if (hit) return std::nullopt;
      hit = p;
    }
  }
  return hit;
}

Scalar gap(const Scalar& x, const Scalar& y) {
  if (x.is_finite() && y.is_finite()) return x < y ? y - x : x - y;
  return x.kind() == y.kind() ? Scalar(0) : Scalar::pos_inf();
}

Scalar pair_cost(const Bar& a, const Bar& b) { return std::max(gap(a.birth, b.birth), gap(a.death, b.death)); }

Scalar diagonal_cost(const Bar& a) {
  if (!a.birth.is_finite() || !a.death.is_finite()) return Scalar::pos_inf();
  return (a.death - a.birth) / Scalar(2);
}

}  // namespace

std::optional<Barcode> brute_force_decompose(const SampledModule& m) {
  const std::size_t k = m.samples.size();
  std::vector<Bar> bars;
  for (Parity p : kParities) {
    std::vector<std::size_t> dims;
    for (const GradedDim& d : m.dims) {
      if (d[p] > 8) return std::nullopt;
      dims.push_back(d[p]);
    }
    std::vector<std::vector<Vec>> maps;
    for (const GradedMatrix& f : m.maps) maps.push_back(row_masks(f[p]));
    const auto intervals = normal_form(dims, maps);
    if (!intervals) return std::nullopt;
    for (const Interval& iv : *intervals) {
      Scalar birth = Scalar::neg_inf();
      Scalar death = Scalar::pos_inf();
      if (iv.first > 0) {
        const auto s = lone_point(m.spectrum, m.samples[iv.first - 1], m.samples[iv.first]);
        if (!s) return std::nullopt;
        birth = *s;
      }
      if (iv.last + 1 < k) {
        const auto s = lone_point(m.spectrum, m.samples[iv.last], m.samples[iv.last + 1]);
        if (!s) return std::nullopt;
        death = *s;
      }
      bars.push_back({birth, death, p, false});
    }
  }
  return Barcode(m.spectrum, std::move(bars));
}

Scalar brute_force_bottleneck(const std::vector<Bar>& left, const std::vector<Bar>& right, bool graded) {
  Scalar best = Scalar::pos_inf();
  std::vector<bool> used(right.size(), false);
  std::function<void(std::size_t, Scalar)> rec = [&](std::size_t i, Scalar worst) {
    if (!(worst < best)) return;
    if (i == left.size()) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (!used[j]) worst = std::max(worst, diagonal_cost(right[j]));
      }
      best = std::min(best, worst);
      return;
    }
    rec(i + 1, std::max(worst, diagonal_cost(left[i])));
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j] || (graded && left[i].parity != right[j].parity)) continue;
      used[j] = true;
      rec(i + 1, std::max(worst, pair_cost(left[i], right[j])));
      used[j] = false;
    }
  };
  rec(0, Scalar(0));
  return best;
}

std::size_t brute_force_cover(const std::vector<Scalar>& points, const Scalar& delta) {
  std::vector<Scalar> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Scalar> candidates;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) candidates.push_back((pts[i] + pts[j]) / Scalar(2));
  }
  const Scalar radius = delta / Scalar(2);
  auto covers = [&](const Scalar& c, const Scalar& e) { return gap(c, e) < radius; };

  // Iterative deepening; every cover contains a center near the leftmost
  // uncovered point, so branching on those candidates is exhaustive.
  std::function<bool(std::vector<bool>&, std::size_t)> search = [&](std::vector<bool>& covered, std::size_t budget) {
    const auto it = std::find(covered.begin(), covered.end(), false);
    if (it == covered.end()) return true;
    if (budget == 0) return false;
    const Scalar& target = pts[static_cast<std::size_t>(it - covered.begin())];
    for (const Scalar& c : candidates) {
      if (!covers(c, target)) continue;
      std::vector<bool> next = covered;
      for (std::size_t x = 0; x < pts.size(); ++x) {
        if (covers(c, pts[x])) next[x] = true;
      }
      if (search(next, budget - 1)) return true;
    }
    return false;
  };
  for (std::size_t k = 0;; ++k) {
    std::vector<bool> covered(pts.size(), false);
    if (search(covered, k)) return k;
  }
}

bool in_ellipsoid_spectrum(const Scalar& s, const EllipsoidParams& p) {
  if (!s.is_finite() || s < Scalar(0) || p.horizon() < s) return false;
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  for (const Scalar& a : p.periods()) {
    // s / a = (ps * qa) / (qs * pa) is an integer iff the denominator divides.
    const Integer num = numerator(s.value()) * denominator(a.value());
    const Integer den = denominator(s.value()) * numerator(a.value());
    if (num % den == 0) return true;
  }
  return false;
}

std::vector<GradedDim> bar_counts(const Barcode& b, const std::vector<Scalar>& samples) {
  std::vector<GradedDim> out;
  for (const Scalar& s : samples) {
    GradedDim d;
    for (const Bar& bar : b.bars) {
      if (bar.birth < s && s < bar.death) ++d[bar.parity];
    }
    out.push_back(d);
  }
  return out;
}

std::vector<Scalar> off_spectrum_endpoints(const Barcode& b) {
  std::vector<Scalar> out;
  for (const Bar& bar : b.bars) {
    for (const Scalar* e : {&bar.birth, &bar.death}) {
      if (!e->is_finite()) continue;
      const auto& pts = b.spectrum.points();
      if (std::find(pts.begin(), pts.end(), *e) == pts.end()) out.push_back(*e);
    }
  }
  return out;
}

}  // namespace cpv::check
