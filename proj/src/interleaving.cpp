#include "cpv/distances.hpp"

#include "cpv/error.hpp"

#include <algorithm>
#include <functional>

namespace cpv {

std::size_t representative_sample(const SampledModule& m, const Scalar& s) {
  const auto& pts = m.spectrum.points();
  auto gap_of = [&](const Scalar& x) {
    return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  if (m.spectrum.contains(s)) throw Error(ErrorKind::InvalidArgument, "parameter " + s.str() + " is a spectrum point");
  const std::size_t gap = gap_of(s);
  for (std::size_t i = 0; i < m.samples.size(); ++i) {
    if (gap_of(m.samples[i]) == gap) return i;
  }
  throw Error(ErrorKind::InvalidModule, "no sample in the spectrum gap containing " + s.str());
}

GradedMatrix module_map(const SampledModule& m, const Scalar& s, const Scalar& t) {
  if (t < s) throw Error(ErrorKind::InvalidArgument, "module_map needs s <= t");
  return structure_map(m, representative_sample(m, s), representative_sample(m, t));
}

namespace {

std::vector<Scalar> sorted_unique(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Scalar> shifted(const std::vector<Scalar>& pts, const Scalar& by) {
  std::vector<Scalar> out;
  out.reserve(pts.size());
  for (const Scalar& p : pts) out.push_back(p - by);
  return out;
}

std::vector<Scalar> merge(std::initializer_list<const std::vector<Scalar>*> parts) {
  std::vector<Scalar> all;
  for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
  return sorted_unique(std::move(all));
}

/// One interior point per open cell of the partition given by sorted cuts.
std::vector<Scalar> cell_points(const std::vector<Scalar>& cuts) {
  if (cuts.empty()) return {Scalar(0)};
  std::vector<Scalar> out{cuts.front() - Scalar(1)};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back(midpoint(cuts[i], cuts[i + 1]));
  out.push_back(cuts.back() + Scalar(1));
  return out;
}

std::size_t cell_of(const std::vector<Scalar>& cuts, const Scalar& y) {
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), y) - cuts.begin());
}

GradedDim dims_at(const SampledModule& m, const Scalar& s) { return m.dims[representative_sample(m, s)]; }

std::string dim_str(const GradedDim& d) {
  return "(" + std::to_string(d.even) + "," + std::to_string(d.odd) + ")";
}

/// Unknown maps of an interleaving problem and the equations they satisfy.
/// Variables 0..nf-1 are forward cells, nf.. are backward cells.
struct Constraint {
  enum class Kind { Natural, Composite } kind;
  // Natural: next * a == b * prev.  Composite: second * first == a.
  std::size_t first;
  std::size_t second;
  GradedMatrix a;
  GradedMatrix b;
  std::string label;

  bool holds(const std::vector<GradedMatrix>& x) const {
    if (kind == Kind::Natural) return x[second] * a == b * x[first];
    return x[second] * x[first] == a;
  }
};

struct Problem {
  std::vector<Scalar> fcuts;
  std::vector<Scalar> bcuts;
  std::vector<GradedDim> source;  // per variable
  std::vector<GradedDim> target;
  std::vector<Scalar> position;   // ordering key
  std::vector<Constraint> constraints;
  std::vector<std::string> straddles;
};

void add_family(Problem& p, const SampledModule& from, const SampledModule& to, const Scalar& delta,
                const std::vector<Scalar>& cuts, std::size_t offset, const std::string& name) {
  const auto pts = cell_points(cuts);
  for (const Scalar& x : pts) {
    p.source.push_back(dims_at(from, x));
    p.target.push_back(dims_at(to, x + delta));
    p.position.push_back(x);
  }
  for (std::size_t c = 0; c + 1 < pts.size(); ++c) {
    p.constraints.push_back({Constraint::Kind::Natural, offset + c, offset + c + 1,
                             module_map(from, pts[c], pts[c + 1]),
                             module_map(to, pts[c] + delta, pts[c + 1] + delta),
                             name + " maps fail to commute with structure maps across " + cuts[c].str()});
  }
}

void add_composites(Problem& p, const SampledModule& from, const SampledModule& to, const Scalar& delta,
                    const std::vector<Scalar>& first_cuts, std::size_t first_offset,
                    const std::vector<Scalar>& second_cuts, std::size_t second_offset, const std::string& name) {
  const auto& sf = from.spectrum.points();
  const auto& st = to.spectrum.points();
  const auto to_shift = shifted(st, delta);
  const auto from_shift2 = shifted(sf, delta + delta);
  const auto first_shift = first_cuts;
  const auto second_shift = shifted(second_cuts, delta);
  const auto refine = merge({&sf, &to_shift, &from_shift2, &first_shift, &second_shift});
  for (const Scalar& y : cell_points(refine)) {
    const std::size_t f = first_offset + cell_of(first_cuts, y);
    const std::size_t s = second_offset + cell_of(second_cuts, y + delta);
    p.constraints.push_back({Constraint::Kind::Composite, f, s, module_map(from, y, y + delta + delta), {},
                             name + " 2*delta composite differs from the structure map at s=" + y.str()});
  }
}

void find_straddles(Problem& p, const std::vector<Scalar>& cuts, const std::vector<Scalar>& required,
                    const std::string& name) {
  for (const Scalar& r : required) {
    if (!std::binary_search(cuts.begin(), cuts.end(), r)) {
      p.straddles.push_back(name + " family has no breakpoint at " + r.str());
    }
  }
}

Problem build(const SampledModule& m1, const SampledModule& m2, const Scalar& delta, std::vector<Scalar> fcuts,
              std::vector<Scalar> bcuts) {
  Problem p;
  p.fcuts = std::move(fcuts);
  p.bcuts = std::move(bcuts);
  const std::size_t nf = p.fcuts.size() + 1;
  find_straddles(p, p.fcuts, shifted_cuts(m1.spectrum, m2.spectrum, delta), "forward");
  find_straddles(p, p.bcuts, shifted_cuts(m2.spectrum, m1.spectrum, delta), "backward");
  if (!p.straddles.empty()) return p;
  add_family(p, m1, m2, delta, p.fcuts, 0, "forward");
  add_family(p, m2, m1, delta, p.bcuts, nf, "backward");
  add_composites(p, m1, m2, delta, p.fcuts, 0, p.bcuts, nf, "V");
  add_composites(p, m2, m1, delta, p.bcuts, nf, p.fcuts, 0, "W");
  return p;
}

}  // namespace

std::vector<Scalar> shifted_cuts(const Spectrum& source, const Spectrum& target, const Scalar& delta) {
  const auto shifted_target = shifted(target.points(), delta);
  return merge({&source.points(), &shifted_target});
}

std::vector<std::string> verify_interleaving(const InterleavingCertificate& c, const SampledModule& m1,
                                             const SampledModule& m2) {
  if (c.forward.maps.size() != c.forward.cuts.size() + 1 || c.backward.maps.size() != c.backward.cuts.size() + 1) {
    throw Error(ErrorKind::ShapeMismatch, "a map family needs one map per cell");
  }
  if (!std::is_sorted(c.forward.cuts.begin(), c.forward.cuts.end()) ||
      !std::is_sorted(c.backward.cuts.begin(), c.backward.cuts.end())) {
    throw Error(ErrorKind::InvalidArgument, "family breakpoints must be sorted");
  }
  if (!c.delta.is_finite() || c.delta < 0) throw Error(ErrorKind::InvalidArgument, "delta must be finite, >= 0");
  const Problem p = build(m1, m2, c.delta, c.forward.cuts, c.backward.cuts);
  if (!p.straddles.empty()) return p.straddles;

  std::vector<GradedMatrix> x = c.forward.maps;
  x.insert(x.end(), c.backward.maps.begin(), c.backward.maps.end());
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (!(x[v].source() == p.source[v]) || !(x[v].target() == p.target[v])) {
      throw Error(ErrorKind::ShapeMismatch, "map " + std::to_string(v) + " is " + dim_str(x[v].source()) + " -> " +
                                                dim_str(x[v].target()) + ", expected " + dim_str(p.source[v]) +
                                                " -> " + dim_str(p.target[v]));
    }
  }
  std::vector<std::string> out;
  for (const Constraint& k : p.constraints) {
    if (!k.holds(x)) out.push_back(k.label);
  }
  return out;
}

namespace {

std::uint64_t domain_size(const GradedDim& from, const GradedDim& to) {
  const std::size_t bits = from.even * to.even + from.odd * to.odd;
  if (bits >= 63) throw Error(ErrorKind::TooLarge, "map space too large to enumerate");
  return std::uint64_t{1} << bits;
}

GradedMatrix decode(const GradedDim& from, const GradedDim& to, std::uint64_t code) {
  const std::size_t even_bits = from.even * to.even;
  const std::uint64_t even_mask = (std::uint64_t{1} << even_bits) - 1;
  return {Gf2Matrix::from_bits(to.even, from.even, code & even_mask),
          Gf2Matrix::from_bits(to.odd, from.odd, code >> even_bits)};
}

}  // namespace

std::optional<InterleavingCertificate> find_interleaving(const SampledModule& m1, const SampledModule& m2,
                                                         const Scalar& delta, const InterleavingOptions& opts) {
  if (!opts.graded) return find_interleaving(ungraded(m1), ungraded(m2), delta, {true, opts.max_dim});
  for (const auto* m : {&m1, &m2}) {
    for (const GradedDim& d : m->dims) {
      if (d.total() > opts.max_dim) {
        throw Error(ErrorKind::TooLarge, "sample dimension " + std::to_string(d.total()) + " exceeds bound " +
                                             std::to_string(opts.max_dim));
      }
    }
  }
  Problem p = build(m1, m2, delta, shifted_cuts(m1.spectrum, m2.spectrum, delta),
                    shifted_cuts(m2.spectrum, m1.spectrum, delta));
  const std::size_t nf = p.fcuts.size() + 1;
  const std::size_t n = p.source.size();

  // Assign variables left to right along the parameter axis, forward cells
  // before backward cells at equal positions.
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p.position[a] != p.position[b]) return p.position[a] < p.position[b];
    return a < nf && b >= nf;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::vector<const Constraint*>> due(n);
  for (const Constraint& k : p.constraints) due[std::max(rank[k.first], rank[k.second])].push_back(&k);

  std::vector<GradedMatrix> x(n);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const std::size_t v = order[i];
    const std::uint64_t count = domain_size(p.source[v], p.target[v]);
    for (std::uint64_t code = 0; code < count; ++code) {
      x[v] = decode(p.source[v], p.target[v], code);
      bool ok = true;
      for (const Constraint* k : due[i]) {
        if (!k->holds(x)) {
          ok = false;
          break;
        }
      }
      if (ok && assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  InterleavingCertificate cert;
  cert.delta = delta;
  cert.forward.cuts = p.fcuts;
  cert.backward.cuts = p.bcuts;
  cert.forward.maps.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nf));
  cert.backward.maps.assign(x.begin() + static_cast<std::ptrdiff_t>(nf), x.end());
  return cert;
}

std::vector<Scalar> interleaving_candidates(const SampledModule& m1, const SampledModule& m2) {
  std::vector<Scalar> out{Scalar(0), m1.spectrum.hi() - m1.spectrum.lo(), m2.spectrum.hi() - m2.spectrum.lo()};
  const auto& a = m1.spectrum.points();
  const auto& b = m2.spectrum.points();
  for (const Scalar& p : a) {
    for (const Scalar& q : b) out.push_back(abs(p - q));
  }
  for (const auto* side : {&a, &b}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) out.push_back(((*side)[j] - (*side)[i]) / Scalar(2));
    }
  }
  return sorted_unique(std::move(out));
}

InterleavingResult interleaving_distance_bruteforce(const SampledModule& m1, const SampledModule& m2,
                                                    const InterleavingOptions& opts) {
  for (const auto* m : {&m1, &m2}) {
    if (const auto bad = validate_module(*m); !bad.empty()) throw Error(ErrorKind::InvalidModule, bad.front().detail);
  }
  for (const Scalar& delta : interleaving_candidates(m1, m2)) {
    if (auto cert = find_interleaving(m1, m2, delta, opts)) return {delta, std::move(cert)};
  }
  return {Scalar::pos_inf(), std::nullopt};
}

SampledModule ungraded(const SampledModule& m) {
  SampledModule out;
  out.spectrum = m.spectrum;
  out.samples = m.samples;
  for (const GradedDim& d : m.dims) out.dims.push_back({d.total(), 0});
  for (const GradedMatrix& f : m.maps) {
    const GradedDim s = f.source();
    const GradedDim t = f.target();
    Gf2Matrix block(t.total(), s.total());
    for (std::size_t r = 0; r < t.even; ++r) {
      for (std::size_t c = 0; c < s.even; ++c) block.set(r, c, f.even.get(r, c));
    }
    for (std::size_t r = 0; r < t.odd; ++r) {
      for (std::size_t c = 0; c < s.odd; ++c) block.set(t.even + r, s.even + c, f.odd.get(r, c));
    }
    out.maps.push_back({std::move(block), Gf2Matrix::zero(0, 0)});
  }
  return out;
}

}  // namespace cpv
