#include "cpv/io.hpp"

#include "cpv/error.hpp"

#include <fstream>
#include <sstream>

namespace cpv::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_version(const Json& j) {
  const Json& v = field(j, "cpv");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) fail("unsupported schema version");
}

Json matrix_rows(const Gf2Matrix& m) { return m.to_rows(); }

Gf2Matrix matrix_from_json(const Json& j, std::size_t expected_cols) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  std::vector<std::vector<int>> rows;
  std::size_t cols = j.empty() ? expected_cols : 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array()) fail("matrix row must be an array");
    if (r == 0) cols = row.size();
    if (row.size() != cols) fail("ragged matrix rows");
    std::vector<int> vals;
    for (const Json& x : row) {
      if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) fail("matrix entries must be 0 or 1");
      vals.push_back(x.get<int>());
    }
    rows.push_back(std::move(vals));
  }
  return Gf2Matrix::from_rows(rows, cols);
}

std::size_t count_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail("dimension must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  fail("scalar must be a string \"p/q\", \"inf\", \"-inf\" or an integer");
}

Json to_json(const Spectrum& s) {
  Json pts = Json::array();
  for (const Scalar& p : s.points()) pts.push_back(to_json(p));
  return {{"points", pts}, {"horizon", Json::array({to_json(s.lo()), to_json(s.hi())})}};
}

Spectrum spectrum_from_json(const Json& j) {
  const Json& pts = field(j, "points");
  const Json& horizon = field(j, "horizon");
  if (!pts.is_array() || !horizon.is_array() || horizon.size() != 2) fail("bad spectrum");
  std::vector<Scalar> points;
  for (const Json& p : pts) points.push_back(scalar_from_json(p));
  try {
    return {std::move(points), scalar_from_json(horizon[0]), scalar_from_json(horizon[1])};
  } catch (const Error& e) {
    fail(std::string("bad spectrum: ") + e.what());
  }
}

Json to_json(const Barcode& b) {
  Json bars = Json::array();
  for (const Bar& bar : b.bars) {
    Json x = {{"birth", to_json(bar.birth)}, {"death", to_json(bar.death)}, {"parity", to_int(bar.parity)}};
    if (bar.truncated) x["truncated"] = true;
    bars.push_back(std::move(x));
  }
  return {{"cpv", kSchemaVersion}, {"spectrum", to_json(b.spectrum)}, {"bars", bars}};
}

Barcode barcode_from_json(const Json& j) {
  check_version(j);
  Spectrum spectrum = spectrum_from_json(field(j, "spectrum"));
  const Json& bars = field(j, "bars");
  if (!bars.is_array()) fail("bars must be an array");
  std::vector<Bar> out;
  for (const Json& x : bars) {
    const Json& parity = field(x, "parity");
    if (!parity.is_number_integer() || (parity.get<int>() != 0 && parity.get<int>() != 1)) fail("parity must be 0 or 1");
    bool truncated = false;
    if (x.contains("truncated")) {
      if (!x.at("truncated").is_boolean()) fail("truncated must be a boolean");
      truncated = x.at("truncated").get<bool>();
    }
    out.push_back({scalar_from_json(field(x, "birth")), scalar_from_json(field(x, "death")),
                   parity.get<int>() == 0 ? Parity::Even : Parity::Odd, truncated});
  }
  return {std::move(spectrum), std::move(out)};
}

Json to_json(const SampledModule& m) {
  Json samples = Json::array();
  for (const Scalar& s : m.samples) samples.push_back(to_json(s));
  Json dims = Json::array();
  for (const GradedDim& d : m.dims) dims.push_back(Json::array({d.even, d.odd}));
  Json maps = Json::array();
  for (const GradedMatrix& f : m.maps) maps.push_back(Json::array({matrix_rows(f.even), matrix_rows(f.odd)}));
  return {{"cpv", kSchemaVersion}, {"spectrum", to_json(m.spectrum)}, {"samples", samples}, {"dims", dims},
          {"maps", maps}};
}

SampledModule module_from_json(const Json& j) {
  check_version(j);
  SampledModule m;
  m.spectrum = spectrum_from_json(field(j, "spectrum"));
  const Json& samples = field(j, "samples");
  const Json& dims = field(j, "dims");
  const Json& maps = field(j, "maps");
  if (!samples.is_array() || !dims.is_array() || !maps.is_array()) fail("samples, dims and maps must be arrays");
  for (const Json& s : samples) m.samples.push_back(scalar_from_json(s));
  for (const Json& d : dims) {
    if (!d.is_array() || d.size() != 2) fail("dims entries must be [even, odd]");
    m.dims.push_back({count_from_json(d[0]), count_from_json(d[1])});
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Json& f = maps[i];
    if (!f.is_array() || f.size() != 2) fail("maps entries must be [even_rows, odd_rows]");
    const GradedDim from = i < m.dims.size() ? m.dims[i] : GradedDim{};
    m.maps.push_back({matrix_from_json(f[0], from.even), matrix_from_json(f[1], from.odd)});
  }
  return m;
}

Json to_json(const BottleneckResult& r) {
  Json pairs = Json::array();
  for (const MatchedPair& p : r.matching.pairs) {
    pairs.push_back({{"left", p.left ? Json(*p.left) : Json(nullptr)},
                     {"right", p.right ? Json(*p.right) : Json(nullptr)},
                     {"cost", to_json(p.cost)}});
  }
  return {{"delta", to_json(r.delta)}, {"matching", pairs}};
}

namespace {

Json family_json(const ShiftedMapFamily& f) {
  Json cuts = Json::array();
  for (const Scalar& c : f.cuts) cuts.push_back(to_json(c));
  Json maps = Json::array();
  for (const GradedMatrix& m : f.maps) maps.push_back(Json::array({matrix_rows(m.even), matrix_rows(m.odd)}));
  return {{"cuts", cuts}, {"maps", maps}};
}

}  // namespace

Json to_json(const InterleavingResult& r) {
  Json out = {{"delta", to_json(r.delta)}};
  if (r.certificate) {
    out["certificate"] = {{"forward", family_json(r.certificate->forward)},
                          {"backward", family_json(r.certificate->backward)}};
  }
  return out;
}

Json to_json(const LipschitzReport& r) {
  Json violations = Json::array();
  for (const LipschitzViolation& v : r.violations) violations.push_back({{"trial", v.trial}, {"detail", v.detail}});
  return {{"invariant", r.invariant}, {"trials", r.trials}, {"max_deviation", to_json(r.max_deviation)},
          {"violations", violations}};
}

Json to_json(const Cover& c) {
  Json centers = Json::array();
  for (const Scalar& x : c.centers) centers.push_back(to_json(x));
  return {{"K", c.count}, {"centers", centers}};
}

Json to_json(const std::vector<ModuleViolation>& v) {
  Json out = Json::array();
  for (const ModuleViolation& x : v) out.push_back({{"index", x.index}, {"detail", x.detail}});
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << text;
  if (!out) fail("write to '" + path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cpv::io
