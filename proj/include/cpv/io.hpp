#pragma once

#include "cpv/distances.hpp"
#include "cpv/invariants.hpp"
#include "cpv/persistence.hpp"

#include <json.hpp>

#include <string>

namespace cpv::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

/// {"cpv":1,"spectrum":{...},"bars":[{"birth","death","parity"[,"truncated"]}]}
Json to_json(const Barcode& b);
Barcode barcode_from_json(const Json& j);

/// {"cpv":1,"spectrum":{...},"samples":[...],"dims":[[d0,d1],...],
///  "maps":[[even_rows, odd_rows], ...]}
Json to_json(const SampledModule& m);
SampledModule module_from_json(const Json& j);

/// {"delta":"p/q"|"inf","matching":[{"left","right","cost"}]}
Json to_json(const BottleneckResult& r);
Json to_json(const InterleavingResult& r);
Json to_json(const LipschitzReport& r);
Json to_json(const Cover& c);
Json to_json(const std::vector<ModuleViolation>& v);

/// Throws Error(Parse) on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& j);

}  // namespace cpv::io
