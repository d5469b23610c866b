#include "cpv/check/generators.hpp"
#include "cpv/ellipsoid.hpp"
#include "cpv/error.hpp"
#include "cpv/io.hpp"
#include "cpv/svg.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace cpv;
using namespace cpv::testing;

TEST(Json, ScalarForms) {
  EXPECT_EQ(io::to_json(S("3/2")), "3/2");
  EXPECT_EQ(io::to_json(S(2)), "2/1");
  EXPECT_EQ(io::to_json(kInf), "inf");
  EXPECT_EQ(io::scalar_from_json(io::Json("-inf")), kNegInf);
  EXPECT_EQ(io::scalar_from_json(io::Json(4)), S(4));
  EXPECT_THROW(io::scalar_from_json(io::Json(0.5)), Error);
  EXPECT_THROW(io::scalar_from_json(io::Json("0.5")), Error);
}

TEST(Json, BarcodeRoundTrip) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const Barcode b = check::random_barcode(rng);
    const io::Json j = io::to_json(b);
    EXPECT_EQ(io::barcode_from_json(io::Json::parse(io::dump(j))), b);
  }
  const Barcode e = ellipsoid_barcode(EllipsoidParams({S(1), S(1)}, S(3)));
  EXPECT_EQ(io::barcode_from_json(io::to_json(e)), e);
}

TEST(Json, ModuleRoundTrip) {
  Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const SampledModule m = check::random_module(rng);
    const SampledModule back = io::module_from_json(io::Json::parse(io::dump(io::to_json(m))));
    EXPECT_EQ(back.samples, m.samples);
    EXPECT_EQ(back.maps, m.maps);
    EXPECT_EQ(decompose(back), decompose(m));
  }
}

TEST(Json, MalformedInputIsParseError) {
  const auto parse_kind = [](const char* text) {
    try {
      io::barcode_from_json(io::Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    } catch (const io::Json::exception&) {
      return ErrorKind::Parse;
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(parse_kind(R"({"cpv":1})"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind(R"({"cpv":1,"spectrum":{"points":["1/1"],"horizon":["2/1","0/1"]},"bars":[]})"),
            ErrorKind::Parse);
  EXPECT_THROW(io::read_json_file("/nonexistent/cpv.json"), Error);
}

TEST(Svg, DrawsEveryBar) {
  const Barcode b = ellipsoid_barcode(EllipsoidParams({S(1), S("3/2")}, S(4)));
  const std::string svg = barcode_svg(b);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  // One solid stroke per bar; truncated bars add a dashed tail.
  const auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  const std::size_t lines = count("stroke=\"#ff7f0e\"/>") + count("stroke=\"#1f77b4\"/>");
  EXPECT_EQ(count("stroke-dasharray"), 1U);
  EXPECT_EQ(lines, b.bars.size());
  EXPECT_NE(svg.find("3/2"), std::string::npos);
  EXPECT_NE(barcode_svg(Barcode(Spectrum({}, S(0), S(1)), {})).find("</svg>"), std::string::npos);
}
