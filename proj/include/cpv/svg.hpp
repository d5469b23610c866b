#pragma once

#include "cpv/persistence.hpp"

#include <string>

namespace cpv {

/// SVG 1.1 barcode diagram: one horizontal bar per row ordered by birth,
/// spectrum points as axis ticks with exact labels. Even bars are drawn in
/// blue, odd bars in orange; unbounded ends get an arrow, truncated ends a
/// dashed tail.
std::string barcode_svg(const Barcode& b);

}  // namespace cpv
