#include "cpv/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cpv {

namespace {

constexpr double kLeft = 60;
constexpr double kRight = 40;
constexpr double kWidth = 640;
constexpr double kRow = 14;
constexpr double kTop = 20;
constexpr double kAxis = 40;

std::string label(const Scalar& s) {
  if (is_integer(s)) return boost::multiprecision::numerator(s.value()).str();
  return s.str();
}

}  // namespace

std::string barcode_svg(const Barcode& b) {
  const Scalar& lo = b.spectrum.lo();
  const Scalar& hi = b.spectrum.hi();
  const double span = lo < hi ? (hi - lo).value().convert_to<double>() : 1.0;
  const double plot = kWidth - kLeft - kRight;
  auto x_of = [&](const Scalar& s) {
    if (s.is_neg_inf()) return kLeft - 20;
    if (s.is_pos_inf()) return kWidth - kRight + 20;
    const double t = (s - lo).value().convert_to<double>() / span;
    return kLeft + std::clamp(t, -0.05, 1.05) * plot;
  };

  std::vector<Bar> bars = b.bars;
  std::stable_sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    return x.birth < y.birth || (x.birth == y.birth && x.death < y.death);
  });
  const double height = kTop + kRow * static_cast<double>(std::max<std::size_t>(bars.size(), 1)) + kAxis;
  const double axis_y = height - kAxis + 10;

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<g stroke-width=\"4\" stroke-linecap=\"butt\">\n";
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const Bar& bar = bars[i];
    const double y = kTop + kRow * static_cast<double>(i) + kRow / 2;
    const char* colour = bar.parity == Parity::Even ? "#1f77b4" : "#ff7f0e";
    const double x0 = x_of(bar.birth);
    if (bar.truncated) {
      const double xh = x_of(hi);
      out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << xh << "\" y2=\"" << y << "\" stroke=\"" << colour
          << "\"/>\n";
      out << "<line x1=\"" << xh << "\" y1=\"" << y << "\" x2=\"" << x_of(bar.death) << "\" y2=\"" << y
          << "\" stroke=\"" << colour << "\" stroke-dasharray=\"4 3\"/>\n";
    } else {
      out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x_of(bar.death) << "\" y2=\"" << y
          << "\" stroke=\"" << colour << "\"/>\n";
    }
    if (bar.death.is_pos_inf() && !bar.truncated) {
      const double xe = x_of(bar.death);
      out << "<polygon points=\"" << xe << ',' << y - 4 << ' ' << xe + 6 << ',' << y << ' ' << xe << ',' << y + 4
          << "\" fill=\"" << colour << "\"/>\n";
    }
    if (bar.birth.is_neg_inf()) {
      const double xs = x_of(bar.birth);
      out << "<polygon points=\"" << xs << ',' << y - 4 << ' ' << xs - 6 << ',' << y << ' ' << xs << ',' << y + 4
          << "\" fill=\"" << colour << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kWidth - kRight << "\" y2=\"" << axis_y
      << "\"/>\n";
  std::vector<Scalar> ticks = b.spectrum.points();
  if (ticks.empty() || !(ticks.front() == lo)) ticks.insert(ticks.begin(), lo);
  if (!(ticks.back() == hi)) ticks.push_back(hi);
  for (const Scalar& t : ticks) {
    const double x = x_of(t);
    out << "<line x1=\"" << x << "\" y1=\"" << axis_y << "\" x2=\"" << x << "\" y2=\"" << axis_y + 5 << "\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << axis_y + 17 << "\" stroke=\"none\">" << label(t) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace cpv
