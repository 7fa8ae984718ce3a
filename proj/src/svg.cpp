#include "isoconn/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace isoconn {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const AgentConfiguration& config, const SvgOptions& options) {
  std::vector<Position> all;
  for (const Agent& a : config.agents()) all.push_back(a.position);
  all.insert(all.end(), options.ghosts.begin(), options.ghosts.end());

  double x0 = all.front().x, x1 = x0, y0 = all.front().y, y1 = y0;
  for (Position p : all) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double span_x = std::max(x1 - x0, 1e-9);
  const double span_y = std::max(y1 - y0, 1e-9);
  const double scale = std::min((options.width - 2 * options.margin) / span_x,
                                (options.height - 2 * options.margin) / span_y);
  auto sx = [&](double x) { return fmt("%.2f", options.margin + (x - x0) * scale); };
  // SVG y grows downwards.
  auto sy = [&](double y) { return fmt("%.2f", options.height - options.margin - (y - y0) * scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", options.width) << "\" height=\""
      << fmt("%.0f", options.height) << "\" viewBox=\"0 0 " << fmt("%.0f", options.width) << ' '
      << fmt("%.0f", options.height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <g id=\"edges\" stroke=\"#1f4e79\" stroke-width=\"2\">\n";
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Position a = config.position(i);
      const Position b = config.position(j);
      const double w = adjacency_weight(distance(a, b), config.sigma(), config.range());
      if (w <= 0.0) continue;
      out << "    <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
          << "\" stroke-opacity=\"" << fmt("%.4f", w) << "\"/>\n";
    }
  }
  out << "  </g>\n";
  if (!options.ghosts.empty()) {
    out << "  <g id=\"alternatives\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"4 3\">\n";
    for (Position p : options.ghosts)
      out << "    <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"9\"/>\n";
    out << "  </g>\n";
  }
  out << "  <g id=\"agents\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const Agent& a : config.agents()) {
    out << "    <circle cx=\"" << sx(a.position.x) << "\" cy=\"" << sy(a.position.y) << "\" r=\"7\" fill=\"#2e2e2e\"/>\n"
        << "    <text x=\"" << fmt("%.2f", options.margin + (a.position.x - x0) * scale + 10) << "\" y=\""
        << sy(a.position.y) << "\">" << xml_escape(a.id) << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace isoconn
