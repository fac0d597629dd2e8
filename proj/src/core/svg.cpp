#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace saddle {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);  // avoid "-0.000000"
  return buf;
}

struct Frame {
  double x0, y0, scale, height;  // world-to-view transform, y flipped
  double vx(double x) const { return (x - x0) * scale; }
  double vy(double y) const { return height - (y - y0) * scale; }
};

void draw_graph(std::ostringstream& out, const GeometricGraph& g,
                const std::vector<Complex>& positions, const std::vector<double>& ray_theta,
                const Frame& fr, const char* stroke, double width, double reach) {
  out << "  <g stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
      << "\" fill=\"none\">\n";
  for (int rep : g.prs.edge_reps()) {
    Complex a = positions[g.prs.vertex_of(rep)];
    Complex b = positions[g.prs.vertex_of(g.prs.partner(rep))];
    out << "    <line x1=\"" << num(fr.vx(a.real())) << "\" y1=\"" << num(fr.vy(a.imag()))
        << "\" x2=\"" << num(fr.vx(b.real())) << "\" y2=\"" << num(fr.vy(b.imag())) << "\"/>\n";
  }
  for (int r : g.prs.rays()) {
    Complex a = positions[g.prs.vertex_of(r)];
    Complex b = a + std::polar(reach, ray_theta[g.prs.ray_index(r)]);
    out << "    <line x1=\"" << num(fr.vx(a.real())) << "\" y1=\"" << num(fr.vy(a.imag()))
        << "\" x2=\"" << num(fr.vx(b.real())) << "\" y2=\"" << num(fr.vy(b.imag())) << "\"/>\n";
  }
  out << "  </g>\n";
}

}  // namespace

std::string render_svg(const Configuration& config, double eps) {
  const auto& g = config.graph;
  std::vector<double> theta0;
  for (int r : g.prs.rays()) theta0.push_back(g.theta[r]);

  bool rigid = analyze_horizontal(g).rigid;
  DeformedGraph deformed;
  bool have_deformed = false;
  if (rigid) {
    deformed = deformed_graph(config, eps);
    have_deformed = true;
  }

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  auto grow = [&](Complex p) {
    if (first) {
      min_x = max_x = p.real();
      min_y = max_y = p.imag();
      first = false;
    } else {
      min_x = std::min(min_x, p.real());
      max_x = std::max(max_x, p.real());
      min_y = std::min(min_y, p.imag());
      max_y = std::max(max_y, p.imag());
    }
  };
  for (Complex p : g.positions) grow(p);
  if (have_deformed)
    for (Complex p : deformed.positions) grow(p);

  double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  double pad = 0.2 * span;
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;
  double reach = 2.0 * (max_x - min_x + max_y - min_y);  // rays hit the viewport edge

  const double view = 640.0;
  Frame fr{min_x, min_y, view / (max_x - min_x),
           view * (max_y - min_y) / (max_x - min_x)};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(view)
      << "\" height=\"" << num(fr.height) << "\" viewBox=\"0 0 " << num(view) << " "
      << num(fr.height) << "\">\n";
  out << "  <clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"" << num(view) << "\" height=\""
      << num(fr.height) << "\"/></clipPath>\n";
  out << "  <g clip-path=\"url(#vp)\">\n";
  draw_graph(out, g, g.positions, theta0, fr, "#bbbbbb", 1.5, reach);
  if (have_deformed)
    draw_graph(out, g, deformed.positions, deformed.ray_theta, fr, "#202020", 2.0, reach);
  out << "  </g>\n";
  out << "  <g fill=\"#c02020\">\n";
  for (Complex p : g.positions)
    out << "    <circle cx=\"" << num(fr.vx(p.real())) << "\" cy=\"" << num(fr.vy(p.imag()))
        << "\" r=\"3\"/>\n";
  out << "  </g>\n";
  if (!rigid)
    out << "  <text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\" "
           "fill=\"#c02020\">not rigid: limit graph only</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace saddle
