#include "rattrig/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rattrig {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginX = 40.0;  // 5% of the viewport per side
constexpr double kMarginY = 30.0;

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;  // never print -0.000000
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct Vec2 {
  double x = 0.0, y = 0.0;
};

std::string xy(const Vec2& p) { return fmt6(p.x) + "," + fmt6(p.y); }

Vec2 normalized(Vec2 v) {
  double n = std::hypot(v.x, v.y);
  if (n == 0.0) return {0.0, 0.0};
  return {v.x / n, v.y / n};
}

void text_at(std::ostringstream& out, const Vec2& p, const std::string& anchor,
             const std::string& label) {
  out << "<text x=\"" << fmt6(p.x) << "\" y=\"" << fmt6(p.y) << "\" font-family=\"monospace\" "
      << "font-size=\"13\" text-anchor=\"" << anchor << "\">" << label << "</text>\n";
}

void line_between(std::ostringstream& out, const Vec2& a, const Vec2& b) {
  out << "<line x1=\"" << fmt6(a.x) << "\" y1=\"" << fmt6(a.y) << "\" x2=\"" << fmt6(b.x)
      << "\" y2=\"" << fmt6(b.y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

// Polyline along the circle of radius r around center, from direction u1
// swept by the interior angle towards u2. Avoids the ambiguity of SVG arc
// endpoint parameterization.
void arc_towards(std::ostringstream& out, const Vec2& center, Vec2 u1, Vec2 u2, double r) {
  u1 = normalized(u1);
  u2 = normalized(u2);
  double start = std::atan2(u1.y, u1.x);
  double cross = u1.x * u2.y - u1.y * u2.x;
  double dot = u1.x * u2.x + u1.y * u2.y;
  double sweep = std::atan2(std::abs(cross), dot);
  double sign = cross >= 0.0 ? 1.0 : -1.0;
  const int steps = 8;
  out << "<polyline fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" points=\"";
  for (int i = 0; i <= steps; ++i) {
    double phi = start + sign * sweep * i / steps;
    if (i > 0) out << " ";
    out << xy({center.x + r * std::cos(phi), center.y + r * std::sin(phi)});
  }
  out << "\"/>\n";
}

std::string svg_open() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n"
         "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_triangle_svg(const TriangleReport& report) {
  if (report.points[0].field().kind != FieldKind::rational)
    throw UnsupportedField("triangle drawing needs rational coordinates");

  std::array<Vec2, 3> raw;
  for (int i = 0; i < 3; ++i)
    raw[i] = {report.points[i].x.to_double(), report.points[i].y.to_double()};

  double min_x = std::min({raw[0].x, raw[1].x, raw[2].x});
  double max_x = std::max({raw[0].x, raw[1].x, raw[2].x});
  double min_y = std::min({raw[0].y, raw[1].y, raw[2].y});
  double max_y = std::max({raw[0].y, raw[1].y, raw[2].y});
  double w = max_x - min_x, h = max_y - min_y;
  double avail_w = kWidth - 2 * kMarginX, avail_h = kHeight - 2 * kMarginY;
  double scale;
  if (w == 0.0)
    scale = avail_h / h;
  else if (h == 0.0)
    scale = avail_w / w;
  else
    scale = std::min(avail_w / w, avail_h / h);

  auto place = [&](const Vec2& p) -> Vec2 {
    double px = kMarginX + (p.x - min_x) * scale + (avail_w - w * scale) / 2.0;
    double py = kMarginY + (p.y - min_y) * scale + (avail_h - h * scale) / 2.0;
    return {px, kHeight - py};  // y grows upward in the plane, downward in SVG
  };

  std::array<Vec2, 3> v = {place(raw[0]), place(raw[1]), place(raw[2])};
  Vec2 centroid = {(v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0};

  std::ostringstream out;
  out << svg_open();
  out << "<polygon points=\"" << xy(v[0]) << " " << xy(v[1]) << " " << xy(v[2])
      << "\" fill=\"#eef3fa\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    // quadrance label for side i, pushed away from the opposite vertex
    Vec2 mid = {(v[j].x + v[k].x) / 2.0, (v[j].y + v[k].y) / 2.0};
    Vec2 away = normalized({mid.x - v[i].x, mid.y - v[i].y});
    text_at(out, {mid.x + 14.0 * away.x, mid.y + 14.0 * away.y + 4.0}, "middle",
            "Q" + std::to_string(i + 1) + "=" + report.quadrances[i].to_string());
  }

  if (report.spreads) {
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      Vec2 u1 = {v[j].x - v[i].x, v[j].y - v[i].y};
      Vec2 u2 = {v[k].x - v[i].x, v[k].y - v[i].y};
      arc_towards(out, v[i], u1, u2, 22.0);
      Vec2 bisector = normalized({normalized(u1).x + normalized(u2).x,
                                  normalized(u1).y + normalized(u2).y});
      text_at(out, {v[i].x + 44.0 * bisector.x, v[i].y + 44.0 * bisector.y + 4.0}, "middle",
              "s" + std::to_string(i + 1) + "=" + (*report.spreads)[i].to_string());
    }
  }

  for (int i = 0; i < 3; ++i) {
    out << "<circle cx=\"" << fmt6(v[i].x) << "\" cy=\"" << fmt6(v[i].y)
        << "\" r=\"3\" fill=\"black\"/>\n";
    Vec2 away = normalized({v[i].x - centroid.x, v[i].y - centroid.y});
    text_at(out, {v[i].x + 18.0 * away.x, v[i].y + 18.0 * away.y + 4.0}, "middle",
            "A" + std::to_string(i + 1) + " " + report.points[i].to_string());
  }

  out << "</svg>\n";
  return out.str();
}

std::string render_protractor_svg(int divisions) {
  if (divisions < 8)
    throw ParseError("protractor needs at least 8 divisions, got " + std::to_string(divisions));

  const Vec2 center = {400.0, 540.0};
  const double radius = 340.0;

  std::ostringstream out;
  out << svg_open();

  // semicircle outline
  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  const int outline_steps = 128;
  for (int i = 0; i <= outline_steps; ++i) {
    double phi = M_PI * i / outline_steps;
    if (i > 0) out << " ";
    out << xy({center.x + radius * std::cos(phi), center.y - radius * std::sin(phi)});
  }
  out << "\"/>\n";
  line_between(out, {center.x - radius, center.y}, {center.x + radius, center.y});

  for (int k = 0; k <= divisions; ++k) {
    double s = double(k) / double(divisions);
    double theta = std::asin(std::sqrt(s));
    std::string label =
        FieldElement::ratio_of(FieldSpec::rationals(), Integer(k), Integer(divisions)).to_string();
    int mirrors = (k == divisions) ? 1 : 2;  // the s = 1 tick sits on the vertical
    for (int m = 0; m < mirrors; ++m) {
      double phi = (m == 0) ? theta : M_PI - theta;
      Vec2 dir = {std::cos(phi), -std::sin(phi)};
      Vec2 inner = {center.x + (radius - 14.0) * dir.x, center.y + (radius - 14.0) * dir.y};
      Vec2 outer = {center.x + radius * dir.x, center.y + radius * dir.y};
      line_between(out, inner, outer);
      text_at(out, {center.x + (radius + 20.0) * dir.x, center.y + (radius + 20.0) * dir.y + 4.0},
              "middle", label);
    }
  }

  text_at(out, {center.x, center.y + 24.0}, "middle", "spread protractor");
  out << "</svg>\n";
  return out.str();
}

}  // namespace rattrig
