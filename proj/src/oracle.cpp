#include "rattrig/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace rattrig::oracle {
namespace {

// |x - y| relative to the larger magnitude, absolute below 1.
double deviation(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(b[0] - a[0], b[1] - a[1]);
}

// Angle at vertex v between the directions to p and q; atan2 keeps the
// accuracy uniform near 0 and pi.
double vertex_angle(const std::array<double, 2>& v, const std::array<double, 2>& p,
                    const std::array<double, 2>& q) {
  double ux = p[0] - v[0], uy = p[1] - v[1];
  double wx = q[0] - v[0], wy = q[1] - v[1];
  double cross = ux * wy - uy * wx;
  double dot = ux * wx + uy * wy;
  return std::atan2(std::abs(cross), dot);
}

}  // namespace

FloatTriangle make_float_triangle(const std::array<std::array<double, 2>, 3>& v) {
  FloatTriangle t;
  t.vertices = v;
  t.side_lengths = {dist(v[1], v[2]), dist(v[0], v[2]), dist(v[0], v[1])};
  t.angles = {vertex_angle(v[0], v[1], v[2]), vertex_angle(v[1], v[0], v[2]),
              vertex_angle(v[2], v[0], v[1])};
  double cross = (v[1][0] - v[0][0]) * (v[2][1] - v[0][1]) -
                 (v[2][0] - v[0][0]) * (v[1][1] - v[0][1]);
  t.area = 0.5 * std::abs(cross);
  return t;
}

double heron_area(double d1, double d2, double d3) {
  if (!(d1 > 0) || !(d2 > 0) || !(d3 > 0))
    throw InvalidTriangle("side lengths must be positive");
  double longest = std::max({d1, d2, d3});
  double slack = 1e-9 * longest;
  if (d1 + d2 + slack < d3 || d1 + d3 + slack < d2 || d2 + d3 + slack < d1)
    throw InvalidTriangle("side lengths violate the triangle inequality");
  double s = (d1 + d2 + d3) / 2.0;
  double radicand = s * (s - d1) * (s - d2) * (s - d3);
  return std::sqrt(std::max(radicand, 0.0));
}

double base_height_area(double d_base, double h) { return 0.5 * d_base * h; }

double spread_of_angle(double theta) {
  double s = std::sin(theta);
  return s * s;
}

CrossValidation cross_validate(const Point& a1, const Point& a2, const Point& a3, double tol) {
  if (a1.field().kind != FieldKind::rational)
    throw UnsupportedField("cross-validation needs rational coordinates");
  TriangleReport exact = analyze_triangle(a1, a2, a3);
  std::array<std::array<double, 2>, 3> verts = {{{a1.x.to_double(), a1.y.to_double()},
                                                 {a2.x.to_double(), a2.y.to_double()},
                                                 {a3.x.to_double(), a3.y.to_double()}}};
  FloatTriangle ref = make_float_triangle(verts);

  CrossValidation cv;
  std::string worst = "quadrance";
  for (int i = 0; i < 3; ++i) {
    double d = ref.side_lengths[i];
    cv.quadrance_deviation[i] = deviation(exact.quadrances[i].to_double(), d * d);
    if (cv.quadrance_deviation[i] > cv.max_deviation) {
      cv.max_deviation = cv.quadrance_deviation[i];
      worst = "Q" + std::to_string(i + 1);
    }
  }
  for (int i = 0; i < 3; ++i) {
    double expected = spread_of_angle(ref.angles[i]);
    cv.spread_deviation[i] = deviation((*exact.spreads)[i].to_double(), expected);
    if (cv.spread_deviation[i] > cv.max_deviation) {
      cv.max_deviation = cv.spread_deviation[i];
      worst = "s" + std::to_string(i + 1);
    }
  }
  double heron = exact.collinear
                     ? 0.0
                     : heron_area(ref.side_lengths[0], ref.side_lengths[1], ref.side_lengths[2]);
  cv.area_sq_deviation = deviation(exact.area_sq.to_double(), heron * heron);
  if (cv.area_sq_deviation > cv.max_deviation) {
    cv.max_deviation = cv.area_sq_deviation;
    worst = "area_sq";
  }
  if (cv.max_deviation > tol) throw ToleranceExceeded(worst, cv.max_deviation, tol);
  return cv;
}

}  // namespace rattrig::oracle
