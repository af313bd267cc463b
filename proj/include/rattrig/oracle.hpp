#pragma once

#include <array>

#include "rattrig/planar.hpp"

namespace rattrig::oracle {

// Double-precision classical reference: distances, radian angles, Heron.
// Exists only to cross-validate the exact core through the bridges Q = d^2
// and s = sin^2(theta); never feeds results back into exact computation.
struct FloatTriangle {
  std::array<std::array<double, 2>, 3> vertices;
  std::array<double, 3> side_lengths;  // d1 = |A2A3|, d2 = |A1A3|, d3 = |A1A2|
  std::array<double, 3> angles;        // radians, at A1..A3
  double area = 0.0;                   // shoelace
};

FloatTriangle make_float_triangle(const std::array<std::array<double, 2>, 3>& vertices);

// Classical Heron area from side lengths. Throws InvalidTriangle for
// non-positive lengths or a violated triangle inequality (beyond rounding
// slack); degenerate triangles give area 0.
double heron_area(double d1, double d2, double d3);

// One half base times height.
double base_height_area(double d_base, double h);

// The spread of the angle theta: sin^2(theta). Line-based, so theta and
// pi - theta agree.
double spread_of_angle(double theta);

struct CrossValidation {
  std::array<double, 3> quadrance_deviation;
  std::array<double, 3> spread_deviation;
  double area_sq_deviation = 0.0;
  double max_deviation = 0.0;
};

// Runs the exact analysis of a rational triangle next to the float
// reference and reports the worst mixed relative deviation across all
// bridged quantities. Throws ToleranceExceeded past tol.
CrossValidation cross_validate(const Point& a1, const Point& a2, const Point& a3,
                               double tol = 1e-9);

}  // namespace rattrig::oracle
