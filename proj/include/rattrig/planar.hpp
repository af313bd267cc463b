#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rattrig/field.hpp"

namespace rattrig {

struct Point {
  FieldElement x, y;

  Point(FieldElement px, FieldElement py);
  FieldSpec field() const { return x.field(); }
  bool operator==(const Point& other) const { return x == other.x && y == other.y; }
  bool operator!=(const Point& other) const { return !(*this == other); }
  std::string to_string() const { return "[" + x.to_string() + "," + y.to_string() + "]"; }
};

// The line ax + by + c = 0, stored with the first nonzero coefficient of
// (a, b) scaled to 1 so equality of lines is equality of triples.
class Line {
public:
  Line(const FieldElement& a, const FieldElement& b, const FieldElement& c);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  FieldSpec field() const { return a_.field(); }

  // a^2 + b^2 == 0: possible over F_p with -1 a square, never over the
  // rationals. Spreads and perpendicular feet are undefined against these.
  bool is_null() const;
  bool contains(const Point& p) const;

  bool operator==(const Line& other) const;
  bool operator!=(const Line& other) const { return !(*this == other); }
  std::string to_string() const;

private:
  FieldElement a_, b_, c_;
};

FieldElement quadrance(const Point& a, const Point& b);
Line line_through(const Point& a, const Point& b);
bool is_perpendicular(const Line& l1, const Line& l2);
std::optional<Point> intersection(const Line& l1, const Line& l2);
Point foot_of_perpendicular(const Point& p, const Line& l);
FieldElement spread_from_lines(const Line& l1, const Line& l2);

// Ratio form of the spread: with A the intersection of l1 and l2, B a point
// of l1 other than A, and C the foot of the perpendicular from B to l2,
// s = Q(B,C) / Q(A,B). Independent of the choice of B.
FieldElement spread_by_definition(const Line& l1, const Line& l2, const Point& b);

// Degeneracies are reported, never silently computed through. Sides are
// numbered opposite their vertex: side 1 = A2A3, side 2 = A1A3, side 3 = A1A2.
struct Degeneracy {
  enum class Kind { collinear, isotropic_segment, null_line };
  Kind kind;
  int side = 0;  // 1..3; 0 for collinear

  std::string tag() const;
  bool operator==(const Degeneracy&) const = default;
};

struct TriangleReport {
  std::array<Point, 3> points;
  // Q[0] = Q(A2,A3), Q[1] = Q(A1,A3), Q[2] = Q(A1,A2)
  std::array<FieldElement, 3> quadrances;
  // s[i] is the spread at vertex A_{i+1}, opposite quadrances[i]; absent
  // whenever any side line is null.
  std::optional<std::array<FieldElement, 3>> spreads;
  FieldElement quadrea;
  FieldElement area_sq;
  bool collinear = false;
  std::vector<Degeneracy> degeneracies;
};

TriangleReport analyze_triangle(const Point& a1, const Point& a2, const Point& a3);

}  // namespace rattrig
