#include "rattrig/planar.hpp"

#include <cassert>

#include "rattrig/laws.hpp"

namespace rattrig {

Point::Point(FieldElement px, FieldElement py) : x(std::move(px)), y(std::move(py)) {
  if (x.field() != y.field())
    throw FieldMismatch("point coordinates from different fields");
}

Line::Line(const FieldElement& a, const FieldElement& b, const FieldElement& c)
    : a_(a), b_(b), c_(c) {
  if (a_.field() != b_.field() || b_.field() != c_.field())
    throw FieldMismatch("line coefficients from different fields");
  if (a_.is_zero() && b_.is_zero())
    throw std::invalid_argument("line requires (a, b) != (0, 0)");
  if (!a_.is_zero()) {
    b_ = b_ / a_;
    c_ = c_ / a_;
    a_ = FieldElement::one(a_.field());
  } else {
    c_ = c_ / b_;
    b_ = FieldElement::one(b_.field());
  }
}

bool Line::is_null() const { return (a_ * a_ + b_ * b_).is_zero(); }

bool Line::contains(const Point& p) const { return (a_ * p.x + b_ * p.y + c_).is_zero(); }

bool Line::operator==(const Line& other) const {
  return a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
}

std::string Line::to_string() const {
  return "<" + a_.to_string() + ":" + b_.to_string() + ":" + c_.to_string() + ">";
}

FieldElement quadrance(const Point& a, const Point& b) {
  FieldElement dx = b.x - a.x;
  FieldElement dy = b.y - a.y;
  return dx * dx + dy * dy;
}

Line line_through(const Point& a, const Point& b) {
  if (a == b) throw CoincidentPoints("no unique line through coincident points " + a.to_string());
  FieldElement ux = b.x - a.x;
  FieldElement uy = b.y - a.y;
  // normal (uy, -ux), offset chosen so a satisfies the equation
  return Line(uy, -ux, ux * a.y - uy * a.x);
}

bool is_perpendicular(const Line& l1, const Line& l2) {
  return (l1.a() * l2.a() + l1.b() * l2.b()).is_zero();
}

std::optional<Point> intersection(const Line& l1, const Line& l2) {
  FieldElement det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) return std::nullopt;
  FieldElement x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  FieldElement y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return Point(x, y);
}

Point foot_of_perpendicular(const Point& p, const Line& l) {
  FieldElement norm = l.a() * l.a() + l.b() * l.b();
  if (norm.is_zero())
    throw NullLine("no perpendicular foot on null line " + l.to_string());
  FieldElement t = (l.a() * p.x + l.b() * p.y + l.c()) / norm;
  return Point(p.x - t * l.a(), p.y - t * l.b());
}

FieldElement spread_from_lines(const Line& l1, const Line& l2) {
  FieldElement n1 = l1.a() * l1.a() + l1.b() * l1.b();
  FieldElement n2 = l2.a() * l2.a() + l2.b() * l2.b();
  if (n1.is_zero() || n2.is_zero())
    throw NullLine("spread undefined against a null line");
  FieldElement cross = l1.a() * l2.b() - l2.a() * l1.b();
  return cross * cross / (n1 * n2);
}

FieldElement spread_by_definition(const Line& l1, const Line& l2, const Point& b) {
  if (l1.is_null() || l2.is_null())
    throw NullLine("spread undefined against a null line");
  auto a = intersection(l1, l2);
  if (!a) throw ParallelLines("lines do not meet in a unique point");
  if (!l1.contains(b)) throw std::invalid_argument("B must lie on the first line");
  if (b == *a) throw std::invalid_argument("B must differ from the intersection point");
  Point c = foot_of_perpendicular(b, l2);
  FieldElement hyp = quadrance(*a, b);
  if (hyp.is_zero())
    throw IsotropicConfiguration("Q(A,B) = 0: isotropic segment from the intersection to B");
  return quadrance(b, c) / hyp;
}

std::string Degeneracy::tag() const {
  static const char* side_name[] = {"", "A2A3", "A1A3", "A1A2"};
  switch (kind) {
    case Kind::collinear: return "collinear";
    case Kind::isotropic_segment: return std::string("isotropic:") + side_name[side];
    case Kind::null_line: return std::string("null_line:") + side_name[side];
  }
  return "";
}

TriangleReport analyze_triangle(const Point& a1, const Point& a2, const Point& a3) {
  if (a1 == a2 || a1 == a3 || a2 == a3)
    throw DuplicatePoints("triangle vertices must be pairwise distinct");

  std::array<FieldElement, 3> q = {quadrance(a2, a3), quadrance(a1, a3), quadrance(a1, a2)};
  QuadranceTriple qt{q[0], q[1], q[2]};
  FieldElement qa = quadrea(qt);
  FieldElement area_sq = qa / FieldElement::of(qa.field(), 16);

  TriangleReport report{{a1, a2, a3}, q, std::nullopt, qa, area_sq, qa.is_zero(), {}};
  if (report.collinear) report.degeneracies.push_back({Degeneracy::Kind::collinear, 0});
  for (int i = 0; i < 3; ++i) {
    if (q[i].is_zero())
      report.degeneracies.push_back({Degeneracy::Kind::isotropic_segment, i + 1});
  }

  // side i is the line carrying the segment opposite vertex A_{i+1}
  std::array<Line, 3> sides = {line_through(a2, a3), line_through(a1, a3), line_through(a1, a2)};
  bool any_null = false;
  for (int i = 0; i < 3; ++i) {
    if (sides[i].is_null()) {
      any_null = true;
      report.degeneracies.push_back({Degeneracy::Kind::null_line, i + 1});
    }
  }

  if (!any_null) {
    // vertex A_{i+1} lies on the two sides other than side i
    report.spreads = {{spread_from_lines(sides[2], sides[1]),
                       spread_from_lines(sides[2], sides[0]),
                       spread_from_lines(sides[1], sides[0])}};
#ifndef NDEBUG
    // cross-check against the spread law: 4 s_i Q_j Q_k == quadrea
    const FieldElement four = FieldElement::of(qa.field(), 4);
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      if (!q[j].is_zero() && !q[k].is_zero())
        assert(four * (*report.spreads)[i] * q[j] * q[k] == qa);
    }
#endif
  }
  return report;
}

}  // namespace rattrig
