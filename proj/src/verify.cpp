#include "rattrig/verify.hpp"

#include <random>

#include "rattrig/laws.hpp"

namespace rattrig {
namespace {

// Orientation determinant of the three points; quadrea must equal 4 det^2.
FieldElement orientation_det(const TriangleReport& r) {
  const Point& a1 = r.points[0];
  const Point& a2 = r.points[1];
  const Point& a3 = r.points[2];
  return (a2.x - a1.x) * (a3.y - a1.y) - (a3.x - a1.x) * (a2.y - a1.y);
}

}  // namespace

std::optional<std::string> check_all_laws(const TriangleReport& report) {
  const FieldSpec f = report.points[0].field();
  const FieldElement four = FieldElement::of(f, 4);
  const QuadranceTriple qt{report.quadrances[0], report.quadrances[1], report.quadrances[2]};

  FieldElement qa = quadrea(qt);
  if (qa != report.quadrea) return "quadrea mismatch with report";
  if (qa != quadrea_from_products(qt)) return "quadrea product form disagrees";
  if (qa != quadrea_from_determinant(qt)) return "quadrea determinant form disagrees";
  if (report.area_sq != area_sq_from_quadrea(qt)) return "area_sq is not quadrea/16";

  FieldElement det = orientation_det(report);
  if (qa != four * det * det) return "quadrea is not 4 det^2";
  if (report.collinear != qa.is_zero()) return "collinear flag disagrees with quadrea";
  if (check_triple_quad(qt).holds() != det.is_zero())
    return "triple quad formula disagrees with collinearity";

  // Pythagoras both ways at every vertex: the lines through vertex i are
  // perpendicular exactly when the other two quadrances sum to Q_i.
  std::array<Line, 3> sides = {line_through(report.points[1], report.points[2]),
                               line_through(report.points[0], report.points[2]),
                               line_through(report.points[0], report.points[1])};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    bool perp = is_perpendicular(sides[j], sides[k]);
    bool law = check_pythagoras({report.quadrances[j], report.quadrances[k],
                                 report.quadrances[i]})
                   .holds();
    if (perp != law) return "Pythagoras biconditional fails at vertex A" + std::to_string(i + 1);
  }

  if (report.spreads) {
    const auto& s = *report.spreads;
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      if (!check_cross_law({report.quadrances[i], report.quadrances[j], report.quadrances[k]},
                           s[i])
               .holds())
        return "cross law fails at vertex A" + std::to_string(i + 1);
    }
    if (!check_triple_spread({s[0], s[1], s[2]}).holds()) return "triple spread formula fails";

    bool all_q_nonzero = !report.quadrances[0].is_zero() && !report.quadrances[1].is_zero() &&
                         !report.quadrances[2].is_zero();
    if (all_q_nonzero) {
      if (!check_spread_law(qt, {s[0], s[1], s[2]}).holds()) return "spread law fails";
      if (!qa.is_zero()) {
        // substitution scale D = Q1 Q2 Q3 / (4 area^2); s_i D must give back Q_i
        FieldElement d = four * report.quadrances[0] * report.quadrances[1] *
                         report.quadrances[2] / qa;
        for (int i = 0; i < 3; ++i)
          if (s[i] * d != report.quadrances[i])
            return "spread-law substitution fails at vertex A" + std::to_string(i + 1);
      }
    }

    // altitude form of the squared area, for each choice of base
    for (int i = 0; i < 3; ++i) {
      Point apex = report.points[i];
      FieldElement h = quadrance(apex, foot_of_perpendicular(apex, sides[i]));
      if (area_sq_from_altitude(report.quadrances[i], h) != report.area_sq)
        return "altitude area form fails for base side " + std::to_string(i + 1);
    }
  }
  return std::nullopt;
}

namespace {

void tally(VerificationCensus& census, const TriangleReport& report) {
  ++census.configurations;
  for (const auto& d : report.degeneracies) {
    switch (d.kind) {
      case Degeneracy::Kind::collinear: ++census.collinear; break;
      case Degeneracy::Kind::isotropic_segment: ++census.isotropic_segments; break;
      case Degeneracy::Kind::null_line: ++census.null_lines; break;
    }
  }
  if (auto failure = check_all_laws(report)) {
    ++census.failures;
    if (!census.first_failure) census.first_failure = *failure;
  }
}

}  // namespace

VerificationCensus verify_random(const FieldSpec& field, std::uint64_t samples,
                                 std::uint64_t seed) {
  VerificationCensus census;
  census.field = field;
  census.mode = "random";
  census.seed = seed;

  std::mt19937_64 gen(seed);
  auto draw_coordinate = [&]() {
    if (field.kind == FieldKind::rational) {
      long long num = static_cast<long long>(gen() % 201) - 100;
      long long den = static_cast<long long>(gen() % 10) + 1;
      return FieldElement::ratio_of(field, num, den);
    }
    return FieldElement::of(field, Integer(gen() % field.modulus));
  };

  while (census.configurations < samples) {
    Point a1(draw_coordinate(), draw_coordinate());
    Point a2(draw_coordinate(), draw_coordinate());
    Point a3(draw_coordinate(), draw_coordinate());
    if (a1 == a2 || a1 == a3 || a2 == a3) continue;
    TriangleReport report = analyze_triangle(a1, a2, a3);
    if (report.collinear) {
      ++census.collinear;  // counted, then resampled: the suite wants non-degenerate triangles
      continue;
    }
    tally(census, report);
  }
  return census;
}

VerificationCensus verify_exhaustive(const FieldSpec& field, std::uint64_t max_modulus) {
  if (field.kind != FieldKind::prime_field)
    throw UnsupportedField("exhaustive enumeration needs a finite field");
  if (field.modulus > max_modulus)
    throw ExhaustiveBoundExceeded("modulus " + std::to_string(field.modulus) +
                                  " exceeds the exhaustive bound " + std::to_string(max_modulus));

  VerificationCensus census;
  census.field = field;
  census.mode = "exhaustive";

  const std::uint64_t p = field.modulus;
  std::vector<FieldElement> elems;
  elems.reserve(p);
  for (std::uint64_t v = 0; v < p; ++v) elems.push_back(FieldElement::of(field, Integer(v)));

  const Point origin(elems[0], elems[0]);
  for (std::uint64_t x2 = 0; x2 < p; ++x2) {
    for (std::uint64_t y2 = 0; y2 < p; ++y2) {
      Point a2(elems[x2], elems[y2]);
      if (a2 == origin) continue;
      for (std::uint64_t x3 = 0; x3 < p; ++x3) {
        for (std::uint64_t y3 = 0; y3 < p; ++y3) {
          Point a3(elems[x3], elems[y3]);
          if (a3 == origin || a3 == a2) continue;
          tally(census, analyze_triangle(origin, a2, a3));
        }
      }
    }
  }
  return census;
}

}  // namespace rattrig
