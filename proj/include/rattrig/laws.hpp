#pragma once

#include <string>

#include "rattrig/field.hpp"

namespace rattrig {

struct QuadranceTriple {
  FieldElement q1, q2, q3;
};

struct SpreadTriple {
  FieldElement s1, s2, s3;
};

enum class Law { pythagoras, triple_quad, spread_law, cross_law, triple_spread };

std::string law_name(Law law);

// Laws are exposed as exact residuals rather than booleans: tests assert
// exact zero over exact fields and magnitude bounds against the float
// reference. For conjunctive laws the value is the first non-vanishing
// component (a sum of squares can vanish spuriously over F_p).
struct LawResidual {
  Law law;
  FieldElement value;
  bool holds() const { return value.is_zero(); }
};

// (Q1+Q2+Q3)^2 - 2(Q1^2+Q2^2+Q3^2); sixteen times the squared area.
FieldElement quadrea(const QuadranceTriple& q);
// Alternate form 4 Q1 Q2 - (Q1+Q2-Q3)^2.
FieldElement quadrea_from_products(const QuadranceTriple& q);
// Alternate form: the negated 4x4 bordered determinant
//   | 0  Q1 Q2 1 |
//   | Q1 0  Q3 1 |
//   | Q2 Q3 0  1 |
//   | 1  1  1  0 |
// expanded by cofactors.
FieldElement quadrea_from_determinant(const QuadranceTriple& q);

FieldElement area_sq_from_quadrea(const QuadranceTriple& q);
// One quarter of the quadrance of a base times the quadrance of the
// corresponding altitude.
FieldElement area_sq_from_altitude(const FieldElement& q_base, const FieldElement& h);

// Residual Q1 + Q2 - Q3; zero exactly when the triangle is right at A3.
LawResidual check_pythagoras(const QuadranceTriple& q);
// Residual of (Q1+Q2+Q3)^2 = 2(Q1^2+Q2^2+Q3^2); zero exactly for collinear
// point triples.
LawResidual check_triple_quad(const QuadranceTriple& q);
// s1/Q1 = s2/Q2 = s3/Q3 = 4 area^2 / (Q1 Q2 Q3), as one conjunctive
// residual. Throws ZeroQuadrance if any quadrance vanishes.
LawResidual check_spread_law(const QuadranceTriple& q, const SpreadTriple& s);
// Residual of (Q1-Q2-Q3)^2 = 4 Q2 Q3 (1 - s1).
LawResidual check_cross_law(const QuadranceTriple& q, const FieldElement& s1);
// Residual of (s1+s2+s3)^2 = 2(s1^2+s2^2+s3^2) + 4 s1 s2 s3.
LawResidual check_triple_spread(const SpreadTriple& s);

}  // namespace rattrig
