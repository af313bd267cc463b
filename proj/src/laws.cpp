#include "rattrig/laws.hpp"

#include <array>

namespace rattrig {
namespace {

FieldElement det3(const std::array<FieldElement, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

FieldElement det4(const std::array<FieldElement, 16>& m) {
  FieldElement result = FieldElement::zero(m[0].field());
  for (int col = 0; col < 4; ++col) {
    std::array<FieldElement, 9> minor;
    int mi = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[mi++] = m[4 * r + c];
    FieldElement term = m[col] * det3(minor);
    result = (col % 2 == 0) ? result + term : result - term;
  }
  return result;
}

}  // namespace

std::string law_name(Law law) {
  switch (law) {
    case Law::pythagoras: return "pythagoras";
    case Law::triple_quad: return "triple_quad";
    case Law::spread_law: return "spread_law";
    case Law::cross_law: return "cross_law";
    case Law::triple_spread: return "triple_spread";
  }
  return "";
}

FieldElement quadrea(const QuadranceTriple& q) {
  FieldElement sum = q.q1 + q.q2 + q.q3;
  FieldElement two = FieldElement::of(q.q1.field(), 2);
  return sum * sum - two * (q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

FieldElement quadrea_from_products(const QuadranceTriple& q) {
  FieldElement four = FieldElement::of(q.q1.field(), 4);
  FieldElement d = q.q1 + q.q2 - q.q3;
  return four * q.q1 * q.q2 - d * d;
}

FieldElement quadrea_from_determinant(const QuadranceTriple& q) {
  FieldElement zero = FieldElement::zero(q.q1.field());
  FieldElement one = FieldElement::one(q.q1.field());
  std::array<FieldElement, 16> m = {zero, q.q1, q.q2, one,   //
                                    q.q1, zero, q.q3, one,   //
                                    q.q2, q.q3, zero, one,   //
                                    one,  one,  one,  zero};
  return -det4(m);
}

FieldElement area_sq_from_quadrea(const QuadranceTriple& q) {
  return quadrea(q) / FieldElement::of(q.q1.field(), 16);
}

FieldElement area_sq_from_altitude(const FieldElement& q_base, const FieldElement& h) {
  return q_base * h / FieldElement::of(q_base.field(), 4);
}

LawResidual check_pythagoras(const QuadranceTriple& q) {
  return {Law::pythagoras, q.q1 + q.q2 - q.q3};
}

LawResidual check_triple_quad(const QuadranceTriple& q) { return {Law::triple_quad, quadrea(q)}; }

LawResidual check_spread_law(const QuadranceTriple& q, const SpreadTriple& s) {
  if (q.q1.is_zero() || q.q2.is_zero() || q.q3.is_zero())
    throw ZeroQuadrance("spread law needs all three quadrances nonzero");
  FieldElement four = FieldElement::of(q.q1.field(), 4);
  std::array<FieldElement, 3> parts = {
      s.s1 * q.q2 - s.s2 * q.q1,
      s.s2 * q.q3 - s.s3 * q.q2,
      // anchor: the common ratio is 4 area^2 / (Q1 Q2 Q3), i.e. 4 s1 Q2 Q3 = quadrea
      four * s.s1 * q.q2 * q.q3 - quadrea(q),
  };
  for (const auto& part : parts)
    if (!part.is_zero()) return {Law::spread_law, part};
  return {Law::spread_law, FieldElement::zero(q.q1.field())};
}

LawResidual check_cross_law(const QuadranceTriple& q, const FieldElement& s1) {
  FieldElement four = FieldElement::of(q.q1.field(), 4);
  FieldElement one = FieldElement::one(q.q1.field());
  FieldElement d = q.q1 - q.q2 - q.q3;
  return {Law::cross_law, d * d - four * q.q2 * q.q3 * (one - s1)};
}

LawResidual check_triple_spread(const SpreadTriple& s) {
  FieldElement two = FieldElement::of(s.s1.field(), 2);
  FieldElement four = FieldElement::of(s.s1.field(), 4);
  FieldElement sum = s.s1 + s.s2 + s.s3;
  FieldElement residual = sum * sum - two * (s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) -
                          four * s.s1 * s.s2 * s.s3;
  return {Law::triple_spread, residual};
}

}  // namespace rattrig
