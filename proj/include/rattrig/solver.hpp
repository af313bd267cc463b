#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rattrig/field.hpp"
#include "rattrig/laws.hpp"

namespace rattrig {

// The in-field roots of a quadratic, ascending, with the discriminant kept
// as the certificate: two roots iff it is a nonzero square, one (doubled)
// iff zero, none iff a non-square. The field is never silently extended.
struct SolutionSet {
  struct Root {
    FieldElement value;
    int multiplicity = 1;
  };
  std::vector<Root> roots;
  FieldElement discriminant;

  bool empty() const { return roots.empty(); }
};

// Q1 from the cross law (Q1-Q2-Q3)^2 = 4 Q2 Q3 (1-s1), solved as a quadratic
// in Q1: the roots are Q2 + Q3 +/- r with r^2 = 4 Q2 Q3 (1-s1). The reported
// discriminant is that radicand.
SolutionSet solve_quadrance_from_cross_law(const FieldElement& q2, const FieldElement& q3,
                                           const FieldElement& s1);

// s3 from the triple spread formula, a quadratic in s3:
//   s3^2 - 2(s1+s2-2 s1 s2) s3 + (s1-s2)^2 = 0.
SolutionSet solve_spread_from_triple_spread(const FieldElement& s1, const FieldElement& s2);

struct PartialTriangle {
  std::array<std::optional<FieldElement>, 3> quadrances;
  std::array<std::optional<FieldElement>, 3> spreads;

  FieldSpec field() const;
};

// One internally consistent completion: all applicable laws have zero
// residual. Spreads stay unset at vertices where a zero quadrance leaves
// them undetermined. For the three-spread pattern only the quadrance ratio
// class is known and similarity_only is set.
struct TriangleCandidate {
  std::array<FieldElement, 3> quadrances;
  std::array<std::optional<FieldElement>, 3> spreads;
  FieldElement quadrea;
  FieldElement area_sq;
  bool similarity_only = false;
  std::string branch;  // "unique", "root_0", "root_1"
};

struct CompletionResult {
  std::string pattern;
  std::optional<FieldElement> discriminant;  // set when a quadratic was solved
  std::vector<TriangleCandidate> candidates;
};

// Triangle completion for the supported patterns: three quadrances; two
// quadrances plus the spread at their shared vertex (cross law); two
// quadrances plus the spread opposite one of them (spread law, then triple
// spread formula); three spreads (similarity class only). Candidates list
// every quadratic branch; nothing is auto-selected.
CompletionResult complete_triangle(const PartialTriangle& known);

}  // namespace rattrig
