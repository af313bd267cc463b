#pragma once

#include <string>

#include "rattrig/planar.hpp"

namespace rattrig {

// Standalone SVG diagrams, byte-deterministic for identical inputs: exact
// values are converted to pixels only at serialization, always with six
// decimal places.

// Annotated triangle: vertices with exact coordinates, quadrance labels on
// the sides, spread labels in small arcs at the vertices. Rational
// coordinates only; a finite field has no faithful drawing.
std::string render_triangle_svg(const TriangleReport& report);

// Semicircular spread scale: the tick for spread s sits at angle
// arcsin(sqrt(s)), mirrored across the vertical, labeled with reduced
// fractions k/divisions. Needs at least 8 divisions.
std::string render_protractor_svg(int divisions);

}  // namespace rattrig
