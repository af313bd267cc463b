#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rattrig/planar.hpp"

namespace rattrig {

// Tally of one verification run. failures counts triangles where some law
// residual failed to vanish; it must be zero. Degeneracy counts are
// deterministic per field (and per seed in random mode).
struct VerificationCensus {
  FieldSpec field;
  std::string mode;  // "random" | "exhaustive"
  std::uint64_t seed = 0;
  std::uint64_t configurations = 0;
  std::uint64_t failures = 0;
  std::uint64_t null_lines = 0;          // side lines with a^2 + b^2 = 0
  std::uint64_t isotropic_segments = 0;  // sides with zero quadrance, distinct endpoints
  std::uint64_t collinear = 0;
  std::optional<std::string> first_failure;
};

// Runs every law against one analyzed triangle and returns the first
// violation, if any. Exact zero residuals are demanded: the quadrea form
// equalities, quadrea = 4 det^2, the Pythagoras biconditional at all three
// vertices, and - where spreads and feet exist - the spread law, all cross
// law rotations, the triple spread formula, the altitude form of the
// squared area for all three bases, and the spread-law substitution
// Q_i = s_i * Q1 Q2 Q3 / (4 area^2).
std::optional<std::string> check_all_laws(const TriangleReport& report);

// Samples non-degenerate triangles with coordinates num/den, num in
// [-100, 100], den in [1, 10] (residues for prime fields); the seed fully
// determines the sample. Collinear rejects are counted and resampled.
VerificationCensus verify_random(const FieldSpec& field, std::uint64_t samples,
                                 std::uint64_t seed);

// Enumerates every triangle over F_p up to translation (A1 pinned at the
// origin, A2 and A3 ranging over the remaining distinct points). Bounded
// because the census is quartic in p.
VerificationCensus verify_exhaustive(const FieldSpec& field, std::uint64_t max_modulus = 31);

}  // namespace rattrig
