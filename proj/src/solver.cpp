#include "rattrig/solver.hpp"

#include <algorithm>
#include <cassert>

namespace rattrig {
namespace {

void sort_roots(std::vector<SolutionSet::Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const SolutionSet::Root& a, const SolutionSet::Root& b) {
    return FieldElement::less(a.value, b.value);
  });
}

// Shared candidate assembly: spreads via the cross law at every vertex where
// the denominator 4 Qj Qk is nonzero; where it vanishes the law degenerates
// to (Qi - Qj - Qk)^2 = 0, which is enforced rather than assumed.
TriangleCandidate make_candidate(const std::array<FieldElement, 3>& q, std::string branch) {
  FieldSpec f = q[0].field();
  FieldElement four = FieldElement::of(f, 4);
  FieldElement one = FieldElement::one(f);
  QuadranceTriple qt{q[0], q[1], q[2]};
  TriangleCandidate cand{q, {}, quadrea(qt), area_sq_from_quadrea(qt), false, std::move(branch)};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    FieldElement denom = four * q[j] * q[k];
    FieldElement diff = q[i] - q[j] - q[k];
    if (!denom.is_zero()) {
      cand.spreads[i] = one - diff * diff / denom;
    } else if (!diff.is_zero()) {
      throw InconsistentData("cross law at vertex A" + std::to_string(i + 1) +
                             " is unsatisfiable: residual " + (diff * diff).to_string());
    }
  }
  return cand;
}

// Where the caller knows a spread that the quadrance triple leaves
// undetermined, keep the known value (it is consistent by construction).
void overlay_spread(TriangleCandidate& cand, int index, const FieldElement& value) {
  if (!cand.spreads[index]) {
    cand.spreads[index] = value;
  } else {
    assert(*cand.spreads[index] == value);
  }
}

}  // namespace

SolutionSet solve_quadrance_from_cross_law(const FieldElement& q2, const FieldElement& q3,
                                           const FieldElement& s1) {
  FieldSpec f = q2.field();
  FieldElement four = FieldElement::of(f, 4);
  FieldElement one = FieldElement::one(f);
  FieldElement radicand = four * q2 * q3 * (one - s1);
  SolutionSet out{{}, radicand};
  auto roots = sqrt_in_field(radicand);
  if (roots.empty()) return out;
  FieldElement base = q2 + q3;
  if (radicand.is_zero()) {
    out.roots.push_back({base, 2});
    return out;
  }
  for (const auto& r : roots) out.roots.push_back({base + r, 1});
  sort_roots(out.roots);
  return out;
}

SolutionSet solve_spread_from_triple_spread(const FieldElement& s1, const FieldElement& s2) {
  FieldSpec f = s1.field();
  FieldElement two = FieldElement::of(f, 2);
  FieldElement four = FieldElement::of(f, 4);
  FieldElement b = -two * (s1 + s2 - two * s1 * s2);
  FieldElement c = (s1 - s2) * (s1 - s2);
  FieldElement disc = b * b - four * c;
  SolutionSet out{{}, disc};
  auto roots = sqrt_in_field(disc);
  if (roots.empty()) return out;
  if (disc.is_zero()) {
    out.roots.push_back({-b / two, 2});
    return out;
  }
  for (const auto& r : roots) out.roots.push_back({(-b + r) / two, 1});
  sort_roots(out.roots);
  return out;
}

FieldSpec PartialTriangle::field() const {
  for (const auto& q : quadrances)
    if (q) return q->field();
  for (const auto& s : spreads)
    if (s) return s->field();
  throw UnsupportedPattern("no known values given");
}

CompletionResult complete_triangle(const PartialTriangle& known) {
  int nq = 0, ns = 0;
  int spread_index = -1, missing_q = -1;
  for (int i = 0; i < 3; ++i) {
    if (known.quadrances[i]) ++nq; else missing_q = i;
    if (known.spreads[i]) {
      ++ns;
      spread_index = i;
    }
  }

  if (nq == 3 && ns == 0) {
    CompletionResult result{"three_quadrances", std::nullopt, {}};
    result.candidates.push_back(make_candidate(
        {*known.quadrances[0], *known.quadrances[1], *known.quadrances[2]}, "unique"));
    return result;
  }

  if (nq == 2 && ns == 1 && spread_index == missing_q) {
    // SAS: the known spread sits between the known sides; the cross law
    // yields the opposite quadrance, with the classic two-branch ambiguity.
    int u = missing_q;
    int j = (u + 1) % 3, k = (u + 2) % 3;
    SolutionSet roots =
        solve_quadrance_from_cross_law(*known.quadrances[j], *known.quadrances[k],
                                       *known.spreads[u]);
    if (roots.empty())
      throw NotInField("no in-field quadrance satisfies the cross law",
                       roots.discriminant.to_string());
    CompletionResult result{"cross_law", roots.discriminant, {}};
    for (std::size_t n = 0; n < roots.roots.size(); ++n) {
      const FieldElement& root = roots.roots[n].value;
      std::array<FieldElement, 3> q = {known.quadrances[0].value_or(root),
                                       known.quadrances[1].value_or(root),
                                       known.quadrances[2].value_or(root)};
      auto cand = make_candidate(q, "root_" + std::to_string(n));
      overlay_spread(cand, u, *known.spreads[u]);
      result.candidates.push_back(std::move(cand));
    }
    return result;
  }

  if (nq == 2 && ns == 1 && known.quadrances[spread_index]) {
    // SSA: the known spread is opposite one of the known sides. The spread
    // law fixes the second spread, the triple spread formula the third, and
    // the spread law again scales it back to a quadrance.
    int i = spread_index;
    int j = -1, k = -1;
    for (int n = 0; n < 3; ++n) {
      if (n == i) continue;
      (known.quadrances[n] ? j : k) = n;
    }
    const FieldElement qi = *known.quadrances[i];
    const FieldElement qj = *known.quadrances[j];
    const FieldElement si = *known.spreads[i];
    FieldSpec f = qi.field();

    if (si.is_zero()) {
      // collinear family: every spread is zero and the cross law at the
      // unknown vertex pins the last quadrance
      SolutionSet roots = solve_quadrance_from_cross_law(qi, qj, FieldElement::zero(f));
      if (roots.empty())
        throw NotInField("no in-field quadrance completes the collinear configuration",
                         roots.discriminant.to_string());
      CompletionResult result{"spread_law_tsf", roots.discriminant, {}};
      for (std::size_t n = 0; n < roots.roots.size(); ++n) {
        std::array<FieldElement, 3> q = {qi, qi, qi};
        q[j] = qj;
        q[k] = roots.roots[n].value;
        auto cand = make_candidate(q, "root_" + std::to_string(n));
        overlay_spread(cand, i, si);
        result.candidates.push_back(std::move(cand));
      }
      return result;
    }

    if (qi.is_zero())
      throw InconsistentData("spread law cannot hold with Q" + std::to_string(i + 1) +
                             " = 0 and s" + std::to_string(i + 1) + " != 0");
    FieldElement scale = qi / si;  // D in Q = s D
    FieldElement sj = qj / scale;
    SolutionSet roots = solve_spread_from_triple_spread(si, sj);
    if (roots.empty())
      throw NotInField("no in-field spread satisfies the triple spread formula",
                       roots.discriminant.to_string());
    CompletionResult result{"spread_law_tsf", roots.discriminant, {}};
    for (std::size_t n = 0; n < roots.roots.size(); ++n) {
      const FieldElement& sk = roots.roots[n].value;
      std::array<FieldElement, 3> q = {qi, qi, qi};
      q[j] = qj;
      q[k] = sk * scale;
      auto cand = make_candidate(q, "root_" + std::to_string(n));
      overlay_spread(cand, i, si);
      overlay_spread(cand, j, sj);
      overlay_spread(cand, k, sk);
      result.candidates.push_back(std::move(cand));
    }
    return result;
  }

  if (nq == 0 && ns == 3) {
    SpreadTriple st{*known.spreads[0], *known.spreads[1], *known.spreads[2]};
    LawResidual residual = check_triple_spread(st);
    if (!residual.holds())
      throw InconsistentData("spread triple violates the triple spread formula (residual " +
                             residual.value.to_string() + ")");
    if (st.s1.is_zero() && st.s2.is_zero() && st.s3.is_zero())
      throw UnsupportedPattern("three zero spreads determine no quadrance ratios");
    // spread law: quadrances are proportional to spreads; report the ratio class
    auto cand = make_candidate({st.s1, st.s2, st.s3}, "unique");
    overlay_spread(cand, 0, st.s1);
    overlay_spread(cand, 1, st.s2);
    overlay_spread(cand, 2, st.s3);
    cand.similarity_only = true;
    return CompletionResult{"three_spreads", std::nullopt, {std::move(cand)}};
  }

  throw UnsupportedPattern(
      "unsupported combination of known values (supported: Q1,Q2,Q3; two quadrances with the "
      "included spread; two quadrances with an opposite spread; s1,s2,s3)");
}

}  // namespace rattrig
