#include "rattrig/render.hpp"

#include <sstream>

namespace rattrig {
namespace {

Json spreads_to_json(const std::array<std::optional<FieldElement>, 3>& spreads) {
  Json arr = Json::array();
  for (const auto& s : spreads) {
    if (s)
      arr.push_back(s->to_string());
    else
      arr.push_back(nullptr);
  }
  return arr;
}

Json candidate_to_json(const TriangleCandidate& cand) {
  Json j;
  j["branch"] = cand.branch;
  Json q = Json::array();
  for (const auto& v : cand.quadrances) q.push_back(v.to_string());
  j["quadrances"] = q;
  j["spreads"] = spreads_to_json(cand.spreads);
  j["quadrea"] = cand.quadrea.to_string();
  j["area_sq"] = cand.area_sq.to_string();
  j["similarity_only"] = cand.similarity_only;
  return j;
}

std::string optional_spread_text(const std::optional<FieldElement>& s) {
  return s ? s->to_string() : "-";
}

}  // namespace

Json report_to_json(const TriangleReport& report) {
  Json j;
  j["field"] = report.points[0].field().to_string();
  Json pts = Json::array();
  for (const auto& p : report.points) pts.push_back({p.x.to_string(), p.y.to_string()});
  j["points"] = pts;
  Json q = Json::array();
  for (const auto& v : report.quadrances) q.push_back(v.to_string());
  j["quadrances"] = q;
  if (report.spreads) {
    Json s = Json::array();
    for (const auto& v : *report.spreads) s.push_back(v.to_string());
    j["spreads"] = s;
  } else {
    j["spreads"] = nullptr;
  }
  j["quadrea"] = report.quadrea.to_string();
  j["area_sq"] = report.area_sq.to_string();
  j["collinear"] = report.collinear;
  Json degs = Json::array();
  for (const auto& d : report.degeneracies) degs.push_back(d.tag());
  j["degeneracies"] = degs;
  return j;
}

std::string report_to_text(const TriangleReport& report) {
  std::ostringstream out;
  out << "field: " << report.points[0].field().to_string() << "\n";
  out << "points: " << report.points[0].to_string() << " " << report.points[1].to_string() << " "
      << report.points[2].to_string() << "\n";
  out << "quadrances: Q1=" << report.quadrances[0].to_string()
      << " Q2=" << report.quadrances[1].to_string() << " Q3=" << report.quadrances[2].to_string()
      << "\n";
  if (report.spreads) {
    out << "spreads: s1=" << (*report.spreads)[0].to_string()
        << " s2=" << (*report.spreads)[1].to_string()
        << " s3=" << (*report.spreads)[2].to_string() << "\n";
  } else {
    out << "spreads: undefined (null side line)\n";
  }
  out << "quadrea: " << report.quadrea.to_string() << "\n";
  out << "area_sq: " << report.area_sq.to_string() << "\n";
  out << "collinear: " << (report.collinear ? "yes" : "no") << "\n";
  out << "degeneracies:";
  if (report.degeneracies.empty()) {
    out << " (none)";
  } else {
    for (const auto& d : report.degeneracies) out << " " << d.tag();
  }
  out << "\n";
  return out.str();
}

Json completion_to_json(const FieldSpec& field,
                        const std::vector<std::pair<std::string, FieldElement>>& known,
                        const CompletionResult& result) {
  Json j;
  j["field"] = field.to_string();
  j["pattern"] = result.pattern;
  Json k;
  for (const auto& [name, value] : known) k[name] = value.to_string();
  j["known"] = k;
  if (result.discriminant)
    j["discriminant"] = result.discriminant->to_string();
  else
    j["discriminant"] = nullptr;
  Json cands = Json::array();
  for (const auto& c : result.candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = cands;
  return j;
}

std::string completion_to_text(const CompletionResult& result) {
  std::ostringstream out;
  out << "pattern: " << result.pattern << "\n";
  if (result.discriminant) out << "discriminant: " << result.discriminant->to_string() << "\n";
  for (const auto& c : result.candidates) {
    out << "candidate " << c.branch << (c.similarity_only ? " (similarity class)" : "") << ":\n";
    out << "  quadrances: Q1=" << c.quadrances[0].to_string()
        << " Q2=" << c.quadrances[1].to_string() << " Q3=" << c.quadrances[2].to_string() << "\n";
    out << "  spreads: s1=" << optional_spread_text(c.spreads[0])
        << " s2=" << optional_spread_text(c.spreads[1])
        << " s3=" << optional_spread_text(c.spreads[2]) << "\n";
    out << "  quadrea: " << c.quadrea.to_string() << "  area_sq: " << c.area_sq.to_string()
        << "\n";
  }
  return out.str();
}

Json roots_to_json(const FieldSpec& field, const std::string& pattern,
                   const std::vector<std::pair<std::string, FieldElement>>& known,
                   const SolutionSet& roots) {
  Json j;
  j["field"] = field.to_string();
  j["pattern"] = pattern;
  Json k;
  for (const auto& [name, value] : known) k[name] = value.to_string();
  j["known"] = k;
  j["discriminant"] = roots.discriminant.to_string();
  Json arr = Json::array();
  for (const auto& r : roots.roots) {
    Json root;
    root["value"] = r.value.to_string();
    root["multiplicity"] = r.multiplicity;
    arr.push_back(root);
  }
  j["roots"] = arr;
  return j;
}

std::string roots_to_text(const SolutionSet& roots) {
  std::ostringstream out;
  out << "discriminant: " << roots.discriminant.to_string() << "\n";
  if (roots.empty()) {
    out << "roots: (none in field)\n";
    return out.str();
  }
  out << "roots:";
  for (const auto& r : roots.roots) {
    out << " " << r.value.to_string();
    if (r.multiplicity > 1) out << " (x" << r.multiplicity << ")";
  }
  out << "\n";
  return out.str();
}

Json census_to_json(const VerificationCensus& census) {
  Json j;
  j["field"] = census.field.to_string();
  j["mode"] = census.mode;
  j["seed"] = census.seed;
  j["configurations"] = census.configurations;
  j["failures"] = census.failures;
  j["null_lines"] = census.null_lines;
  j["isotropic_segments"] = census.isotropic_segments;
  j["collinear"] = census.collinear;
  if (census.first_failure)
    j["first_failure"] = *census.first_failure;
  else
    j["first_failure"] = nullptr;
  return j;
}

std::string census_to_text(const VerificationCensus& census) {
  std::ostringstream out;
  out << "field: " << census.field.to_string() << "\n";
  out << "mode: " << census.mode << "\n";
  out << "seed: " << census.seed << "\n";
  out << "configurations: " << census.configurations << "\n";
  out << "failures: " << census.failures << "\n";
  out << "null_lines: " << census.null_lines << "\n";
  out << "isotropic_segments: " << census.isotropic_segments << "\n";
  out << "collinear: " << census.collinear << "\n";
  if (census.first_failure) out << "first_failure: " << *census.first_failure << "\n";
  return out.str();
}

}  // namespace rattrig
