#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rattrig/planar.hpp"
#include "rattrig/solver.hpp"
#include "rattrig/verify.hpp"

// Stable output shapes: insertion-ordered keys, every field value in the
// bit-exact string grammar of its field. Parsing an emitted document and
// re-serializing it reproduces the bytes.
namespace rattrig {

using Json = nlohmann::ordered_json;

Json report_to_json(const TriangleReport& report);
std::string report_to_text(const TriangleReport& report);

Json completion_to_json(const FieldSpec& field,
                        const std::vector<std::pair<std::string, FieldElement>>& known,
                        const CompletionResult& result);
std::string completion_to_text(const CompletionResult& result);

Json roots_to_json(const FieldSpec& field, const std::string& pattern,
                   const std::vector<std::pair<std::string, FieldElement>>& known,
                   const SolutionSet& roots);
std::string roots_to_text(const SolutionSet& roots);

Json census_to_json(const VerificationCensus& census);
std::string census_to_text(const VerificationCensus& census);

}  // namespace rattrig
