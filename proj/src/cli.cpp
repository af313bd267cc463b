#include "rattrig/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rattrig/render.hpp"
#include "rattrig/svg.hpp"

namespace rattrig {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep))
    if (!current.empty()) parts.push_back(current);
  return parts;
}

std::array<Point, 3> parse_points(const FieldSpec& field, const std::string& text) {
  std::vector<std::string> tokens = split(text, ' ');
  if (tokens.size() != 3)
    throw ParseError("expected three points \"x,y x,y x,y\", got " +
                     std::to_string(tokens.size()));
  std::vector<Point> pts;
  for (const auto& token : tokens) {
    std::vector<std::string> coords = split(token, ',');
    if (coords.size() != 2) throw ParseError("bad point '" + token + "'");
    pts.emplace_back(FieldElement::parse(field, coords[0]), FieldElement::parse(field, coords[1]));
  }
  return {pts[0], pts[1], pts[2]};
}

// One "Q2=68" / "s1=1/2" / bare "68" item of a --quadrances / --spreads list.
struct KnownItem {
  std::optional<int> index;  // 0-based when keyed
  FieldElement value;
};

std::vector<KnownItem> parse_known_list(const FieldSpec& field, const std::string& text,
                                        char prefix) {
  std::vector<KnownItem> items;
  for (const auto& part : split(text, ',')) {
    KnownItem item{std::nullopt, FieldElement::zero(field)};
    std::string value_text = part;
    if (auto eq = part.find('='); eq != std::string::npos) {
      std::string key = part.substr(0, eq);
      if (key.size() != 2 || (key[0] != prefix && key[0] != std::toupper(prefix)) ||
          key[1] < '1' || key[1] > '3')
        throw ParseError("bad key '" + key + "' (expected " + std::string(1, prefix) +
                         "1.." + std::string(1, prefix) + "3)");
      item.index = key[1] - '1';
      value_text = part.substr(eq + 1);
    }
    item.value = FieldElement::parse(field, value_text);
    items.push_back(item);
  }
  return items;
}

void assign_keyed(std::array<std::optional<FieldElement>, 3>& slots,
                  const std::vector<KnownItem>& items, const std::string& what) {
  for (const auto& item : items) {
    if (!item.index) throw ParseError(what + " list mixes keyed and bare values");
    if (slots[*item.index])
      throw ParseError("duplicate " + what + " " + std::to_string(*item.index + 1));
    slots[*item.index] = item.value;
  }
}

std::uint64_t parse_seed_env() {
  const char* env = std::getenv("RATTRIG_SEED");
  if (!env) return 0;
  std::uint64_t seed = 0;
  std::string s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad RATTRIG_SEED value '" + s + "'");
  return seed;
}

void emit(std::ostream& out, const Json& json, const std::string& text, bool as_json) {
  if (as_json)
    out << json.dump(2) << "\n";
  else
    out << text;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

int run_solve(const FieldSpec& field, const std::string& quadrance_list,
              const std::string& spread_list, bool as_json, std::ostream& out) {
  std::vector<KnownItem> q_items =
      quadrance_list.empty() ? std::vector<KnownItem>{} : parse_known_list(field, quadrance_list, 'q');
  std::vector<KnownItem> s_items =
      spread_list.empty() ? std::vector<KnownItem>{} : parse_known_list(field, spread_list, 's');

  auto keyed = [](const std::vector<KnownItem>& items) {
    return std::any_of(items.begin(), items.end(), [](const KnownItem& i) { return bool(i.index); });
  };

  PartialTriangle known;

  if (keyed(s_items) || s_items.empty()) {
    assign_keyed(known.spreads, s_items, "spread");
  } else if (s_items.size() == 2 && q_items.empty()) {
    // two bare spreads: the triple spread quadratic for the third
    SolutionSet roots = solve_spread_from_triple_spread(s_items[0].value, s_items[1].value);
    Json j = roots_to_json(field, "triple_spread_roots",
                           {{"s1", s_items[0].value}, {"s2", s_items[1].value}}, roots);
    emit(out, j, roots_to_text(roots), as_json);
    return 0;
  } else if (s_items.size() == 3) {
    for (int i = 0; i < 3; ++i) known.spreads[i] = s_items[i].value;
  } else {
    throw ParseError("bare spread lists must have two or three entries (or use s1=.. keys)");
  }

  if (keyed(q_items) || q_items.empty()) {
    assign_keyed(known.quadrances, q_items, "quadrance");
  } else if (q_items.size() == 3) {
    for (int i = 0; i < 3; ++i) known.quadrances[i] = q_items[i].value;
  } else if (q_items.size() == 2) {
    // two bare quadrances fill the slots away from the single keyed spread
    int spread_index = -1;
    int spread_count = 0;
    for (int i = 0; i < 3; ++i)
      if (known.spreads[i]) {
        spread_index = i;
        ++spread_count;
      }
    if (spread_count != 1)
      throw ParseError("two bare quadrances need exactly one keyed spread to place them");
    int slot = 0;
    for (int i = 0; i < 3; ++i)
      if (i != spread_index) known.quadrances[i] = q_items[slot++].value;
  } else {
    throw ParseError("bare quadrance lists must have two or three entries (or use Q1=.. keys)");
  }

  std::vector<std::pair<std::string, FieldElement>> known_pairs;
  for (int i = 0; i < 3; ++i)
    if (known.quadrances[i]) known_pairs.emplace_back("Q" + std::to_string(i + 1), *known.quadrances[i]);
  for (int i = 0; i < 3; ++i)
    if (known.spreads[i]) known_pairs.emplace_back("s" + std::to_string(i + 1), *known.spreads[i]);

  CompletionResult result = complete_triangle(known);
  emit(out, completion_to_json(field, known_pairs, result), completion_to_text(result), as_json);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rational trigonometry over the rationals and odd prime fields"};
  app.name("rattrig");
  app.require_subcommand(1);
  app.fallthrough();  // --field / --format may follow the subcommand

  std::string field_text = "rational";
  std::string format = "json";
  app.add_option("--field", field_text, "coefficient field: rational | fp:<p>")
      ->capture_default_str();
  app.add_option("--format", format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "full exact dossier of a triangle");
  std::string points_text;
  analyze->add_option("--points", points_text, "three points \"x,y x,y x,y\"")->required();

  auto* solve = app.add_subcommand("solve", "complete a triangle from partial data");
  std::string quadrance_list, spread_list;
  solve->add_option("--quadrances", quadrance_list, "known quadrances, e.g. 34,68,74 or Q2=68,Q3=74");
  solve->add_option("--spread,--spreads", spread_list, "known spreads, e.g. s1=529/1258 or 3/4,3/4");

  auto* verify = app.add_subcommand("verify", "run the law suite over the chosen field");
  std::uint64_t random_samples = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_bound = 31;
  auto* random_opt = verify->add_option("--random", random_samples, "number of sampled triangles");
  verify->add_flag("--exhaustive", exhaustive, "enumerate all triangles up to translation (F_p)");
  auto* seed_opt = verify->add_option("--seed", seed, "sampling seed (default: $RATTRIG_SEED or 0)");
  verify->add_option("--exhaustive-bound", exhaustive_bound, "largest modulus allowed for --exhaustive")
      ->capture_default_str();

  auto* draw = app.add_subcommand("draw", "emit an SVG diagram");
  draw->require_subcommand(1);
  auto* draw_triangle = draw->add_subcommand("triangle", "annotated triangle");
  std::string draw_points_text, triangle_out_path;
  draw_triangle->add_option("--points", draw_points_text, "three points \"x,y x,y x,y\"")->required();
  draw_triangle->add_option("--out", triangle_out_path, "output SVG path")->required();
  auto* draw_protractor = draw->add_subcommand("protractor", "semicircular spread scale");
  int divisions = 20;
  std::string protractor_out_path;
  draw_protractor->add_option("--divisions", divisions, "tick divisions (>= 8)")
      ->capture_default_str();
  draw_protractor->add_option("--out", protractor_out_path, "output SVG path")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    const FieldSpec field = FieldSpec::parse(field_text);
    const bool as_json = format == "json";

    if (*analyze) {
      auto pts = parse_points(field, points_text);
      TriangleReport report = analyze_triangle(pts[0], pts[1], pts[2]);
      emit(out, report_to_json(report), report_to_text(report), as_json);
      return 0;
    }
    if (*solve) return run_solve(field, quadrance_list, spread_list, as_json, out);
    if (*verify) {
      if (exhaustive == bool(*random_opt))
        throw ParseError("verify needs exactly one of --random N or --exhaustive");
      if (!*seed_opt) seed = parse_seed_env();
      VerificationCensus census = exhaustive ? verify_exhaustive(field, exhaustive_bound)
                                             : verify_random(field, random_samples, seed);
      emit(out, census_to_json(census), census_to_text(census), as_json);
      return 0;
    }
    if (*draw_triangle) {
      auto pts = parse_points(field, draw_points_text);
      std::string svg = render_triangle_svg(analyze_triangle(pts[0], pts[1], pts[2]));
      write_file(triangle_out_path, svg);
      Json j;
      j["written"] = triangle_out_path;
      j["bytes"] = svg.size();
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*draw_protractor) {
      std::string svg = render_protractor_svg(divisions);
      write_file(protractor_out_path, svg);
      Json j;
      j["written"] = protractor_out_path;
      j["bytes"] = svg.size();
      out << j.dump(2) << "\n";
      return 0;
    }
    throw ParseError("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rattrig
