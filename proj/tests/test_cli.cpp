#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rattrig/cli.hpp"
#include "rattrig/render.hpp"
#include "rattrig/svg.hpp"

using namespace rattrig;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

TEST_CASE("analyze emits the exact dossier as ordered JSON") {
  auto r = run({"analyze", "--points", "0,0 7,5 2,8"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["field"] == "rational");
  CHECK(j["quadrances"] == Json::array({"34", "68", "74"}));
  CHECK(j["spreads"] == Json::array({"529/1258", "529/629", "529/578"}));
  CHECK(j["quadrea"] == "8464");
  CHECK(j["area_sq"] == "529");
  CHECK(j["collinear"] == false);
  CHECK(j["degeneracies"] == Json::array());

  // fixed key order and byte-identical re-serialization
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"field", "points", "quadrances", "spreads", "quadrea",
                                         "area_sq", "collinear", "degeneracies"});
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("analyze over a prime field flags isotropic degeneracies") {
  auto r = run({"--field", "fp:13", "analyze", "--points", "0,0 1,5 2,3"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["field"] == "fp:13");
  CHECK(j["quadrances"][2] == "0 mod 13");
  CHECK(j["spreads"].is_null());
  CHECK(j["degeneracies"] == Json::array({"isotropic:A1A3", "isotropic:A1A2",
                                          "null_line:A1A3", "null_line:A1A2"}));
}

TEST_CASE("analyze reports collinear triples") {
  auto r = run({"analyze", "--points", "0,0 1,1 2,2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["collinear"] == true);
  CHECK(j["quadrea"] == "0");
}

TEST_CASE("analyze input errors exit with code 2 or 3") {
  CHECK(run({"analyze", "--points", "0,0 1,1"}).code == 2);
  CHECK(run({"analyze", "--points", "0,0 x,1 2,2"}).code == 2);
  CHECK(run({"--field", "fp:4", "analyze", "--points", "0,0 1,1 2,0"}).code == 2);
  CHECK(run({"analyze", "--points", "0,0 0,0 2,2"}).code == 3);  // duplicate points
}

TEST_CASE("solve handles the cross-law pattern with both branches") {
  auto r = run({"solve", "--quadrances", "68,74", "--spread", "s1=529/1258"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pattern"] == "cross_law");
  CHECK(j["known"]["Q2"] == "68");
  CHECK(j["known"]["Q3"] == "74");
  CHECK(j["discriminant"] == "11664");
  REQUIRE(j["candidates"].size() == 2);
  CHECK(j["candidates"][0]["quadrances"] == Json::array({"34", "68", "74"}));
  CHECK(j["candidates"][1]["quadrances"] == Json::array({"250", "68", "74"}));
}

TEST_CASE("solve from three quadrances matches analyze") {
  auto r = run({"solve", "--quadrances", "34,68,74"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pattern"] == "three_quadrances");
  REQUIRE(j["candidates"].size() == 1);
  CHECK(j["candidates"][0]["spreads"] ==
        Json::array({"529/1258", "529/629", "529/578"}));
}

TEST_CASE("solve the triple spread quadratic from two spreads") {
  auto r = run({"solve", "--spreads", "3/4,3/4"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pattern"] == "triple_spread_roots");
  CHECK(j["discriminant"] == "9/16");
  REQUIRE(j["roots"].size() == 2);
  CHECK(j["roots"][0]["value"] == "0");
  CHECK(j["roots"][1]["value"] == "3/4");
}

TEST_CASE("solve exit codes distinguish failure classes") {
  auto not_in_field = run({"solve", "--quadrances", "1,1", "--spread", "s1=1/2"});
  CHECK(not_in_field.code == 4);
  CHECK(not_in_field.err.find("discriminant 2") != std::string::npos);

  CHECK(run({"solve", "--spreads", "1/4,1/4,1/4"}).code == 3);   // violates the TSF
  CHECK(run({"solve", "--quadrances", "1,2"}).code == 2);        // underdetermined
  CHECK(run({"solve", "--quadrances", "0,1,5"}).code == 3);      // provably inconsistent
}

TEST_CASE("solve works over prime fields through the cli") {
  auto r = run({"--field", "fp:13", "solve", "--quadrances", "3,5", "--spread", "s1=3"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["field"] == "fp:13");
  // radicand 4*3*5*(1-3) = -120 = 10 mod 13 = {6,7}^2; roots 8 +/- 6
  CHECK(j["discriminant"] == "10 mod 13");
  REQUIRE(j["candidates"].size() == 2);
  CHECK(j["candidates"][0]["quadrances"][0] == "1 mod 13");
  CHECK(j["candidates"][1]["quadrances"][0] == "2 mod 13");

  // a non-residue radicand is a certified miss: 4*3*5*(1-2) = 5 mod 13
  auto miss = run({"--field", "fp:13", "solve", "--quadrances", "3,5", "--spread", "s1=2"});
  CHECK(miss.code == 4);
  CHECK(miss.err.find("5 mod 13") != std::string::npos);
}

TEST_CASE("solve rejects malformed known-value lists") {
  CHECK(run({"solve", "--quadrances", "Q1=1,2", "--spread", "s1=1"}).code == 2);  // mixed
  CHECK(run({"solve", "--quadrances", "Q1=1,Q1=2", "--spread", "s2=1"}).code == 2);
  CHECK(run({"solve", "--quadrances", "Q4=1"}).code == 2);
  CHECK(run({"solve"}).code == 2);  // nothing known
  CHECK(run({"solve", "--spreads", "1/2"}).code == 2);  // single bare spread is ambiguous
}

TEST_CASE("analyze handles a large prime modulus") {
  auto r = run({"--field", "fp:104729", "analyze", "--points", "0,0 7,5 2,8"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["quadrances"] == Json::array({"34 mod 104729", "68 mod 104729", "74 mod 104729"}));
  CHECK(j["quadrea"] == "8464 mod 104729");
}

TEST_CASE("verify is reproducible for a fixed seed") {
  auto a = run({"verify", "--random", "64", "--seed", "42"});
  auto b = run({"verify", "--random", "64", "--seed", "42"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["failures"] == 0);
  CHECK(j["configurations"] == 64);
  CHECK(j["seed"] == 42);
}

TEST_CASE("verify picks up the seed from the environment") {
  ::setenv("RATTRIG_SEED", "777", 1);
  auto r = run({"verify", "--random", "8"});
  ::unsetenv("RATTRIG_SEED");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["seed"] == 777);
}

TEST_CASE("exhaustive verification of a small prime field") {
  auto r = run({"--field", "fp:5", "verify", "--exhaustive"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  // all triangles with A1 pinned at the origin: (p^2-1)(p^2-2)
  CHECK(j["configurations"] == 552);
  CHECK(j["failures"] == 0);
  // 5 = 1 mod 4: two isotropic directions, 2(p-1) vectors each, per side
  CHECK(j["isotropic_segments"] == 552);
  CHECK(j["null_lines"] == 552);
  // collinear triples: (p^2-1)(p-2)
  CHECK(j["collinear"] == 72);
}

TEST_CASE("exhaustive verification respects its bound and field kind") {
  CHECK(run({"--field", "fp:37", "verify", "--exhaustive"}).code == 2);
  CHECK(run({"verify", "--exhaustive"}).code == 2);  // rational field
  CHECK(run({"--field", "fp:2", "verify", "--exhaustive"}).code == 2);
  CHECK(run({"verify", "--random", "4", "--exhaustive"}).code == 2);
}

TEST_CASE("draw triangle writes a deterministic annotated SVG") {
  std::string path = "test_tri.svg";
  auto a = run({"draw", "triangle", "--points", "0,0 7,5 2,8", "--out", path});
  REQUIRE(a.code == 0);
  std::string first = slurp(path);
  auto b = run({"draw", "triangle", "--points", "0,0 7,5 2,8", "--out", path});
  REQUIRE(b.code == 0);
  CHECK(first == slurp(path));
  CHECK(first.find("Q1=34") != std::string::npos);
  CHECK(first.find("Q2=68") != std::string::npos);
  CHECK(first.find("Q3=74") != std::string::npos);
  CHECK(first.find("s1=529/1258") != std::string::npos);
  CHECK(first.find("A1 [0,0]") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run({"--field", "fp:13", "draw", "triangle", "--points", "0,0 1,0 0,1", "--out", path})
            .code == 2);
}

TEST_CASE("draw protractor places table spreads at their classical angles") {
  std::string path = "test_prot.svg";
  auto r = run({"draw", "protractor", "--divisions", "20", "--out", path});
  REQUIRE(r.code == 0);
  std::string svg = slurp(path);
  auto again = run({"draw", "protractor", "--divisions", "20", "--out", path});
  REQUIRE(again.code == 0);
  CHECK(svg == slurp(path));
  std::remove(path.c_str());

  CHECK(svg.find(">1/4<") != std::string::npos);  // labels are reduced fractions
  CHECK(svg.find(">1/2<") != std::string::npos);
  CHECK(svg.find(">1<") != std::string::npos);

  // the s = 1/4 tick sits at 30 degrees, s = 1/2 at 45
  const double r30 = 30.0 * M_PI / 180.0, r45 = 45.0 * M_PI / 180.0;
  std::string tick30 = fmt6(400.0 + 340.0 * std::cos(r30)) + "\" y2=\"" +
                       fmt6(540.0 - 340.0 * std::sin(r30));
  std::string tick45 = fmt6(400.0 + 340.0 * std::cos(r45)) + "\" y2=\"" +
                       fmt6(540.0 - 340.0 * std::sin(r45));
  CHECK(svg.find(tick30) != std::string::npos);
  CHECK(svg.find(tick45) != std::string::npos);

  CHECK(run({"draw", "protractor", "--divisions", "7", "--out", path}).code == 2);
}

TEST_CASE("text format renders the same facts") {
  auto r = run({"--format", "text", "analyze", "--points", "0,0 7,5 2,8"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("quadrances: Q1=34 Q2=68 Q3=74") != std::string::npos);
  CHECK(r.out.find("area_sq: 529") != std::string::npos);
}

TEST_CASE("json output parses and re-serializes byte-identically") {
  for (auto args : {std::vector<std::string>{"analyze", "--points", "0,0 7,5 2,8"},
                    std::vector<std::string>{"solve", "--quadrances", "34,68,74"},
                    std::vector<std::string>{"verify", "--random", "16", "--seed", "1"},
                    std::vector<std::string>{"--field", "fp:13", "analyze", "--points",
                                             "0,0 1,5 2,3"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  }
}
