#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "k3lat/cli.hpp"
#include "k3lat/error.hpp"

using namespace k3lat;

namespace {

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  CommandResult r = run(args);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.text);
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(P_tmpdir) + "/k3lat_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("lattice JSON round-trips bit-identically, including huge entries") {
  Lattice big = twist(direct_sum({lattice_U(), lattice_nikulin()}), Integer("123456789012345678901234567890"));
  for (const Lattice& l : {lattice_E8(-1), lattice_gamma16(), big, Lattice(IntMatrix{{2}})}) {
    std::string once = lattice_to_json(l).dump();
    Lattice back = lattice_from_json(parse_json(once));
    CHECK(back.gram() == l.gram());
    CHECK(back.labels() == l.labels());
    CHECK(lattice_to_json(back).dump() == once);
  }
  Json j = lattice_to_json(big);
  CHECK(j["gram"][0][1].is_string());
  CHECK(to_json(Integer("9223372036854775807")).is_number());
  CHECK(to_json(Integer("9223372036854775808")).is_string());
  CHECK(to_json(Integer("-9223372036854775808")).is_number());
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
}

TEST_CASE("lattice JSON schema errors") {
  for (const char* bad : {R"({"gram": [[1, 2], [2]]})", R"({"gram": "x"})", R"({"name": 3, "gram": [[2]]})",
                          R"({"gram": [[2]], "labels": ["a", "b"]})", R"({"grams": [[2]]})", R"([[2]])",
                          R"({"gram": [[2.5]]})"}) {
    CAPTURE(bad);
    try {
      lattice_from_json(parse_json(bad));
      FAIL("expected malformed_json");
    } catch (const Error& e) {
      CHECK(e.code() == "malformed_json");
    }
  }
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("lattice info for E8(-2)") {
  Json j = run_json({"lattice", "info", "--std", "E8", "--twist", "-2"});
  CHECK(j == Json::parse(R"({"rank":8,"det":256,"even":true,"signature":[0,8]})"));
  Json k = run_json({"lattice", "info", "--std", "U(2)+U(2)+U(2)+N"});
  CHECK(k["det"] == -4096);
  CHECK(k["signature"] == Json::parse("[3,11]"));
}

TEST_CASE("lattice emit output is accepted back") {
  CommandResult r = run({"lattice", "emit", "--std", "U+E8(-1)"});
  REQUIRE(r.exit_code == 0);
  std::string path = temp_file("emit.json", r.text);
  CommandResult back = run({"lattice", "emit", "--input", path});
  CHECK(back.text == r.text);
  std::remove(path.c_str());
}

TEST_CASE("vectors and disc subcommands") {
  Json v = run_json({"lattice", "vectors", "--std", "E8(-1)", "--norm", "-2", "--count-only"});
  CHECK(v["count"] == 240);
  Json s = run_json({"lattice", "vectors", "--std", "A2", "--norm", "2", "--serial"});
  CHECK(s["vectors"].size() == 6);
  Json d = run_json({"disc", "--std", "E8(-2)"});
  CHECK(d["elements"] == 256);
  CHECK(d["q_histogram"]["0"] == 136);
  CHECK(d["q_histogram"]["1"] == 120);
  Json i = run_json({"disc", "--std", "U(2)", "--isotropic", "2"});
  CHECK(i["isotropic_subgroups"] == 2);
}

TEST_CASE("glue subcommand") {
  Json j = run_json({"glue", "--stock", "u2n"});
  CHECK(j["verification"] == Json::parse(R"({"even":true,"det":-1,"signature":[3,11],"index":64})"));
  std::string base = temp_file("base.json", R"({"gram": [[0, 2], [2, 0]]})");
  std::string vecs = temp_file("vecs.json", R"([["1/2", 0]])");
  Json g = run_json({"glue", "--base", base, "--vectors", vecs});
  CHECK(g["verification"]["index"] == 2);
  CHECK(g["verification"]["det"] == -1);
  std::string bad = temp_file("bad.json", R"([["1/2", "1/2"]])");
  CommandResult r = run({"glue", "--base", base, "--vectors", bad, "--json"});
  CHECK(r.exit_code == 1);
  CHECK(r.error_code == "not_isotropic");
  std::string broken = temp_file("broken.json", R"([["1/2", )");
  CHECK(run({"glue", "--base", base, "--vectors", broken}).exit_code == 3);
  for (const auto& p : {base, vecs, bad, broken}) std::remove(p.c_str());
}

TEST_CASE("k3, ns and ell subcommands") {
  Json m = run_json({"k3", "maps", "--check"});
  CHECK(m["ok"] == true);
  CHECK(m["str"] == Json::parse(R"({"s":6,"t":0,"r":8})"));
  Json c = run_json({"ns", "classify", "--L2", "8"});
  CHECK(c["families"].size() == 2);
  CHECK(run_json({"ns", "classify", "--L2", "6"})["families"].size() == 1);
  CHECK(run_json({"ns", "moduli", "--example", "M8"})["value"] == 11);
  CHECK(run_json({"ns", "obstruction", "--rankT", "3"})["is_square"] == false);
  Json f = run_json({"ell", "fibers", "--a", "1,0,0,0,1", "--b", "1"});
  CHECK(f["fibers"]["infinity"] == "I_16");
  CHECK(f["fibers"]["fiber_counts"]["I_1"] == 8);
  Json q = run_json({"ell", "quotient", "--a", "1,0,0,0,1", "--b", "1"});
  CHECK(q["fibers"]["infinity"] == "I_8");
  CHECK(q["fibers"]["fiber_counts"]["I_2"] == 8);
  Json st = run_json({"ell", "shioda-tate", "--fibers", "I2:8,I1:8", "--torsion", "2"});
  CHECK(st == Json::parse(R"({"picard_rank":10,"ns_discriminant":64})"));
  Json r1 = run_json({"ell", "random", "--seed", "5"});
  Json r2 = run_json({"--seed", "5", "ell", "random"});
  CHECK(r1 == r2);
  CHECK(r1["fibers"]["fiber_counts"]["I_2"] == 8);
}

TEST_CASE("exit codes") {
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"lattice", "info"}).exit_code == 1);
  CHECK(run({"lattice", "info", "--gram", "[[2,1],[1"}).exit_code == 3);
  CommandResult deg = run({"lattice", "info", "--gram", "[[1,1],[1,1]]", "--json"});
  CHECK(deg.exit_code == 1);
  CHECK(deg.error_code == "degenerate");
  CHECK(Json::parse(deg.text)["code"] == "degenerate");
  CHECK(run({"ell", "shioda-tate", "--fibers", "I2:8", "--mw-rank", "1"}).error_code == "unsupported");
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"ns", "classify", "--L2", "12", "--json"};
  CHECK(run(args).text == run(args).text);
}
