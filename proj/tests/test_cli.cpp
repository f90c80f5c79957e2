#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "char2lift/cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = char2lift::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json out_json(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("worked invocations from the interface contract") {
  const CliResult verify =
      run({"verify-lift", "--kind", "I", "--e", "4", "--f", "2", "-x", "2*P2"});
  CHECK(verify.code == 0);
  CHECK(out_json(verify)["passed"] == true);

  const CliResult enumerate =
      run({"enumerate", "--family", "S", "--n", "7", "--e", "3", "--workers", "8"});
  CHECK(enumerate.code == 0);
  const auto classes = out_json(enumerate)["classes"];
  CHECK(classes == nlohmann::json::parse("[[0,0],[0,4]]"));
  CHECK(enumerate.err.find("enumerating") != std::string::npos);
  CHECK(enumerate.out.find("enumerating") == std::string::npos);

  const CliResult predict = run({"predict", "--family", "T", "--e", "6", "--parity", "even"});
  CHECK(predict.code == 0);
  CHECK(predict.out == "16\n");
}

TEST_CASE("predicted counts across families and parities") {
  CHECK(run({"predict", "--family", "T", "--e", "6", "--parity", "odd"}).out == "4\n");
  CHECK(run({"predict", "--family", "S", "--e", "5", "--parity", "odd"}).out == "16\n");
  CHECK(run({"predict", "--family", "S", "--e", "5", "--parity", "even"}).out == "8\n");
  CHECK(run({"predict", "--family", "U", "--e", "3", "--parity", "even"}).out == "8\n");
}

TEST_CASE("usage errors exit with code 2 and a diagnostic on stderr") {
  const std::vector<std::vector<std::string>> bad = {
      {},                                                              // no subcommand
      {"frobnicate"},                                                  // unknown subcommand
      {"class", "-x", "P2"},                                           // missing --e
      {"class", "--e", "3"},                                           // missing --expr
      {"class", "-x", "P2", "--e", "3", "--bogus"},                    // unknown flag
      {"class", "-x", "P2", "--e", "3", "--format", "yaml"},           // bad format
      {"charpoly", "-x", "P2", "--format", "csv"},                     // csv not a charpoly format
      {"class", "-x", "Q17", "--e", "3"},                              // unparsable expression
      {"class", "-x", "P2", "--e", "1"},                               // exponent below 2
      {"verify-lift", "--kind", "I", "--e", "4", "-x", "2*P2"},        // kind I without --f
      {"verify-lift", "--kind", "II", "--e", "3", "--f", "1", "-x", "P2"},  // --f with kind II
      {"verify-lift", "--kind", "III", "--e", "3", "-x", "P2"},        // unknown kind
      {"construct-lift", "--family", "U", "--kind", "II", "--e", "3"},  // U has no lift expression
      {"enumerate", "--family", "X", "--n", "3", "--e", "3"},          // unknown family
      {"enumerate", "--family", "S", "--n", "9", "--e", "3"},          // above the bitmask cap
      {"sample", "--family", "S", "--n", "5", "--e", "3", "--trials", "10"},  // missing --seed
      {"witness-u", "--e", "3", "--targets", "1,0"},                   // odd target residue
      {"witness-u", "--e", "3", "--targets", "2,2"},                   // 4 does not divide r_3
      {"witness-u", "--e", "3", "--targets", "2"},                     // wrong tuple length
      {"charpoly", "-x", "P2", "--mod-bits", "64"},                    // beyond machine words
  };
  for (const auto& args : bad) {
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    const CliResult r = run(args);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
  }
}

TEST_CASE("help requests succeed and list the subcommands") {
  const CliResult top = run({"--help"});
  CHECK(top.code == 0);
  for (const char* name : {"charpoly", "walks", "class", "verify-lift", "construct-lift",
                           "enumerate", "sample", "predict", "witness-u", "report", "selftest"})
    CHECK(top.out.find(name) != std::string::npos);
  const CliResult sub = run({"enumerate", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--workers") != std::string::npos);
}

TEST_CASE("class subcommand infers the family from the expression") {
  const CliResult sym = run({"class", "-x", "P2+P1", "--e", "3"});
  CHECK(sym.code == 0);
  CHECK(out_json(sym)["family"] == "S");
  CHECK(out_json(sym)["class"] == nlohmann::json::parse("[0,4]"));

  const CliResult dir = run({"class", "-x", "DP3", "--e", "3"});
  CHECK(dir.code == 0);
  CHECK(out_json(dir)["family"] == "U");

  const CliResult tourn = run({"class", "-x", "join(V1,V1,V1,V1)", "--e", "4"});
  CHECK(tourn.code == 0);
  CHECK(out_json(tourn)["family"] == "T");
  CHECK(out_json(tourn)["class"] == nlohmann::json::parse("[12,0,8]"));

  CHECK(run({"class", "-x", "P2+P1", "--e", "3", "--format", "csv"}).out == "0,4\n");
  const CliResult text = run({"class", "-x", "P2+P1", "--e", "3", "--format", "text"});
  CHECK(text.out.find("(0,4)") != std::string::npos);
}

TEST_CASE("charpoly and walks agree with hand-computed small cases") {
  const CliResult cp = run({"charpoly", "-x", "P3", "--depth", "3", "--mod-bits", "8"});
  CHECK(cp.code == 0);
  CHECK(out_json(cp)["coeffs"] == nlohmann::json::parse("[1,0,254,0]"));
  CHECK(out_json(cp)["order"] == "3");
  CHECK(out_json(cp)["type"] == "graph");

  const CliResult w = run({"walks", "-x", "P2", "--depth", "3", "--mod-bits", "16"});
  CHECK(w.code == 0);
  CHECK(out_json(w)["walks"] == nlohmann::json::parse("[2,2,2,2]"));

  const CliResult tw = run({"walks", "-x", "T1", "--depth", "3", "--mod-bits", "16"});
  CHECK(tw.code == 0);
  CHECK(out_json(tw)["type"] == "tournament");
  CHECK(out_json(tw)["walks"] == nlohmann::json::parse("[3,3,3,3]"));
}

TEST_CASE("environment variable sets the default modulus width") {
  setenv("CHAR2LIFT_MOD_BITS", "8", 1);
  const CliResult cp = run({"charpoly", "-x", "P3", "--depth", "2"});
  CHECK(cp.code == 0);
  CHECK(out_json(cp)["mod_bits"] == 8);
  CHECK(out_json(cp)["coeffs"] == nlohmann::json::parse("[1,0,254]"));

  setenv("CHAR2LIFT_MOD_BITS", "junk", 1);
  CHECK(run({"charpoly", "-x", "P3", "--depth", "2"}).code == 2);
  CHECK(run({"charpoly", "-x", "P3", "--depth", "2", "--mod-bits", "8"}).code == 0);
  unsetenv("CHAR2LIFT_MOD_BITS");

  CHECK(out_json(run({"charpoly", "-x", "P3", "--depth", "2"}))["mod_bits"] == 32);
}

TEST_CASE("verify-lift fails with exit code 1 on a non-lifter") {
  const CliResult r = run({"verify-lift", "--kind", "I", "--e", "4", "--f", "2", "-x", "P2"});
  CHECK(r.code == 1);
  CHECK(out_json(r)["passed"] == false);
  const CliResult text =
      run({"verify-lift", "--kind", "I", "--e", "4", "--f", "2", "-x", "P2", "--format", "text"});
  CHECK(text.code == 1);
  CHECK(text.out.find("FAIL") != std::string::npos);
}

TEST_CASE("construct-lift output re-parses and re-certifies") {
  struct Spec {
    const char* family;
    const char* kind;
    int e;
    int f;
  };
  for (const Spec spec : {Spec{"S", "I", 4, 2}, Spec{"S", "II", 3, 0}, Spec{"T", "I", 5, 4},
                          Spec{"T", "II", 6, 0}}) {
    CAPTURE(std::string(spec.family));
    CAPTURE(std::string(spec.kind));
    std::vector<std::string> args = {"construct-lift", "--family", spec.family,
                                     "--kind",         spec.kind,   "--e",
                                     std::to_string(spec.e)};
    if (spec.kind == std::string("I")) {
      args.push_back("--f");
      args.push_back(std::to_string(spec.f));
    }
    const CliResult built = run(args);
    REQUIRE(built.code == 0);
    const auto j = out_json(built);
    CHECK(j["family"] == spec.family);
    std::vector<std::string> verify = {"verify-lift", "--kind", spec.kind,
                                       "--e",         std::to_string(spec.e),
                                       "-x",          j["expr"].get<std::string>()};
    if (spec.kind == std::string("I")) {
      verify.push_back("--f");
      verify.push_back(std::to_string(spec.f));
    }
    CHECK(run(verify).code == 0);
  }
}

TEST_CASE("witness-u reports multipliers and verification") {
  const CliResult r = run({"witness-u", "--e", "3", "--targets", "2,0"});
  CHECK(r.code == 0);
  const auto j = out_json(r);
  CHECK(j["verified"] == true);
  CHECK(j["achieved"] == nlohmann::json::parse("[2,0]"));
  CHECK(j["multipliers"] == nlohmann::json::parse(R"(["7","2"])"));
  CHECK(j["expr"].get<std::string>().find("DP") != std::string::npos);

  const CliResult sanity = run({"class", "-x", j["expr"].get<std::string>(), "--e", "3"});
  CHECK(out_json(sanity)["class"] == nlohmann::json::parse("[2,0]"));
}

TEST_CASE("report compares observed counts against predictions") {
  const CliResult r =
      run({"report", "--family", "S", "--e", "3", "--n", "3,4,5", "--workers", "2"});
  CHECK(r.code == 0);
  const auto rows = out_json(r)["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["n"] == 3);
  CHECK(rows[0]["observed"] == "2");
  CHECK(rows[0]["predicted"] == "2");
  CHECK(rows[0]["equal"] == true);
  CHECK(rows[1]["observed"] == "1");
  CHECK(rows[2]["observed"] == "2");
  for (const auto& row : rows) CHECK(row["bound_ok"] == true);

  const CliResult text = run(
      {"report", "--family", "T", "--e", "4", "--n", "4", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("n=4 observed=2 predicted=2 bound_ok equal") != std::string::npos);
}

TEST_CASE("results can be redirected to a file with --out") {
  const std::string path = "cli_out_test.json";
  const CliResult r = run({"class", "-x", "P2+P1", "--e", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(nlohmann::json::parse(content.str())["class"] == nlohmann::json::parse("[0,4]"));
  std::remove(path.c_str());
}

TEST_CASE("sampling through the CLI is deterministic in the seed") {
  const std::vector<std::string> args = {"sample", "--family", "T",     "--n",    "6",
                                         "--e",    "4",        "--trials", "64", "--seed", "9"};
  const CliResult first = run(args);
  CHECK(first.code == 0);
  CHECK(run(args).out == first.out);
  const auto j = out_json(first);
  CHECK(j["provenance"] == "sampled");
  CHECK(j["seed"] == 9);
  CHECK(j["trials"] == 64);
}

TEST_CASE("enumerate emits csv and text renderings") {
  CHECK(run({"enumerate", "--family", "S", "--n", "3", "--e", "3", "--format", "csv"}).out ==
        "0,0\n0,4\n");
  const CliResult text =
      run({"enumerate", "--family", "S", "--n", "3", "--e", "3", "--format", "text"});
  CHECK(text.out.find("2 classes") != std::string::npos);
  CHECK(text.out.find("(0,4)") != std::string::npos);
}

TEST_CASE("selftest runs the embedded property suite") {
  const CliResult r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("selftest: 11/11 passed") != std::string::npos);
}
