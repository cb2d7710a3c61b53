#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gqs/cli.hpp"
#include "gqs/config.hpp"
#include "gqs/enumerate.hpp"
#include "gqs/graph.hpp"
#include "gqs/graph6.hpp"
#include "gqs/hopf.hpp"
#include "gqs/serialize.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& input = "") {
  std::vector<const char*> argv;
  argv.push_back("gqs");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = gqs::run(static_cast<int>(argv.size()), argv.data(), in,
                            out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream file(std::string(GQS_GOLDEN_DIR) + "/" + name);
  REQUIRE(file.good());
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("canon reads edge lists from standard input") {
  const auto r = run_cli({"canon"}, "2 5\n5 7\n");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2\n1 3\n");
  CHECK(r.err.empty());
}

TEST_CASE("canon accepts files, graph6 input, and json output") {
  const auto direct = run_cli({"canon", "--g6", "Bw"});
  CHECK(direct.code == 0);
  CHECK(direct.out == "1 2\n1 3\n2 3\n");

  const auto as_json = run_cli({"canon", "--json"}, "4 9\n9 6\n4 6\n");
  CHECK(as_json.code == 0);
  CHECK(nlohmann::json::parse(as_json.out) ==
        nlohmann::json::parse("[[1,2],[1,3],[2,3]]"));

  const auto blank_tolerant = run_cli({"canon"}, "\n2 5\n\n5 7\n\n");
  CHECK(blank_tolerant.code == 0);
  CHECK(blank_tolerant.out == "1 2\n1 3\n");
}

TEST_CASE("eval counts pattern copies") {
  const auto r = run_cli({"eval", "--pattern", "Bw", "--host", "D}g"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  const auto oracle =
      run_cli({"eval", "--pattern", "Bw", "--host", "D}g", "--oracle"});
  CHECK(oracle.out == "3\n");
  const auto as_json =
      run_cli({"eval", "--pattern", "A_", "--host", "D}g", "--json"});
  CHECK(as_json.out == "7\n");
}

TEST_CASE("product prints coefficient graph6 lines in display order") {
  const auto r = run_cli({"product", "A_", "A_"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 A_\n2 Bo\n2 C`\n");

  const auto as_json = run_cli({"product", "A_", "A_", "--json"});
  const auto parsed = nlohmann::json::parse(as_json.out);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["graph"] == nlohmann::json::parse("[[1,2]]"));
  CHECK(parsed[0]["coeff"] == "1");
  CHECK(parsed[1]["coeff"] == "2");

  // JSON output round-trips through the element parser.
  const gqs::HopfElement back = gqs::element_from_json(parsed);
  const gqs::HopfElement expected =
      multiply(gqs::HopfElement::basis(gqs::canonical({{1, 2}})),
               gqs::HopfElement::basis(gqs::canonical({{1, 2}})));
  CHECK(back == expected);
}

TEST_CASE("coproduct prints tensor terms with the empty graph as ?") {
  const auto r = run_cli({"coproduct", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 ? Bw\n1 Bw ?\n");
  const auto as_json = run_cli({"coproduct", "C`", "--json"});
  const auto parsed = nlohmann::json::parse(as_json.out);
  // Three ordered splittings of the pair multiset, each appearing once.
  REQUIRE(parsed.size() == 3);
  for (const auto& term : parsed) CHECK(term["coeff"] == "1");
  CHECK(parsed[1]["left"] == nlohmann::json::parse("[[1,2]]"));
  CHECK(parsed[1]["right"] == nlohmann::json::parse("[[1,2]]"));
}

TEST_CASE("antipode of a two-component graph") {
  const auto r = run_cli({"antipode", "C`"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 A_\n2 Bo\n1 C`\n");
  const auto connected = run_cli({"antipode", "Bw"});
  CHECK(connected.out == "-1 Bw\n");
}

TEST_CASE("binom expands to unit coefficients on all graphs of that size") {
  const auto r = run_cli({"binom", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 Bw\n1 Cs\n1 Cq\n1 DoC\n1 E`?G\n");
  const auto zero = run_cli({"binom", "0"});
  CHECK(zero.out == "1 ?\n");
}

TEST_CASE("iso prints a bare boolean") {
  CHECK(run_cli({"iso", "Bw", "Bo"}).out == "false\n");
  CHECK(run_cli({"iso", "Bw", "Bw"}).out == "true\n");
  CHECK(run_cli({"iso", "Bw", "Bo", "--json"}).out == "false\n");
}

TEST_CASE("vector emits csv keyed by the input names") {
  const auto r = run_cli({"vector", "--n", "3"}, "A_\nBo\nBw\n");
  CHECK(r.code == 0);
  CHECK(r.out == "host,1 2\nA_,1\nBo,2\nBw,3\n");

  const auto as_json = run_cli({"vector", "--n", "3", "--json"}, "Bw\n");
  const auto parsed = nlohmann::json::parse(as_json.out);
  CHECK(parsed["n"] == 3);
  CHECK(parsed["patterns"] == nlohmann::json::parse("[[[1,2]]]"));
  CHECK(parsed["hosts"][0]["host"] == "Bw");
  CHECK(parsed["hosts"][0]["values"] == nlohmann::json::parse("[3]"));
}

TEST_CASE("deck emits cards at their nominal size") {
  const auto r = run_cli({"deck", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out == "A_\nA_\nA_\n");
  // Deleting one endpoint of two disjoint edges keeps a three-node card.
  const auto stranded = run_cli({"deck", "C`"});
  CHECK(stranded.out == "B_\nB_\nB_\nB_\n");
  const auto decoded = gqs::decode_graph6("B_");
  CHECK(decoded.declared_nodes == 3);
  CHECK(decoded.graph == gqs::canonical({{1, 2}}));
}

TEST_CASE("kelly prints both sides and the verdict") {
  const auto r = run_cli({"kelly", "--pattern", "A_", "--host", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 3 true\n");
  const auto as_json =
      run_cli({"kelly", "--pattern", "Bo", "--host", "DqK", "--json"});
  const auto parsed = nlohmann::json::parse(as_json.out);
  CHECK(parsed["lhs"] == 10);
  CHECK(parsed["rhs"] == 10);
  CHECK(parsed["holds"] == true);
}

TEST_CASE("matrix reproduces the golden table byte for byte") {
  const auto r = run_cli({"matrix", "--max", "23"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("matrix23.txt"));
  const auto small = run_cli({"matrix", "--max", "3"});
  CHECK(small.out == "1\n2 1\n3 3 1\n");
}

TEST_CASE("series lists truncated monomials") {
  const auto r = run_cli({"series", "A_", "--labels", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2\n1 3\n2 3\n");
  const auto as_json = run_cli({"series", "Bo", "--labels", "3", "--json"});
  CHECK(nlohmann::json::parse(as_json.out) ==
        nlohmann::json::parse(
            "[[[1,2],[1,3]],[[1,2],[2,3]],[[1,3],[2,3]]]"));
}

TEST_CASE("generate lists graphs or count sequences") {
  CHECK(run_cli({"generate", "--edges", "2"}).out == "Bo\nC`\n");
  CHECK(run_cli({"generate", "--edges", "2", "--connected"}).out == "Bo\n");
  CHECK(run_cli({"generate", "--edges", "8", "--count", "--json"}).out ==
        "[1,1,2,5,11,26,68,177,497]\n");
  CHECK(run_cli({"generate", "--nodes", "7", "--count", "--json"}).out ==
        "[1,1,2,4,11,34,156,1044]\n");
  CHECK(run_cli({"generate", "--edges", "8", "--count", "--connected",
                 "--json"})
            .out == "[1,1,1,3,5,12,30,79,227]\n");
  CHECK(run_cli({"generate", "--nodes", "4", "--count"}).out ==
        "1\n1\n2\n4\n11\n");
}

TEST_CASE("limit flags and environment variables") {
  // Raising the edge limit exposes the ninth connected level.
  const auto raised = run_cli({"generate", "--edges", "9", "--count",
                               "--connected", "--json", "--max-edges", "9"});
  CHECK(raised.code == 0);
  CHECK(raised.out == "[1,1,1,3,5,12,30,79,227,710]\n");

  // The same request at default limits is a capacity error.
  const auto capped =
      run_cli({"generate", "--edges", "9", "--count", "--json"});
  CHECK(capped.code == 1);
  CHECK(capped.out.empty());
  CHECK(capped.err.find("edge limit") != std::string::npos);

  // Environment variable applies when the flag is absent; the flag wins
  // when both are present.
  setenv("GQS_MAX_EDGES", "9", 1);
  const auto via_env = run_cli({"generate", "--edges", "9", "--count",
                                "--connected", "--json"});
  CHECK(via_env.code == 0);
  CHECK(via_env.out == "[1,1,1,3,5,12,30,79,227,710]\n");
  const auto flag_wins = run_cli({"generate", "--edges", "9", "--count",
                                  "--json", "--max-edges", "8"});
  CHECK(flag_wins.code == 1);
  unsetenv("GQS_MAX_EDGES");

  // Limits do not leak between invocations.
  CHECK(gqs::limits().max_nodes == 10);
  CHECK(gqs::limits().max_edges == 8);
}

TEST_CASE("exit codes distinguish usage, parse, and domain failures") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nosuch"}).code == 2);
  CHECK(run_cli({"eval", "--pattern", "Bw"}).code == 2);
  CHECK(run_cli({"eval", "--pattern", "ZZ", "--host", "Bw"}).code == 2);
  CHECK(run_cli({"canon"}, "1 2\n3\n").code == 2);
  CHECK(run_cli({"canon", "/nonexistent/path"}).code == 2);
  CHECK(run_cli({"matrix", "--max", "99"}).code == 2);
  CHECK(run_cli({"generate", "--count"}).code == 2);
  CHECK(run_cli({"generate", "--edges", "2", "--nodes", "3"}).code == 2);
  CHECK(run_cli({"--max-nodes", "50", "matrix"}).code == 2);

  CHECK(run_cli({"binom", "9"}).code == 1);
  CHECK(run_cli({"deck", "A_"}).code == 1);
  CHECK(run_cli({"kelly", "--pattern", "Bw", "--host", "Bw"}).code == 1);
  CHECK(run_cli({"canon"}, "1 2\n1 2\n").code == 1);
  CHECK(run_cli({"canon"}, "3 3\n").code == 1);

  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("canon") != std::string::npos);
}

TEST_CASE("output is identical across repeated runs") {
  // The vector command reads hosts from standard input; strings on stdin
  // are ignored by the others.
  const std::string hosts = "D}g\nDqK\n";
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"matrix", "--max", "10"},
           {"product", "C`", "A_"},
           {"antipode", "E`?G"},
           {"generate", "--edges", "5"},
           {"vector", "--n", "4"},
       }) {
    const auto first = run_cli(args, hosts);
    for (int i = 0; i < 3; ++i) {
      const auto again = run_cli(args, hosts);
      CHECK(again.code == first.code);
      CHECK(again.out == first.out);
    }
  }
}

TEST_CASE("graph6 round trip through encode and decode") {
  // Exhaustive over every graph on at most five nodes, then spot checks
  // with declared isolated vertices.
  for (const auto& g : gqs::generate_by_nodes(5)) {
    const std::string s = gqs::encode_graph6(g);
    const auto back = gqs::decode_graph6(s);
    CHECK(back.graph == g);
    CHECK(back.declared_nodes == g.node_count());
    CHECK(gqs::encode_graph6(back.graph, back.declared_nodes) == s);
  }
  for (const std::string& s : {"A_", "Bw", "B?", "D}g", "G?????"}) {
    const auto d = gqs::decode_graph6(s);
    CHECK(gqs::encode_graph6(d.graph, d.declared_nodes) == s);
  }
}
