#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "loopchain/cli.h"
#include "loopchain/graph_oracle.h"
#include "loopchain/json_io.h"
#include "loopchain/rank.h"

using namespace loopchain;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "loopchain_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("JSON round trips") {
  const TorsionProfile p(4, {2, 0, 7});
  CHECK(json(p).get<TorsionProfile>() == p);
  const DiscreteChain c{{{2, 2}, {5, 3}, {4, 4}}};
  CHECK(json(c).get<DiscreteChain>() == c);
  const MartensSpec s{10, {3, 5}};
  CHECK(json(s).get<MartensSpec>() == s);
  const auto D = make_representing_divisor(
      p, 6, {PointPosition::generic(), PointPosition::integer_class(1),
             PointPosition::integer_class(-4), PointPosition::integer_class(6)});
  CHECK(json(D).get<RepresentingDivisor>() == D);
  CHECK(json(D)["tail"] == 2);
  CHECK(json(D)["positions"][0] == "generic");
  const DisplacementTableau t = hyperelliptic_tableau(4);
  CHECK(json(t).get<DisplacementTableau>() == t);
  CHECK(json(t)["values"] == json::parse("[[1,2,3],[2,3,4]]"));
  const VertexDivisor v({1, -2, 0, 3});
  CHECK(json(v).get<VertexDivisor>() == v);
  VertexDivisor on_chain = VertexDivisor::zero(c.vertex_count());
  on_chain[c.vertex_id(2, 4)] = 2;
  on_chain[c.vertex_id(3, 1)] = -1;
  CHECK(chain_divisor_from_json(c, chain_divisor_to_json(c, on_chain)) == on_chain);
  const FiniteGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(graph_from_json(graph_to_json(g)).edges() == g.edges());
}

TEST_CASE("JSON rejects bad input") {
  CHECK_THROWS(json::parse(R"({"genus": 3, "torsions": [2]})").get<TorsionProfile>());
  CHECK_THROWS(json::parse(R"({"genus": 3.5, "torsions": [2, 2]})").get<TorsionProfile>());
  CHECK_THROWS(json::parse(R"({"cycles": [{"size": 3, "attach": 1}]})").get<DiscreteChain>());
  CHECK_THROWS(json::parse(R"({"degree": 2, "positions": ["generic"], "tail": 0})")
                   .get<RepresentingDivisor>());
  CHECK_THROWS(json::parse(R"({"degree": 2, "positions": ["free"]})").get<RepresentingDivisor>());
  CHECK_THROWS(json::parse(R"({"cols": 2, "rows": 1, "values": [[1]]})").get<DisplacementTableau>());
  const DiscreteChain c{{{2, 2}, {3, 2}}};
  CHECK_THROWS(chain_divisor_from_json(c, json::parse(R"({"entries": [{"cycle": 3, "vertex": 1, "mult": 1}]})")));
  CHECK_THROWS(chain_divisor_from_json(c, json::parse(R"({"entries": [{"cycle": 2, "vertex": 4, "mult": 1}]})")));
  CHECK_THROWS(graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0, 1, 1]]})")));
}

TEST_CASE("gonseq as CSV") {
  const Run r = run({"gonseq", "--genus", "10", "--type", "2", "--positions", "3,5",
                     "--rmax", "10", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "r,g_r\n1,4\n2,6\n3,8\n4,10\n5,12\n6,14\n7,16\n8,17\n9,18\n10,20\n");
}

TEST_CASE("text and JSON output agree") {
  const Run text = run({"gonseq", "--genus", "8", "--positions", "3,5", "--rmax", "9"});
  const Run js = run({"gonseq", "--genus", "8", "--positions", "3,5", "--rmax", "9", "--json"});
  REQUIRE(text.code == 0);
  REQUIRE(js.code == 0);
  const json j = json::parse(js.out);
  std::istringstream lines(text.out);
  std::string header;
  std::getline(lines, header);
  for (const json& entry : j["sequence"]) {
    int r, gr;
    lines >> r >> gr;
    CHECK(r == entry["r"]);
    CHECK(gr == entry["g_r"]);
  }
  CHECK(text.out.find("gonality " + std::to_string(j["gonality"].get<int>())) !=
        std::string::npos);
  // Byte-for-byte deterministic.
  CHECK(run({"gonseq", "--genus", "8", "--positions", "3,5", "--rmax", "9", "--json"}).out ==
        js.out);
}

TEST_CASE("rank from files") {
  const std::string profile = write_temp("p2.json", R"({"genus": 2, "torsions": [2]})");
  const std::string divisor = write_temp(
      "d2.json", R"({"degree": 2, "positions": [{"class": 0}, {"class": 1}], "tail": 0})");
  const Run r = run({"rank", "--profile", profile, "--divisor", divisor, "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rank"] == 1);
  CHECK(j["witness"].get<DisplacementTableau>().row_major() == std::vector<int>{1, 2});
  const Run text = run({"rank", "--profile", profile, "--divisor", divisor});
  CHECK(text.out.rfind("rank 1\n", 0) == 0);

  const std::string chain = write_temp("c2.json", R"({"cycles": [{"size": 2, "attach": 2}, {"size": 3, "attach": 2}]})");
  const std::string canon = write_temp(
      "k2.json", R"({"entries": [{"cycle": 1, "vertex": 2, "mult": 1}, {"cycle": 2, "vertex": 1, "mult": 1}]})");
  const Run rc = run({"rank", "--chain", chain, "--divisor", canon, "--json"});
  CHECK(rc.code == 0);
  CHECK(json::parse(rc.out)["rank"] == 1);

  const Run oracle = run({"oracle", "rank", "--chain", chain, "--divisor", canon});
  CHECK(oracle.code == 0);
  CHECK(oracle.out == "rank 1\n");
}

TEST_CASE("oracle subcommands") {
  const std::string graph = write_temp("tri.json", R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
  const std::string d = write_temp("tri_d.json", R"({"coefficients": [2, 0, -1]})");
  const Run reduce = run({"oracle", "reduce", "--graph", graph, "--divisor", d, "--base", "2", "--json"});
  REQUIRE(reduce.code == 0);
  const json j = json::parse(reduce.out);
  const FiniteGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(j["base"] == 2);
  CHECK(is_q_reduced(tri, j.get<VertexDivisor>(), 2));
  CHECK(linear_equivalent(tri, j.get<VertexDivisor>(), VertexDivisor({2, 0, -1})));

  const Run wrd = run({"oracle", "wrd", "--graph", graph, "-r", "1", "-d", "2", "--json"});
  CHECK(wrd.code == 0);
  CHECK(json::parse(wrd.out)["w"] == wrd_discrete(tri, 1, 2));
  CHECK(run({"oracle", "wrd", "--graph", graph}).code == 2);
  const std::string short_d = write_temp("short.json", R"({"coefficients": [1]})");
  CHECK(run({"oracle", "rank", "--graph", graph, "--divisor", short_d}).code == 2);
}

TEST_CASE("profile, realize and tableaux") {
  const Run p = run({"profile", "--genus", "5", "--type", "1", "--positions", "3", "--discrete"});
  CHECK(p.code == 0);
  CHECK(json::parse(p.out).get<TorsionProfile>().torsions() == std::vector<int>{2, 6, 2, 2});
  const Run real = run({"realize", "--genus", "5", "--positions", "3"});
  CHECK(real.code == 0);
  const auto chain = json::parse(real.out).get<DiscreteChain>();
  CHECK(chain.cycles[2].size == 6);
  const std::string chain_file = write_temp("real.json", real.out);
  const Run back = run({"profile", "--chain", chain_file});
  CHECK(json::parse(back.out) == json::parse(p.out));

  const Run count = run({"tableaux", "--genus", "5", "--positions", "3", "--cols", "3", "--rows", "2"});
  CHECK(count.code == 0);
  const auto profile = martens_special_profile({5, {3}}, MartensKind::kMetricGeneral);
  CHECK(count.out == std::to_string(count_tableaux(profile, {3, 2})) + "\n");
  const Run list = run({"tableaux", "--genus", "5", "--positions", "3", "--cols", "3",
                        "--rows", "2", "--list", "--json"});
  const json lj = json::parse(list.out);
  CHECK(lj["tableaux"].get<std::vector<DisplacementTableau>>() == enumerate_tableaux(profile, {3, 2}));
}

TEST_CASE("cliff, divcomplete and verify exit codes") {
  const Run c = run({"cliff", "--genus", "10", "--positions", "3,5", "--json"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["clifford"] == 2);
  const Run dc = run({"divcomplete", "--genus", "5", "--positions", "3"});
  CHECK(dc.code == 0);
  CHECK(dc.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "sweep", "--max-genus", "10", "--max-type", "2"}).code == 0);
  const Run v = run({"verify", "thm-b", "--genus", "10", "--type", "2", "--positions", "3,5", "--json"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["claim"] == "thm-b");
  CHECK(run({"--threads", "2", "verify", "divcomplete", "--genus", "7", "--positions", "4"}).code == 0);
}

TEST_CASE("input errors exit with 2 and one line") {
  auto expect_input_error = [](std::vector<std::string> args) {
    const Run r = run(std::move(args));
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  };
  expect_input_error({"gonseq", "--genus", "4", "--positions", "3", "--rmax", "2"});
  expect_input_error({"gonseq", "--genus", "9", "--type", "1", "--positions", "3,5", "--rmax", "2"});
  expect_input_error({"gonseq", "--rmax", "2"});
  const std::string p = write_temp("p5.json", R"({"genus": 5, "torsions": [2, 0, 2, 2]})");
  expect_input_error({"gonseq", "--profile", p, "--genus", "5", "--positions", "3", "--rmax", "2"});
  expect_input_error({"gonseq", "--genus", "5", "--positions", "3", "--rmax", "2", "--bogus"});
  const std::string broken = write_temp("broken.json", "{\"genus\": 5,");
  expect_input_error({"cliff", "--profile", broken});
  expect_input_error({"cliff", "--profile", "/nonexistent/p.json"});
  expect_input_error({"realize", "--profile", p});  // m = 0 has no discrete chain
  expect_input_error({"verify", "nonsense", "--genus", "5", "--positions", "3"});
  expect_input_error({"verify", "divcomplete", "--genus", "12", "--positions", "3"});
  expect_input_error({});
}

TEST_CASE("help exits 0") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("gonseq") != std::string::npos);
  CHECK(run({"verify", "--help"}).code == 0);
}
