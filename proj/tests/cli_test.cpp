#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace probeblock;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("probeblock_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, C4TwoProbeBlockJson) {
  const auto c4 = write("c4.el", to_edge_list(cycle_graph(4)));
  const auto r = run({"check", "--class", "2probe-block", "--json", c4});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["class"], "2probe-block");
  EXPECT_EQ(j["n1"], json({0, 2}));
  EXPECT_EQ(j["n2"], json({1, 3}));
  EXPECT_EQ(j["added_edges"], json({{0, 2}, {1, 3}}));
  EXPECT_FALSE(j.contains("refutation"));
  for (const char* stage : {"decomposition", "structure", "find_nonprobes", "verify", "total"}) {
    EXPECT_TRUE(j["timing"].contains(stage)) << stage;
  }
}

TEST_F(CliTest, DiamondIsNotABlockGraph) {
  const auto d = write("diamond.el", "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  const auto r = run({"--json", "check", "--class", "block", d});
  ASSERT_EQ(r.code, 1) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "no");
  EXPECT_EQ(j["refutation"]["stage"], "block-clique");
  EXPECT_EQ(j["refutation"]["detail"], json({2, 3}));
  EXPECT_FALSE(j.contains("n1"));
}

TEST_F(CliTest, PlantedInstanceWithPartition) {
  const auto partition = (dir_ / "p.json").string();
  const auto gen = run({"generate", "--kind", "plant2", "--n", "300", "--seed", "9", "--partition-out", partition});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const auto g = write("g.el", gen.out);
  EXPECT_EQ(run({"check", "--class", "2probe-block", "--partition", partition, g}).code, 0);
  EXPECT_EQ(run({"check", "--class", "2probe-block", g}).code, 0);
}

TEST_F(CliTest, ReportRoundTripsAsPartition) {
  const auto g = write("g.el", run({"generate", "--kind", "plant2", "--n", "80", "--seed", "4"}).out);
  const auto r = run({"check", "--class", "2probe-block", "--json", g});
  ASSERT_EQ(r.code, 0);
  const auto report = write("report.json", r.out);
  EXPECT_EQ(run({"check", "--class", "2probe-block", "--partition", report, g}).code, 0);
}

TEST_F(CliTest, HumanSummaryHasSameContent) {
  const auto c4 = write("c4.g6", "Cl\n");
  const auto r = run({"check", "--class", "2probe-block", c4});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: yes"), std::string::npos);
  EXPECT_NE(r.out.find("n1: 0 2"), std::string::npos);
  EXPECT_NE(r.out.find("n2: 1 3"), std::string::npos);
  EXPECT_NE(r.out.find("added_edges: 0-2 1-3"), std::string::npos);
  const auto no = run({"check", "--class", "2probe-block", write("c5.el", to_edge_list(cycle_graph(5)))});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("refutation: kxyz"), std::string::npos);
}

TEST_F(CliTest, OtherClasses) {
  const auto c4 = write("c4.el", to_edge_list(cycle_graph(4)));
  const auto star = write("star.el", to_edge_list(star_graph(3)));
  EXPECT_EQ(run({"check", "--class", "complete-split", star}).code, 0);
  EXPECT_EQ(run({"check", "--class", "complete-split", c4}).code, 1);
  EXPECT_EQ(run({"check", "--class", "2probe-complete", c4}).code, 0);
  EXPECT_EQ(run({"check", "--class", "probe-block", c4}).code, 1);
  const auto p4 = write("p4.el", to_edge_list(path_graph(4)));
  const auto r = run({"check", "--class", "2probe-complete", "--json", p4});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["refutation"]["stage"], "kxyz");
}

TEST_F(CliTest, FindNonprobesStageIsReported) {
  // Any random graph rejected at the case analysis will do.
  std::string found;
  for (std::uint64_t seed = 0; seed < 5000 && found.empty(); ++seed) {
    const Graph g = random_graph(9, 0.3, seed);
    const auto o = recognize_2probe_block(g);
    if (!o.accepted() && std::holds_alternative<ImpossibleBranch>(*o.refutation)) found = to_edge_list(g);
  }
  ASSERT_FALSE(found.empty());
  const auto r = run({"check", "--class", "2probe-block", "--json", write("g.el", found)});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["refutation"]["stage"], "find-nonprobes");
  EXPECT_TRUE(j["refutation"]["detail"].contains("branch"));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  const auto c4 = write("c4.el", to_edge_list(cycle_graph(4)));
  EXPECT_EQ(run({"check", "--class", "chordal", c4}).code, 2);
  EXPECT_EQ(run({"check", "--bogus", c4}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--class", "block", (dir_ / "missing.el").string()}).code, 2);
  EXPECT_EQ(run({"check", "--class", "block", write("bad.el", "3 1\n0 7\n")}).code, 2);
  EXPECT_EQ(run({"check", "--class", "block", "--partition", write("p.json", "{\"N1\":[0]}"), c4}).code, 2);
  EXPECT_EQ(run({"check", "--class", "2probe-block", "--partition", write("q.json", "[1]"), c4}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, Witness) {
  const auto house = write("house.el", to_edge_list(pattern("house")));
  const auto r = run({"witness", "--family", "dh", "--json", house});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["pattern"], "house");
  EXPECT_EQ(j["mapping"], json({0, 1, 2, 3, 4}));
  EXPECT_EQ(run({"witness", "--family", "ptolemaic", write("p3.el", to_edge_list(path_graph(3)))}).code, 1);
  EXPECT_EQ(run({"witness", "--family", "nope", house}).code, 2);
}

TEST_F(CliTest, Enhance) {
  const auto c4 = write("c4.el", to_edge_list(cycle_graph(4)));
  const auto p = write("p.json", "{\"N1\": [0, 2], \"N2\": [1, 3]}");
  const auto r = run({"enhance", "--json", "--partition", p, c4});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["added_edges"], json({{0, 2}, {1, 3}}));
  EXPECT_EQ(j["is_block_graph"], true);
  const auto one = write("one.json", "{\"N1\": [0, 2], \"N2\": []}");
  const auto d = run({"enhance", "--mode", "diamond", "--json", "--partition", one, c4});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["added_edges"], json::array());
  EXPECT_EQ(run({"enhance", "--mode", "diamond", "--partition", p, c4}).code, 2);
  EXPECT_EQ(run({"enhance", "--partition", write("bad.json", "{\"N1\": [0, 1]}"), c4}).code, 2);
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const auto a = run({"generate", "--kind", "gnp", "--n", "12", "--seed", "3", "--p", "0.4"});
  const auto b = run({"generate", "--kind", "gnp", "--n", "12", "--seed", "3", "--p", "0.4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse_edge_list(a.out), random_graph(12, 0.4, 3));
  const auto g6 = run({"generate", "--kind", "block", "--n", "10", "--seed", "1", "--format", "g6"});
  EXPECT_EQ(parse_graph6(g6.out), random_block_graph(GenSpec{.n = 10, .seed = 1}));
  EXPECT_EQ(run({"generate", "--kind", "tree", "--n", "5", "--seed", "1"}).code, 2);
}

TEST_F(CliTest, OracleAgreesWithCheck) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = write("g" + std::to_string(seed) + ".el", to_edge_list(random_graph(7, 0.45, seed)));
    for (const char* klass : {"2probe-block", "probe-block", "2probe-complete", "complete-split"}) {
      EXPECT_EQ(run({"oracle", "--class", klass, g}).code, run({"check", "--class", klass, g}).code) << klass;
    }
  }
  const auto big = write("big.el", to_edge_list(path_graph(20)));
  EXPECT_EQ(run({"oracle", "--class", "2probe-block", big}).code, 2);
}

TEST_F(CliTest, BenchCsv) {
  const auto r = run({"bench", "--sizes", "100,200", "--seed", "1", "--repeat", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,m,millis,verdict");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_TRUE(line.ends_with(",yes")) << line;
  }
  EXPECT_EQ(rows, 2);
  EXPECT_EQ(run({"bench", "--sizes", "10,x", "--seed", "1"}).code, 2);
}
