#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nutgraph/cli.hpp"
#include "nutgraph/graph_io.hpp"

using namespace nutgraph;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  json doc;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.err = err.str();
  if (!out.str().empty()) r.doc = json::parse(out.str());
  return r;
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("nutgraph_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& body = "") const {
    if (!body.empty()) std::ofstream(dir / name) << body;
    return (dir / name).string();
  }
};

const char* kOrder9 = "lambda1 cycle 3\nlambda4 1||\nlambda5 1||2\n";

}  // namespace

TEST_CASE("build writes the edge list and reports the tuple") {
  Scratch s;
  const auto spec = s.file("o9.spec", kOrder9);
  const auto out = s.file("o9.txt");
  const Run r = run({"build", spec, "--out", out});
  CHECK(r.code == kExitOk);
  CHECK(r.doc["schema"] == "nutgraph-cli/1");
  CHECK(r.doc["command"] == "build");
  CHECK(r.doc["exit_code"] == 0);
  CHECK(r.doc["order"] == 9);
  CHECK(r.doc["edges"] == 12);
  CHECK(r.doc["tuple"] == json::array({3, 2, 2, 6, 1, 1}));
  CHECK(read_edge_list_file(out).edge_count() == 12);

  const auto g6 = s.file("o9.g6");
  CHECK(run({"build", spec, "--out", g6, "--format", "graph6"}).code == kExitOk);
  std::ifstream in(g6);
  std::string line;
  std::getline(in, line);
  CHECK(line.front() == 'H');
}

TEST_CASE("verify round trip") {
  Scratch s;
  const auto spec = s.file("o9.spec", kOrder9);
  const auto out = s.file("o9.txt");
  REQUIRE(run({"build", spec, "--out", out}).code == kExitOk);

  const Run fast = run({"verify", out, "--partition", "3"});
  CHECK(fast.code == kExitOk);
  CHECK(fast.doc["certificate"]["is_nut"] == true);
  CHECK(fast.doc["certificate"]["method"] == "modular-plus-kernel");
  CHECK(fast.doc["symmetry"]["certified_2_3"] == true);
  CHECK(fast.doc["symmetry"]["deg_V"] == 4);

  const Run exact = run({"verify", out});
  CHECK(exact.code == kExitOk);
  json a = fast.doc["certificate"], b = exact.doc["certificate"];
  a.erase("method");
  b.erase("method");
  CHECK(a == b);
  CHECK_FALSE(exact.doc.contains("symmetry"));
}

TEST_CASE("verify reports negatives and malformed input") {
  Scratch s;
  const auto k3 = s.file("k3.txt", "order 3\n0 1\n1 2\n0 2\n");
  const Run r = run({"verify", k3});
  CHECK(r.code == kExitNegative);
  CHECK(r.doc["certificate"]["is_nut"] == false);
  CHECK(r.doc["certificate"]["nullity"] == 0);

  const auto truncated = s.file("bad.txt", "order 3\n0 1\n1\n");
  CHECK(run({"verify", truncated}).code == kExitUsage);
  CHECK(run({"verify", s.file("missing.txt")}).code == kExitUsage);

  const auto spec = s.file("bad.spec", "lambda1 cycle 3\nlambda4 1|4^(2)|\nlambda5 1||2\n");
  const Run bad = run({"build", spec});
  CHECK(bad.code == kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"cover"}).code == kExitUsage);
  CHECK(run({"cover", "17"}).code == kExitUsage);
  CHECK(run({"cover", "12"}).code == kExitUsage);
  CHECK(run({"table", "4"}).code == kExitUsage);
  CHECK(run({"gallery", "fig9"}).code == kExitUsage);
  CHECK(run({"report", "--up-to", "5"}).code == kExitUsage);
}

TEST_CASE("table verification") {
  const Run t1 = run({"table", "1", "--verify"});
  CHECK(t1.code == kExitOk);
  CHECK(t1.doc["rows"].size() == 20);
  CHECK(t1.doc["all_pass"] == true);

  const Run t2 = run({"table", "2", "--verify"});
  CHECK(t2.code == kExitOk);
  CHECK(t2.doc["rows"].size() == 8);

  const Run t1n = run({"table", "1", "--n", "7", "--verify"});
  CHECK(t1n.code == kExitOk);
  CHECK(t1n.doc["rows"][0]["order"] == 21);

  CHECK(run({"table", "1", "--n", "4"}).code == kExitUsage);
  CHECK(run({"table", "2", "--n", "7"}).code == kExitUsage);
  CHECK(run({"table", "3", "--n", "5"}).code == kExitUsage);

  const Run t3 = run({"table", "3"});
  CHECK(t3.code == kExitOk);
  CHECK(t3.doc["rows"].size() == 17);
}

TEST_CASE("table 3 spec builds at order 361") {
  Scratch s;
  const Run t3 = run({"table", "3"});
  REQUIRE(t3.code == kExitOk);
  const std::string text = t3.doc["rows"][0]["spec"];
  const auto spec = s.file("r.spec", text);
  const Run b = run({"build", spec, "--out", s.file("r.txt")});
  CHECK(b.code == kExitOk);
  CHECK(b.doc["order"] == 361);
}

TEST_CASE("cover") {
  const Run c9 = run({"cover", "9"});
  CHECK(c9.code == kExitOk);
  CHECK(c9.doc["covered"] == true);
  CHECK(c9.doc["corollary"] == "3n");
  CHECK(c9.doc["witness"]["t_block"] == "2||");

  const Run c2839 = run({"cover", "2839"});
  CHECK(c2839.code == kExitNegative);
  CHECK(c2839.doc["covered"] == false);
}

TEST_CASE("split") {
  const Run r = run({"split", "7", "--a", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.doc["witness"]["m"] == 3);
  CHECK(run({"split", "3", "--a", "4", "--kappa", "4,16"}).code == kExitNegative);
}

TEST_CASE("report") {
  Scratch s;
  const auto csv = s.file("r.csv");
  const Run r = run({"report", "--up-to", "2500", "--checkpoints", "1000,2500", "--out", csv});
  CHECK(r.code == kExitOk);
  std::ifstream in(csv);
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("2500,883,36,17,0") != std::string::npos);

  const auto js = s.file("r.json");
  CHECK(run({"report", "--up-to", "1000", "--checkpoints", "1000", "--out", js, "--format", "json", "--jobs", "2"}).code ==
        kExitOk);
  std::ifstream jin(js);
  const json doc = json::parse(jin);
  CHECK(doc["schema"] == "nutgraph-report/1");
  CHECK(doc["rows"][0]["X"] == 332);

  const auto cache = s.file("cache.txt");
  CHECK(run({"report", "--up-to", "1000", "--checkpoints", "1000", "--cache", cache}).code == kExitOk);
  CHECK(fs::file_size(cache) > 0);
  const Run warm = run({"report", "--up-to", "1000", "--checkpoints", "1000", "--cache", cache});
  CHECK(warm.doc["rows"][0]["X1"] == 9);
}

TEST_CASE("gallery") {
  for (const char* id : {"fig3", "fig4_left", "fig4_right"}) {
    const Run r = run({"gallery", id, "--verify"});
    CAPTURE(id);
    CHECK(r.code == kExitOk);
    CHECK(r.doc["certificate"]["is_nut"] == true);
    CHECK(r.doc["certificate"]["order"] == 35);
  }
}
