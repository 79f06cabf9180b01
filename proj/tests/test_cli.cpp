#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "semsum/cli.hpp"
#include "semsum/error.hpp"
#include "test_support.hpp"

using json = nlohmann::json;
using testing::TempDir;
using testing::read_text;
using testing::write_text;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "semsum");
  std::ostringstream out, err;
  const int code = semsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kMini = (testing::kFixtures / "mini_cluster.json").string();
const std::string kEmb = (testing::kFixtures / "toy_embeddings.txt").string();
const std::string kCtx = (testing::kFixtures / "mini_cluster.contextual.jsonl").string();

}  // namespace

TEST_CASE("usage errors exit with 2 and show help") {
  const auto none = run({});
  CHECK(none.code == 2);
  const auto missing = run({"summarize"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--input") != std::string::npos);
  const auto bogus = run({"summarize", "--input", kMini, "--feature", "bogus"});
  CHECK(bogus.code == 2);
  CHECK(bogus.err.find("Usage") != std::string::npos);
  CHECK(run({"summarize", "--input", kMini, "--budget-bytes", "100", "--budget-sentences", "2"})
            .code == 2);
  CHECK(run({"summarize", "--input", kMini, "--lambda", "-1"}).code == 2);
  CHECK(run({"summarize", "--input", kMini, "--fusion", "sideways"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("runtime failures exit with 1") {
  TempDir dir;
  const auto absent = run({"summarize", "--input", (dir / "nope.json").string()});
  CHECK(absent.code == 1);
  const auto wmd = run({"summarize", "--input", kMini, "--feature", "wmd"});
  CHECK(wmd.code == 1);
  CHECK(wmd.err.find("--embeddings") != std::string::npos);
  write_text(dir / "doc.txt", "One line.\n");
  CHECK(run({"summarize", "--input", (dir / "doc.txt").string(), "--use-compressed"}).code == 1);
  CHECK(run({"summarize", "--input", kMini, "--fusion", "graph", "--feature", "tfidf"}).code == 1);
}

TEST_CASE("summarize to stdout") {
  const auto r = run({"summarize", "--input", kMini, "--feature", "tfidf", "--budget-sentences",
                      "2"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("summarize writes summary, report and graphs") {
  TempDir dir;
  const auto out = (dir / "sum.txt").string();
  const auto r = run({"summarize", "--input", kMini, "--embeddings", kEmb, "--contextual", kCtx,
                      "--fusion", "late", "--export-graph", (dir / "g.tsv").string(),
                      "--output", out});
  REQUIRE(r.code == 0);
  const auto report = json::parse(read_text(out + ".json"));
  CHECK(report["fusion"]["scheme"] == "late");
  CHECK(report["config"]["budget"] == nullptr);
  // Two documents: the default budget is 665 bytes.
  CHECK(report["result"]["budget"]["mode"] == "bytes");
  CHECK(report["result"]["budget"]["limit"] == 665.0);
  CHECK(report["result"]["budget"]["used"].get<double>() <= 665.0);
  bool any_graph = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
    if (entry.path().extension() == ".tsv") any_graph = true;
  }
  CHECK(any_graph);
}

TEST_CASE("custom report path and single-document default budget") {
  TempDir dir;
  write_text(dir / "doc.txt", "Alpha storm hits.\nBeta flood rises.\nGamma wind blows.\n"
                              "Delta rain falls.\nEpsilon calm returns.\n");
  const auto r = run({"summarize", "--input", (dir / "doc.txt").string(), "--output",
                      (dir / "s.txt").string(), "--report", (dir / "r.json").string()});
  REQUIRE(r.code == 0);
  const auto report = json::parse(read_text(dir / "r.json"));
  CHECK(report["result"]["budget"]["mode"] == "sentences");
  CHECK(report["result"]["selection_order"].size() == 3);
  CHECK_FALSE(std::filesystem::exists(dir / "s.txt.json"));
}

TEST_CASE("config files fill in flags the command line leaves out") {
  TempDir dir;
  write_text(dir / "cfg.ini", "# settings\nfeature = tfidf\nlambda = 2.5\nbudget-sentences = 4\n"
                              "no-lazy = true\nsingleton-check = false\n");
  const auto out = (dir / "s.txt").string();
  REQUIRE(run({"summarize", "--input", kMini, "--config", (dir / "cfg.ini").string(),
               "--lambda", "1", "--output", out})
              .code == 0);
  const auto config = json::parse(read_text(out + ".json"))["config"];
  CHECK(config["lambda"] == 1.0);
  CHECK(config["lazy"] == false);
  CHECK(config["budget"]["sentences"] == 4.0);

  write_text(dir / "bad.ini", "lambda 3\n");
  CHECK(run({"summarize", "--input", kMini, "--config", (dir / "bad.ini").string()}).code == 2);
}

TEST_CASE("merge_config") {
  using semsum::cli::merge_config;
  const std::vector<std::string> args{"semsum", "summarize", "--budget-bytes", "100"};
  const auto merged =
      merge_config(args, "budget-sentences = 3\nseed = 9\nraw-cosine = false\njobs=2\n");
  CHECK(merged == std::vector<std::string>{"semsum", "summarize", "--budget-bytes", "100",
                                           "--seed", "9", "--jobs", "2"});
  CHECK_THROWS_AS(merge_config(args, "raw-cosine = maybe\n"), semsum::Error);
  CHECK_THROWS_AS(merge_config(args, "= 4\n"), semsum::Error);
}

TEST_CASE("evaluate") {
  TempDir dir;
  write_text(dir / "cand.txt", "the cat sat\n");
  write_text(dir / "ref.txt", "the cat\n");
  const auto r = run({"evaluate", (dir / "cand.txt").string(), (dir / "ref.txt").string(),
                      "--metrics", "r1,rl", "--no-stem"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["scores"].size() == 2);
  CHECK(j["scores"][0]["metric"] == "R1");
  CHECK(j["scores"][0]["p"] == 0.6667);
  CHECK(j["scores"][0]["f"] == 0.8);
  CHECK(j["stemming"] == false);

  CHECK(run({"evaluate", (dir / "cand.txt").string()}).code != 0);
  CHECK(run({"evaluate", (dir / "cand.txt").string(), (dir / "none.txt").string()}).code == 2);
  CHECK(run({"evaluate", (dir / "cand.txt").string(), (dir / "ref.txt").string(), "--metrics",
             "r9"})
            .code != 0);
}

TEST_CASE("pipeline over a dataset directory") {
  TempDir dir;
  const auto r = run({"pipeline", "--input", (testing::kFixtures / "dataset").string(),
                      "--output", dir.path().string(), "--embeddings", kEmb, "--feature",
                      "tfidf", "--byte-limit", "665"});
  REQUIRE(r.code == 0);
  const auto corpus = json::parse(read_text(dir / "corpus_report.json"));
  CHECK(corpus["failed_units"] == 0);
  CHECK(corpus["scored_units"] == 2);  // the lines unit has no references
  CHECK(corpus["units"].size() == 3);
  CHECK(corpus["units"][0]["unit_id"] == "mini");
  CHECK(corpus["means"].size() == 3);
  CHECK(std::filesystem::exists(dir / "tiny.summary.txt"));
  CHECK(std::filesystem::exists(dir / "plain.report.json"));
}

TEST_CASE("pipeline keeps going past a corrupt unit") {
  TempDir dir;
  const auto r = run({"pipeline", "--input", (testing::kFixtures / "dataset_corrupt").string(),
                      "--output", dir.path().string(), "--feature", "tfidf"});
  CHECK(r.code == 1);
  CHECK(r.err.find("broken") != std::string::npos);
  const auto corpus = json::parse(read_text(dir / "corpus_report.json"));
  CHECK(corpus["failed_units"] == 1);
  CHECK(std::filesystem::exists(dir / "tiny.summary.txt"));
}

TEST_CASE("pipeline needs an existing input directory") {
  TempDir dir;
  CHECK(run({"pipeline", "--input", (dir / "missing").string(), "--output",
             (dir / "out").string()})
            .code != 0);
}
