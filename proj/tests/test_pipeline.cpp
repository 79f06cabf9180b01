#include <doctest.h>

#include <nlohmann/json.hpp>

#include "semsum/error.hpp"
#include "semsum/fusionlab.hpp"
#include "semsum/report.hpp"
#include "test_support.hpp"

using namespace semsum;
using testing::TempDir;
using testing::unit_of;

namespace {

struct Fixture {
  TaskUnit unit = load_task_unit(testing::kFixtures / "mini_cluster.json",
                                 InputFormat::kClusterJson);
  EmbeddingTable table = load_embedding_table(testing::kFixtures / "toy_embeddings.txt");
  ContextualEmbeddings contextual = load_contextual_embeddings(
      testing::kFixtures / "mini_cluster.contextual.jsonl", unit);
  Resources resources{&table, &contextual};
};

RunOptions three_sentences() {
  RunOptions o;
  o.selection.budget = {BudgetMode::kSentences, 3};
  return o;
}

}  // namespace

TEST_CASE("feature names") {
  for (Feature f : {Feature::kTfidf, Feature::kEmbMean, Feature::kBertMean, Feature::kTss,
                    Feature::kWmd}) {
    CHECK(feature_from_string(to_string(f)) == f);
  }
  CHECK_THROWS_AS(feature_from_string("glove"), Error);
  CHECK(default_fusion_features().size() == 4);
}

TEST_CASE("every feature runs on the mini cluster") {
  Fixture fx;
  for (Feature f : {Feature::kTfidf, Feature::kEmbMean, Feature::kBertMean, Feature::kTss,
                    Feature::kWmd}) {
    CAPTURE(to_string(f));
    const auto run = run_feature(fx.unit, f, fx.resources, three_sentences());
    CHECK(run.selection.selected.size() == 3);
    CHECK(run.ranking.size() == fx.unit.size());
    CHECK(run.graph.n == fx.unit.size());
    CHECK(run.graph.meta == to_string(f));
  }
}

TEST_CASE("missing resources name the flag to supply") {
  Fixture fx;
  const Resources none{};
  CHECK_THROWS_WITH_AS(run_feature(fx.unit, Feature::kWmd, none, three_sentences()),
                       doctest::Contains("--embeddings"), Error);
  CHECK_THROWS_WITH_AS(run_feature(fx.unit, Feature::kBertMean, none, three_sentences()),
                       doctest::Contains("--contextual"), Error);
  CHECK_THROWS_AS(run_feature(fx.unit, Feature::kTss, none, three_sentences()), Error);
  const Resources contextual_only{nullptr, &fx.contextual};
  CHECK_NOTHROW(run_feature(fx.unit, Feature::kTss, contextual_only, three_sentences()));
}

TEST_CASE("graph fusion of one feature equals that feature") {
  Fixture fx;
  const std::vector<Feature> two{Feature::kTfidf, Feature::kTfidf};
  const auto fused = run_graph_fusion(fx.unit, two, {}, fx.resources, three_sentences());
  const auto single = run_feature(fx.unit, Feature::kTfidf, fx.resources, three_sentences());
  CHECK(fused.selection.selected == single.selection.selected);
  CHECK(fused.fused->w == single.graph.w);
}

TEST_CASE("fusion schemes are deterministic across thread counts") {
  Fixture fx;
  const auto features = default_fusion_features();
  auto opts = three_sentences();
  const auto g1 = run_graph_fusion(fx.unit, features, {}, fx.resources, opts);
  const auto l1 = run_late_fusion(fx.unit, features, fx.resources, opts);
  opts.threads = 6;
  const auto g6 = run_graph_fusion(fx.unit, features, {}, fx.resources, opts);
  const auto l6 = run_late_fusion(fx.unit, features, fx.resources, opts);
  CHECK(g1.selection.selected == g6.selection.selected);
  CHECK(g1.selection.trace == g6.selection.trace);
  CHECK(g1.fused->w == g6.fused->w);
  CHECK(l1.selection.selected == l6.selection.selected);
  CHECK(l1.points == l6.points);
  CHECK(l1.points.size() == fx.unit.size());

  const std::vector<Feature> one{Feature::kTfidf};
  CHECK_THROWS_AS(run_graph_fusion(fx.unit, one, {}, fx.resources, opts), Error);
  CHECK_THROWS_AS(run_late_fusion(fx.unit, one, fx.resources, opts), Error);
  const std::vector<double> wrong{1.0};
  CHECK_THROWS_AS(run_graph_fusion(fx.unit, features, wrong, fx.resources, opts), Error);
}

TEST_CASE("sentences without known words are reported and not picked first") {
  EmbeddingTable table(2);
  table.set("storm", {1, 0});
  table.set("flood", {0, 1});
  const auto unit = unit_of({"Zzyx qwv.", "Storm and flood.", "Storm again.", "Flood now."});
  const Resources res{&table, nullptr};
  const auto run = run_feature(unit, Feature::kWmd, res, three_sentences());
  CHECK(run.degenerate == std::vector<std::size_t>{0});
  CHECK(run.warnings.size() == 1);
  CHECK(run.selection.selected.front() != 0);
  for (std::size_t j = 1; j < unit.size(); ++j) CHECK(run.distances(0, j) == 1.0);
}

TEST_CASE("single-sentence units") {
  const auto unit = unit_of({"Only one sentence here."});
  const auto run = run_feature(unit, Feature::kTfidf, {}, three_sentences());
  CHECK(run.selection.selected == std::vector<std::size_t>{0});
  CHECK(run.graph.n == 1);
}

TEST_CASE("report json and summary text") {
  Fixture fx;
  const auto run = run_feature(fx.unit, Feature::kTfidf, fx.resources, three_sentences());
  const auto j = to_json(fx.unit, run.selection);
  CHECK(j["unit_id"] == "mini");
  CHECK(j["sentences"] == fx.unit.size());
  CHECK(j["selection_order"].size() == 3);
  CHECK(j["budget"]["mode"] == "sentences");
  const auto order = document_order(run.selection);
  std::string expected;
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(j["summary"][i]["sent_id"] == order[i]);
    expected += fx.unit.sentences[order[i]].raw_text + "\n";
  }
  CHECK(summary_text(fx.unit, run.selection) == expected);
}

TEST_CASE("atomic writes replace the file") {
  TempDir dir;
  write_file_atomic(dir / "out.txt", "first");
  write_file_atomic(dir / "out.txt", "second");
  CHECK(testing::read_text(dir / "out.txt") == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  CHECK_THROWS_AS(write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), Error);
}
