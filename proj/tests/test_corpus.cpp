#include <doctest.h>

#include <algorithm>

#include "semsum/corpus.hpp"
#include "semsum/error.hpp"
#include "test_support.hpp"

using namespace semsum;
using testing::TempDir;
using testing::write_text;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize lowercases and strips edge punctuation") {
  CHECK(tokenize("The cat sat.") == Tokens{"the", "cat", "sat"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("U.S.-based, 2019") == Tokens{"u.s", "based", "2019"});
  CHECK(tokenize("  \"Hello!\"  (world) ") == Tokens{"hello", "world"});
  CHECK(tokenize("... -- !!").empty());
}

TEST_CASE("tokenize splits on unicode whitespace and keeps non-ascii letters") {
  CHECK(tokenize("caf\xC3\xA9\xC2\xA0noir") == Tokens{"caf\xC3\xA9", "noir"});
  CHECK(tokenize("a\xE2\x80\x94" "b") == Tokens{"a", "b"});  // em dash separates
  CHECK(tokenize("don't") == Tokens{"don't"});
}

TEST_CASE("filter_function_words keeps order and removes exact matches") {
  const Stoplist stop{"the"};
  CHECK(filter_function_words({"the", "cat", "sat"}, stop) == Tokens{"cat", "sat"});
  CHECK(filter_function_words({}, stop).empty());
  CHECK(filter_function_words({"the", "the"}, stop).empty());
  CHECK(filter_function_words({"The"}, stop) == Tokens{"The"});
}

TEST_CASE("split_sentences") {
  CHECK(split_sentences("").empty());
  CHECK(split_sentences("Mr. Smith ran.").size() == 1);
  CHECK(split_sentences("It rained. Then it stopped!").size() == 2);
  CHECK(split_sentences("Is it? Yes. Good").size() == 3);
  CHECK(split_sentences("Dr. A. Jones met us. We left.") ==
        Tokens{"Dr. A. Jones met us.", "We left."});
  // No capital after the terminator: no boundary.
  CHECK(split_sentences("version 2. then more").size() == 1);
  CHECK(split_sentences("3.5 percent rose. Prices fell.").size() == 2);
}

TEST_CASE("splitting never loses tokens") {
  const std::string text =
      "The U.S. economy grew 3.2 percent. Mr. Lee said so! Did it? Yes, it did. e.g. not "
      "here. Final words";
  Tokens joined;
  for (const auto& s : split_sentences(text)) {
    const auto t = tokenize(s);
    joined.insert(joined.end(), t.begin(), t.end());
  }
  CHECK(joined == tokenize(text));
}

TEST_CASE("make_sentence fills tokens, content tokens and byte length") {
  const auto s = make_sentence("The caf\xC3\xA9 is open.", default_stoplist());
  CHECK(s.tokens == Tokens{"the", "caf\xC3\xA9", "is", "open"});
  CHECK(s.content_tokens == Tokens{"caf\xC3\xA9", "open"});
  CHECK(s.byte_len == s.raw_text.size());
  CHECK(s.byte_len == 18);
}

TEST_CASE("default stoplist matches the bundled data file") {
  const auto file = load_stoplist(testing::kData / "stopwords_en.txt");
  CHECK(file == default_stoplist());
  CHECK(file.count("the") == 1);
  CHECK(file.count("storm") == 0);
}

TEST_CASE("lines format") {
  TempDir dir;
  write_text(dir / "doc.txt", "First line.\n\n  Second line.  \r\nThird.\n");
  const auto unit = load_task_unit(dir / "doc.txt", InputFormat::kLines);
  REQUIRE(unit.size() == 3);
  CHECK(unit.unit_id == "doc");
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(unit.sentences[i].sent_id == i);
    CHECK(unit.sentences[i].position_m == i + 1);
    CHECK(unit.sentences[i].doc_id == "doc");
  }
  CHECK(unit.sentences[1].raw_text == "Second line.");
  CHECK(unit.document_count() == 1);
  CHECK(unit.references.empty());
}

TEST_CASE("lines format with the splitter") {
  TempDir dir;
  write_text(dir / "p.txt", "One here. Two there.\nThree.\n");
  LoadOptions opts;
  opts.split_sentences = true;
  CHECK(load_task_unit(dir / "p.txt", InputFormat::kLines, opts).size() == 3);
}

TEST_CASE("empty inputs are rejected") {
  TempDir dir;
  write_text(dir / "empty.txt", "\n   \n");
  CHECK_THROWS_WITH_AS(load_task_unit(dir / "empty.txt", InputFormat::kLines),
                       doctest::Contains("empty task unit"), Error);
  CHECK_THROWS_WITH_AS(
      parse_cluster_json(R"({"cluster_id":"c","documents":[],"references":[]})", {}),
      doctest::Contains("empty task unit"), Error);
  CHECK_THROWS_AS(load_task_unit(dir / "missing.txt", InputFormat::kLines), Error);
}

TEST_CASE("cluster-json concatenates documents and resets positions") {
  const auto unit = parse_cluster_json(R"({
    "cluster_id": "c1",
    "documents": [
      {"doc_id": "a", "sentences": ["A one.", "A two."]},
      {"doc_id": "b", "sentences": ["B one.", "B two."]}
    ],
    "references": ["ref text"]
  })", {});
  REQUIRE(unit.size() == 4);
  CHECK(unit.unit_id == "c1");
  CHECK(unit.document_count() == 2);
  CHECK(unit.sentences[2].doc_id == "b");
  CHECK(unit.sentences[2].position_m == 1);
  CHECK(unit.sentences[3].sent_id == 3);
  CHECK(unit.sentences[3].position_m == 2);
  CHECK(unit.references == Tokens{"ref text"});
}

TEST_CASE("cluster-json parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse_cluster_json("{\n\"cluster_id\": \"x\",\n oops }", {}),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_AS(parse_cluster_json(R"({"documents": []})", {}), Error);
  CHECK_THROWS_AS(parse_cluster_json(R"({"cluster_id":"c","documents":[{"doc_id":"a"}]})", {}),
                  Error);
  CHECK_THROWS_AS(parse_cluster_json(
                      R"({"cluster_id":"c","documents":[{"doc_id":"a","sentences":[1]}]})", {}),
                  Error);
}

TEST_CASE("compressed variants") {
  const std::string doc = R"({
    "cluster_id": "c",
    "documents": [{"doc_id": "a", "sentences": ["The long original sentence here.", "Other."],
                   "compressed": ["Original sentence.", "Other."]}],
    "references": []
  })";
  LoadOptions opts;
  opts.use_compressed = true;
  const auto unit = parse_cluster_json(doc, opts);
  CHECK(unit.use_compressed);
  const auto& s = unit.sentences[0];
  CHECK(s.compressed_active);
  CHECK(s.emitted_text() == "Original sentence.");
  CHECK(s.byte_len == std::string("Original sentence.").size());
  CHECK(s.tokens == Tokens{"original", "sentence"});

  const auto plain = parse_cluster_json(doc, {});
  CHECK_FALSE(plain.sentences[0].compressed_active);
  CHECK(plain.sentences[0].emitted_text() == "The long original sentence here.");

  const std::string short_list = R"({"cluster_id":"c","documents":[{"doc_id":"a",
      "sentences":["One.","Two."],"compressed":["One."]}],"references":[]})";
  CHECK_THROWS_AS(parse_cluster_json(short_list, opts), Error);
  const std::string none = R"({"cluster_id":"c","documents":[{"doc_id":"a",
      "sentences":["One."]}],"references":[]})";
  CHECK_THROWS_AS(parse_cluster_json(none, opts), Error);
}

TEST_CASE("compressed mode is rejected for lines input") {
  TempDir dir;
  write_text(dir / "doc.txt", "One.\n");
  LoadOptions opts;
  opts.use_compressed = true;
  CHECK_THROWS_AS(load_task_unit(dir / "doc.txt", InputFormat::kLines, opts), Error);
}

TEST_CASE("loading is deterministic") {
  const auto a = load_task_unit(testing::kFixtures / "mini_cluster.json", InputFormat::kClusterJson);
  const auto b = load_task_unit(testing::kFixtures / "mini_cluster.json", InputFormat::kClusterJson);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.sentences[i].tokens == b.sentences[i].tokens);
    CHECK(a.sentences[i].byte_len == b.sentences[i].byte_len);
    const auto& c = a.sentences[i].content_tokens;
    const auto& t = a.sentences[i].tokens;
    CHECK(std::all_of(c.begin(), c.end(), [&](const std::string& w) {
      return std::count(c.begin(), c.end(), w) <= std::count(t.begin(), t.end(), w);
    }));
  }
}

TEST_CASE("format names") {
  CHECK(format_from_string("lines") == InputFormat::kLines);
  CHECK(format_from_string("cluster-json") == InputFormat::kClusterJson);
  CHECK_THROWS_AS(format_from_string("xml"), Error);
}
