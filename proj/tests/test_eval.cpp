#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "simrouge/errors.hpp"
#include "simrouge/eval.hpp"
#include "support.hpp"

using namespace simrouge;

namespace {

std::vector<LabeledPair> toy() { return load_corpus(testing_support::data_dir() / "corpus" / "toy.jsonl"); }

MethodConfig unigram(double threshold) {
  MethodConfig cfg;
  cfg.threshold = threshold;
  return cfg;
}

}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("corpus loading") {
    const auto corpus = toy();
    REQUIRE(corpus.size() == 4);
    CHECK(corpus[0] == LabeledPair{"a", "the cat sat on the mat", "the cat sat on the mat", true});
    CHECK(corpus[3].id == "d");
    CHECK_FALSE(corpus[3].label);

    std::istringstream two(R"({"id": "x", "reference": "r", "candidate": "c", "label": true}
{"id": "y", "reference": "r", "candidate": "c", "label": false}
)");
    CHECK(parse_corpus(two).size() == 2);

    const auto dir = testing_support::data_dir() / "corpus";
    CHECK_THROWS_AS(load_corpus(dir / "duplicate.jsonl"), DuplicateId);
    try {
      load_corpus(dir / "missing_label.jsonl");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_corpus(dir / "absent.jsonl"), MissingFile);

    std::istringstream wrong_type(R"({"id": 1, "reference": "r", "candidate": "c", "label": true})");
    CHECK_THROWS_AS(parse_corpus(wrong_type), ParseError);
    std::istringstream string_label(R"({"id": "x", "reference": "r", "candidate": "c", "label": "yes"})");
    CHECK_THROWS_AS(parse_corpus(string_label), ParseError);
    std::istringstream broken("{not json");
    CHECK_THROWS_AS(parse_corpus(broken), ParseError);
    std::istringstream empty("");
    CHECK(parse_corpus(empty).empty());
  }

  TEST_CASE("classification") {
    CHECK(classify(0.7, 0.6));
    CHECK_FALSE(classify(0.6, 0.6));
    CHECK_FALSE(classify(0.0, 0.0));
    CHECK(classify(0.6, 0.6, true));
  }

  TEST_CASE("confusion counts") {
    // unigram F by hand: a 1.0, b 0.75, c 0.0, d 2/3; labels T T F F
    const auto corpus = toy();
    const auto scores = score_corpus(unigram(0.5), corpus, nullptr);
    REQUIRE(scores.size() == 4);
    CHECK(scores[0] == 1.0);
    CHECK(scores[1] == 0.75);
    CHECK(scores[2] == 0.0);
    CHECK(scores[3] == doctest::Approx(2.0 / 3.0));
    CHECK(scores == score_corpus_serial(unigram(0.5), corpus, nullptr));

    CHECK(confusion(unigram(0.5), corpus, nullptr) == ConfusionCounts{2, 1, 1, 0});
    CHECK(confusion(unigram(0.7), corpus, nullptr) == ConfusionCounts{2, 0, 2, 0});
    CHECK(confusion(unigram(0.8), corpus, nullptr) == ConfusionCounts{1, 0, 2, 1});
    CHECK(confusion(unigram(0.75), corpus, nullptr, InputMode::Plain, true) == ConfusionCounts{2, 0, 2, 0});

    CHECK(tally({1, 1, 1}, {true, true, true}, 0.5) == ConfusionCounts{3, 0, 0, 0});
    CHECK(tally({0, 0}, {false, false}, 0.5) == ConfusionCounts{0, 0, 2, 0});
    CHECK_THROWS_AS(tally({0.5}, {}, 0.5), LengthMismatch);
  }

  TEST_CASE("recall precision f") {
    const auto a = prf(17, 3, 943, 15);
    CHECK(a.precision == doctest::Approx(0.85));
    CHECK(a.recall == doctest::Approx(17.0 / 32.0));
    CHECK(a.f == doctest::Approx(0.654).epsilon(0.001));
    CHECK(prf(17, 2, 944, 15).f == doctest::Approx(0.67).epsilon(0.005));
    CHECK(prf(0, 0, 10, 0) == Prf{});
    CHECK(prf(ConfusionCounts{3, 1, 0, 1}) == prf(3, 1, 0, 1));
    CHECK(prf(4, 0, 0, 0) == Prf{1, 1, 1});
  }

  TEST_CASE("threshold sweep") {
    const auto corpus = toy();
    const std::vector<double> grid = {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    const auto rows = sweep(unigram(0.5), corpus, grid, nullptr);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].threshold == grid[i]);
      CHECK(rows[i].counts.total() == 4);
      CHECK(rows[i].f == prf(rows[i].counts).f);
      if (i > 0) {
        CHECK(rows[i].counts.tp <= rows[i - 1].counts.tp);
        CHECK(rows[i].counts.fp <= rows[i - 1].counts.fp);
      }
    }
    CHECK(rows.back().counts == ConfusionCounts{0, 0, 2, 2});

    const auto none = sweep(unigram(0.5), {}, grid, nullptr);
    REQUIRE(none.size() == 6);
    for (const auto& r : none) {
      CHECK(r.counts == ConfusionCounts{});
      CHECK(r.f == 0.0);
    }
    CHECK_THROWS_AS(sweep(unigram(0.5), corpus, {0.7, 0.3}, nullptr), ConfigError);
  }

  TEST_CASE("kappa") {
    CHECK(cohen_kappa({true, false, true, false}, {true, false, true, false}) == 1.0);
    CHECK(cohen_kappa({true, true, false, false}, {true, false, true, false}) == 0.0);
    CHECK(cohen_kappa({true, true, false, false}, {false, false, true, true}) == -1.0);
    CHECK(cohen_kappa({true, true, true}, {true, true, true}) == 1.0);
    CHECK(cohen_kappa({true, true, true}, {false, false, false}) == 0.0);
    const std::vector<bool> a = {true, true, false, true, false, false, true, true, false, true};
    const std::vector<bool> b = {true, false, false, true, false, true, true, true, false, false};
    CHECK(cohen_kappa(a, b) == doctest::Approx(oracle::kappa(a, b)));
    CHECK_THROWS_AS(cohen_kappa({true}, {}), LengthMismatch);
    CHECK_THROWS_AS(cohen_kappa({}, {}), InputError);
  }

  TEST_CASE("annotations") {
    const auto dir = testing_support::data_dir() / "annotations";
    const auto first = load_annotations(dir / "first.tsv");
    REQUIRE(first.size() == 4);
    CHECK(first[0] == std::pair<std::string, bool>{"p1", true});
    const auto second = load_annotations(dir / "second.tsv");
    const auto [a, b] = join_annotations(first, second);
    CHECK(a == std::vector<bool>{true, true, false, false});
    CHECK(b == std::vector<bool>{true, false, true, false});
    CHECK(cohen_kappa(a, b) == 0.0);
    CHECK_THROWS_AS(join_annotations(first, load_annotations(dir / "disjoint.tsv")), InputError);

    std::istringstream dup("x\t1\nx\t0\n");
    CHECK_THROWS_AS(parse_annotations(dup), DuplicateId);
    std::istringstream bad_label("x\t1\ny\tmaybe\n");
    CHECK_THROWS_AS(parse_annotations(bad_label), ParseError);
    std::istringstream one_column("x\n");
    CHECK_THROWS_AS(parse_annotations(one_column), ParseError);
  }
}
