#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "simrouge/errors.hpp"
#include "simrouge/preprocess.hpp"
#include "support.hpp"

using namespace simrouge;
using testing_support::fixture_db;
using testing_support::words;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

using Words = std::vector<std::string>;

}  // namespace

TEST_SUITE("preprocess") {
  TEST_CASE("sentence splitting") {
    CHECK(split_sentences("A cat. A dog!", SplitMode::Terminator) == Words{"A cat.", "A dog!"});
    CHECK(split_sentences("one\ntwo", SplitMode::Line) == Words{"one", "two"});
    CHECK(split_sentences("", SplitMode::Terminator).empty());
    CHECK(split_sentences("", SplitMode::Line).empty());
    CHECK(split_sentences("3.14 is pi? yes", SplitMode::Terminator) == Words{"3.14 is pi?", "yes"});
    CHECK(split_sentences("a\n\n  \nb\n", SplitMode::Line) == Words{"a", "b"});
    CHECK(split_sentences("no terminator", SplitMode::Terminator) == Words{"no terminator"});
  }

  TEST_CASE("tokenization") {
    CHECK(surfaces(tokenize("Police killed the gunman.")) == Words{"police", "killed", "the", "gunman"});
    CHECK(surfaces(tokenize("andy eats an apple")) == Words{"andy", "eats", "an", "apple"});
    CHECK(tokenize("...").empty());
    CHECK(tokenize("").empty());
    CHECK(surfaces(tokenize("Don't 'quote' rock'n'roll dogs'")) == Words{"don't", "quote", "rock'n'roll", "dogs"});
    CHECK(surfaces(tokenize("e-mail 3.5 R2D2")) == Words{"email", "35", "r2d2"});
    CHECK(surfaces(tokenize("It\xE2\x80\x99s")) == Words{"it's"});
    CHECK(surfaces(tokenize("\xC3\x89T\xC3\x89 \xCE\x91\xCE\x92")) == Words{"\xC3\xA9t\xC3\xA9", "\xCE\xB1\xCE\xB2"});
    CHECK(surfaces(tokenize("a \xE2\x80\x94 b")) == Words{"a", "b"});
    for (const auto& t : tokenize("Mixed CASE, words!")) {
      CHECK_FALSE(t.pos.has_value());
      CHECK_FALSE(t.stem.has_value());
    }
  }

  TEST_CASE("pretagged tokens") {
    auto tokens = tokenize_pretagged("She_OTHER shouts_VERB loudly_ADV .._OTHER");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].surface == "she");
    CHECK(tokens[1] == Token{"shouts", Pos::Verb, std::nullopt});
    CHECK(tokens[2].pos == Pos::Adv);
    CHECK_THROWS_AS(tokenize_pretagged("shouts"), InputError);
    CHECK_THROWS_AS(tokenize_pretagged("shouts_VRB"), InputError);
    CHECK(tokenize_pretagged("").empty());
  }

  TEST_CASE("stopword list") {
    const auto& sw = *default_stopwords();
    CHECK(sw.size() == 570);
    for (const char* w : {"the", "is", "on", "a", "an", "of", "were", "and"}) CHECK_MESSAGE(sw.count(w) == 1, w);
    for (const char* w : {"cat", "mat", "police", "gunman", "rise", "industry"}) CHECK_MESSAGE(sw.count(w) == 0, w);
    CHECK(stopword_checksum(default_stopwords_text()) == 0xb1427e25a8708eefULL);
    CHECK(stopword_checksum("") == 0xcbf29ce484222325ULL);
  }

  TEST_CASE("stopword file parsing") {
    std::istringstream in("# header\nThe\n  of  \n\nfoo # trailing\n");
    const auto set = parse_stopwords(in);
    CHECK(set == StopwordSet{"the", "of", "foo"});
    CHECK_THROWS_AS(load_stopwords(testing_support::data_dir() / "no_such_file.txt"), MissingFile);
  }

  TEST_CASE("stopword removal") {
    const auto& sw = *default_stopwords();
    CHECK(surfaces(remove_stopwords(tokenize("the cat is on the mat"), sw)) == Words{"cat", "mat"});
    CHECK(remove_stopwords({}, sw).empty());
    CHECK(surfaces(remove_stopwords(tokenize("cat mat"), sw)) == Words{"cat", "mat"});
  }

  TEST_CASE("settings") {
    for (auto s : {Setting::NoPre, Setting::SW, Setting::SM, Setting::SWSM}) {
      CHECK(parse_setting(setting_flag(s)) == s);
      CHECK(PreprocessConfig::from_setting(s).setting() == s);
    }
    CHECK(setting_label(Setting::SWSM) == "SW+SM");
    CHECK(setting_label(Setting::NoPre) == "No Pre");
    CHECK(setting_flag(Setting::SWSM) == "sw+sm");
    const auto c = PreprocessConfig::from_setting(Setting::SW);
    CHECK(c.remove_stopwords);
    CHECK_FALSE(c.apply_stemming);
    CHECK_THROWS_AS(parse_setting("stem"), ConfigError);
  }

  TEST_CASE("pipeline") {
    using testing_support::with_setting;
    CHECK(words(with_setting("The cat is on the mat.", Setting::NoPre)) == Words{"the", "cat", "is", "on", "the", "mat"});
    CHECK(words(with_setting("The cat is on the mat.", Setting::SW)) == Words{"cat", "mat"});
    CHECK(words(with_setting("happy dogs", Setting::SM)) == Words{"happi", "dog"});
    CHECK(words(with_setting("The happy dogs are running", Setting::SWSM)) == Words{"happi", "dog", "run"});

    const auto s = with_setting("happy dogs", Setting::SM);
    CHECK(s.raw == "happy dogs");
    CHECK(s.stemmed());
    CHECK(s.tokens[0].surface == "happy");
    CHECK_FALSE(s.tagged());
  }

  TEST_CASE("tagging") {
    const auto& db = fixture_db();
    CHECK(tag_word("shouts", db) == Pos::Verb);
    CHECK(tag_word("call", db) == Pos::Noun);  // two noun senses beat one verb sense
    CHECK(tag_word("outcry", db) == Pos::Noun);  // one sense each: tie goes to the noun
    CHECK(tag_word("cry", db) == Pos::Verb);
    CHECK(tag_word("xqzt", db) == Pos::Other);
    CHECK(tag_word("paid", db) == Pos::Verb);
    CHECK(tag_word("quickly", db) == Pos::Adv);
    CHECK(tag_word("gunman", db) == Pos::Noun);

    auto cfg = PreprocessConfig::from_setting(Setting::SWSM, true);
    const auto s = preprocess_sentence("The gunman shouts", cfg, &db);
    REQUIRE(s.size() == 2);
    CHECK(s.tokens[0].pos == Pos::Noun);
    CHECK(s.tokens[1].pos == Pos::Verb);
    CHECK(s.tokens[1].surface == "shouts");
    CHECK(s.tokens[1].stem == "shout");

    CHECK_THROWS_AS(preprocess_sentence("x", cfg, nullptr), MissingLexicon);
    const auto pre = preprocess_sentence("the_OTHER gunman_NOUN", cfg, nullptr, InputMode::Pretagged);
    CHECK(words(pre) == Words{"gunman"});
    CHECK(pre.tokens[0].pos == Pos::Noun);
  }

  TEST_CASE("documents") {
    const auto doc = preprocess_document({"a cat", "...", "dogs"}, PreprocessConfig{}, nullptr);
    REQUIRE(doc.size() == 3);
    CHECK(doc.sentences[1].empty());
  }
}
