// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "properties.hpp"
#include "simrouge/engine.hpp"
#include "simrouge/eval.hpp"
#include "simrouge/preprocess.hpp"
#include "simrouge/rouge.hpp"
#include "simrouge/wordnet.hpp"
#include "support.hpp"

using namespace simrouge;
using testing_support::plain;
using testing_support::tok;

namespace {

// Tolerances
constexpr double kExactTol = 1e-12;
constexpr double kTableTol = 0.01;      // two-decimal table values
constexpr double kPrfTol = 0.005;
constexpr double kLexiconTol = 0.05;    // full-lexicon example
constexpr double kMaxClipMillis = 1.0;

constexpr const char* kDwarfsRef = "brown dwarfs rank among the most elusive objects in the universe";
constexpr const char* kDwarfsCand =
    "brown dwarfs are difficult to locate and rank among the most elusive objects in the universe";
constexpr const char* kHistoryRef =
    "the rise of industry the growth of cities and the expansion of the population were the three great "
    "developments of late nineteenth century american history";
constexpr const char* kHistoryCand =
    "the increase of industry the growth of cities and the explosion of the population were three large factors "
    "of nineteenth century america";

bool near(double x, double want, double tol) { return std::fabs(x - want) <= tol; }

std::string num(double x, int places = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
}

Outcome clipping() {
  const auto start = std::chrono::steady_clock::now();
  const auto s = ngram_score(plain("the cat is on the mat"), plain("the the the the the the the"), 1);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool ok = s.precision == 2.0 / 7.0 && ms < kMaxClipMillis;
  return {ok, "P = " + num(s.precision, 6) + " (want 2/7), " + num(ms, 3) + " ms"};
}

Outcome lcs() {
  const auto ref = plain("police killed the gunman");
  const auto a = lcs_length(ref, plain("police kill the gunman"));
  const auto b = lcs_length(ref, plain("the gunman kill police"));
  return {a == 3 && b == 2, "lengths " + std::to_string(a) + " and " + std::to_string(b) + " (want 3 and 2)"};
}

Outcome skip_pairs() {
  const auto m = skip_bigrams(plain("andy eats an apple"), {2});
  const std::set<std::string> want = {"andy\x1f" "eats", "andy\x1f" "an",    "andy\x1f" "apple",
                                      "eats\x1f" "an",   "eats\x1f" "apple", "an\x1f" "apple"};
  std::set<std::string> got;
  bool singles = true;
  for (const auto& [k, c] : m.counts) {
    got.insert(k);
    singles = singles && c == 1;
  }
  const auto den = skip_denominator(4, {2});
  return {got == want && singles && m.total() == 6 && den == 6,
          std::to_string(m.total()) + " pairs, denominator " + std::to_string(den)};
}

Outcome dwarfs_unigram_lcs() {
  const auto ref = plain(kDwarfsRef), cand = plain(kDwarfsCand);
  const double u = ngram_score(ref, cand, 1).f;
  const double l = lcs_score(ref, cand).f;
  return {near(u, 0.81, kTableTol) && near(l, 0.81, kTableTol), "unigram F " + num(u) + ", LCS F " + num(l)};
}

Outcome skip_recovery() {
  const auto ref = plain(kDwarfsRef), cand = plain(kDwarfsCand);
  std::vector<int> hits;
  std::string all;
  for (int d = 0; d <= 10; ++d) {
    const double f = skip_score(ref, cand, {d}).f;
    if (near(f, 0.60, kTableTol)) hits.push_back(d);
    all += (d ? " " : "") + num(f, 3);
  }
  bool default_hits = false;
  std::string list;
  for (int d : hits) {
    default_hits = default_hits || d == SkipConfig{}.d;
    list += (list.empty() ? "" : ",") + std::to_string(d);
  }
  return {!hits.empty() && default_hits,
          "d with F = 0.60: {" + list + "}, default d = " + std::to_string(SkipConfig{}.d) + "; F(d=0..10) = " + all};
}

Outcome jaccard() {
  const auto& db = testing_support::fixture_db();
  const auto shout = db.lookup("shout", Pos::Verb);
  const auto yell = db.lookup("yell", Pos::Verb);
  const double j = jaccard_synsets(db.at(shout[0]), db.at(yell[0]));
  const double s = syn_word_sim(db, tok("shouts", Pos::Verb), tok("yells", Pos::Verb));
  return {std::fabs(j - 1.0 / 9.0) <= kExactTol && s == 1.0, "jaccard " + num(j, 6) + ", word similarity " + num(s)};
}

Outcome depth_weights() {
  const auto& db = testing_support::fixture_db();
  const std::vector<std::pair<const char*, double>> cases = {
      {"kitty", 1.0}, {"cat", 0.85}, {"feline", 0.5}, {"carnivore", 0.2}, {"mammal", 0.0}};
  bool ok = true;
  std::string detail;
  for (const auto& [word, want] : cases) {
    const double got = rs_word(db, tok("kitten", Pos::Noun), tok(word, Pos::Noun));
    ok = ok && std::fabs(got - want) <= kExactTol;
    detail += std::string(detail.empty() ? "" : ", ") + word + " " + num(got, 2);
  }
  return {ok, "kitten vs " + detail};
}

Outcome evaluation() {
  const double a = prf(17, 3, 943, 15).f;
  const double b = prf(17, 2, 944, 15).f;
  return {near(a, 0.65, kPrfTol) && near(b, 0.67, kPrfTol), "F " + num(a) + " and " + num(b)};
}

Outcome settings() {
  const std::vector<RecommendedSetting> golden = {
      {MethodId::Unigram, Setting::SW, 0.6},      {MethodId::Bigram, Setting::NoPre, 0.4},
      {MethodId::Trigram, Setting::SM, 0.3},      {MethodId::FourGram, Setting::SW, 0.3},
      {MethodId::SkipBigram, Setting::SWSM, 0.3}, {MethodId::LCS, Setting::SWSM, 0.5},
      {MethodId::Synonyms, Setting::SW, 0.6},     {MethodId::Relationship, Setting::SW, 0.7},
  };
  const auto& got = recommended_settings();
  return {got == golden, std::to_string(got.size()) + " entries"};
}

Outcome properties() {
  const auto& db = testing_support::fixture_db();
  const std::vector<props::Result> results = {
      props::lcs_vs_bruteforce(1, 500),
      props::skip_denominator_vs_enumeration(2, 1000),
      props::rouge_invariants(3, 1000),
      props::wordnet_invariants(db, 4, 1000),
      props::engine_invariants(5, 1000),
      props::eval_invariants(6, 1000),
      props::sweep_monotonicity(7, 50),
      props::wordnet_dominance(db, 8, 200),
  };
  bool ok = true;
  std::string detail;
  for (const auto& r : results) {
    ok = ok && r.ok();
    detail += (detail.empty() ? "" : "; ") + r.name + " " + std::to_string(r.violations) + "/" +
              std::to_string(r.cases);
    if (!r.ok()) detail += " [" + r.first_failure + "]";
  }
  return {ok, detail};
}

Outcome full_lexicon() {
  const auto dir = testing_support::full_wordnet_dir();
  if (!dir) return {false, "full WordNet not found; run tools/fetch_wordnet.sh"};
  const auto db = WordNetDb::load(*dir);
  const auto cfg = PreprocessConfig::from_setting(Setting::SW, true);
  const auto ref = preprocess_sentence(kHistoryRef, cfg, &db);
  const auto cand = preprocess_sentence(kHistoryCand, cfg, &db);
  const double syn = syn_score(db, ref, cand).f;
  const double rel = rs_score(db, ref, cand).f;
  const bool syn_ok = near(syn, 0.67, kLexiconTol);
  const bool rel_ok = near(rel, 0.82, kLexiconTol);
  std::string detail = "synonyms F " + num(syn) + (syn_ok ? " ok" : " outside 0.67 +/- 0.05") + ", relationship F " +
                       num(rel) + (rel_ok ? " ok" : " outside 0.82 +/- 0.05");
  if (!rel_ok) detail += " (clipping caps the relationship numerator; see README)";
  return {syn_ok && rel_ok, detail};
}

}  // namespace

int main() {
  report(1, "clipped unigram precision", clipping);
  report(2, "LCS lengths", lcs);
  report(3, "skip-bigram pairs", skip_pairs);
  report(4, "dwarfs pair unigram and LCS", dwarfs_unigram_lcs);
  report(5, "skip distance recovery", skip_recovery);
  report(6, "synset Jaccard", jaccard);
  report(7, "depth weights", depth_weights);
  report(8, "evaluation arithmetic", evaluation);
  report(9, "recommended settings", settings);
  report(10, "property suites", properties);
  report(11, "full-lexicon WordNet scores", full_lexicon);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
