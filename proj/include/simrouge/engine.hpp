#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simrouge/preprocess.hpp"
#include "simrouge/rouge.hpp"
#include "simrouge/wordnet.hpp"

namespace simrouge {

enum class MethodId { Unigram, Bigram, Trigram, FourGram, LCS, SkipBigram, UnigramPOS, Synonyms, Relationship };

const std::vector<MethodId>& all_methods();

// unigram, bigram, trigram, fourgram, lcs, skip-bigram, unigram-pos,
// synonyms, relationship
std::string_view method_name(MethodId m);
MethodId parse_method(std::string_view name);  // throws ConfigError

bool needs_pos(MethodId m);
bool uses_wordnet(MethodId m);

struct MethodConfig {
  MethodId method = MethodId::Unigram;
  PreprocessConfig preprocess;
  double threshold = 0.5;
  SkipConfig skip;
  DepthWeights weights;

  // Preprocessing actually applied: POS methods always tag.
  PreprocessConfig effective_preprocess() const;

  // Throws InvalidCombination, MissingLexicon or ConfigError. A lexicon is
  // not required for UnigramPOS on pretagged input.
  void validate(const WordNetDb* db, InputMode mode = InputMode::Plain) const;
};

struct RecommendedSetting {
  MethodId method;
  Setting setting;
  double threshold;

  bool operator==(const RecommendedSetting&) const = default;
};

// The eight tuned (setting, threshold) pairs. UnigramPOS has none.
const std::vector<RecommendedSetting>& recommended_settings();
std::optional<RecommendedSetting> recommended_for(MethodId m);

// Recommended setting and threshold; UnigramPOS borrows Unigram's.
MethodConfig default_config(MethodId m);

SimilarityScore score_pair(const MethodConfig& cfg, const Sentence& ref, const Sentence& cand, const WordNetDb* db);

// Row-major M x N scores, ref sentences as rows.
struct ScoreMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SimilarityScore> cells;

  const SimilarityScore& at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  bool operator==(const ScoreMatrix&) const = default;
};

ScoreMatrix score_matrix(const MethodConfig& cfg, const Document& ref, const Document& cand, const WordNetDb* db);
ScoreMatrix score_matrix_serial(const MethodConfig& cfg, const Document& ref, const Document& cand,
                                const WordNetDb* db);

struct Match {
  std::size_t cand_index = 0;
  SimilarityScore score;
  bool flagged = false;

  bool operator==(const Match&) const = default;
};

struct RefMatches {
  std::size_t ref_index = 0;
  std::vector<Match> matches;             // top-k, F descending then cand index
  std::vector<std::size_t> flagged_cands;  // every cand with F > threshold, ascending

  bool operator==(const RefMatches&) const = default;
};

struct ComparisonReport {
  MethodId method = MethodId::Unigram;
  std::vector<RefMatches> rows;

  bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport build_report(MethodId method, const ScoreMatrix& scores, double threshold, std::size_t top_k);

ComparisonReport compare_method(const MethodConfig& cfg, const Document& ref, const Document& cand,
                                std::size_t top_k, const WordNetDb* db);

// Preprocesses the raw sentences per method and scores all M x N pairs.
std::vector<ComparisonReport> compare_documents(const std::vector<MethodConfig>& cfgs,
                                                const std::vector<std::string>& ref,
                                                const std::vector<std::string>& cand, std::size_t top_k,
                                                const WordNetDb* db, InputMode mode = InputMode::Plain);

// Sentence i of ref against sentence i of cand only.
std::vector<SimilarityScore> compare_corresponding(const MethodConfig& cfg, const std::vector<std::string>& ref,
                                                   const std::vector<std::string>& cand, const WordNetDb* db,
                                                   InputMode mode = InputMode::Plain);

}  // namespace simrouge
