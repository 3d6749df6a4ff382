#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simrouge/text.hpp"

namespace simrouge {

struct SimilarityScore {
  double recall = 0.0;
  double precision = 0.0;
  double f = 0.0;

  // 0/0 components are 0; F is the harmonic mean, 0 when R + P = 0.
  static SimilarityScore from_ratio(double matched, double ref_total, double cand_total);

  bool operator==(const SimilarityScore&) const = default;
};

double harmonic_mean(double recall, double precision);

// How tokens are compared: by key (stem or surface), or by key and POS tag.
enum class MatchMode { Key, KeyAndPos };

// Multiset of n-token windows. Keys join token keys with '\x1f'.
struct NGramMultiset {
  int n = 1;
  std::unordered_map<std::string, int> counts;

  std::size_t total() const;
};

NGramMultiset ngram_multiset(const Sentence& s, int n, MatchMode mode = MatchMode::Key);

// Sum over shared n-grams of min(ref count, cand count).
std::size_t clipped_overlap(const NGramMultiset& ref, const NGramMultiset& cand);

SimilarityScore ngram_score(const Sentence& ref, const Sentence& cand, int n, MatchMode mode = MatchMode::Key);

std::size_t lcs_length(const Sentence& ref, const Sentence& cand, MatchMode mode = MatchMode::Key);

// One LCS as (ref index, cand index) pairs, preferring the leftmost
// reference positions.
std::vector<std::pair<std::size_t, std::size_t>> lcs_alignment(const Sentence& ref, const Sentence& cand,
                                                               MatchMode mode = MatchMode::Key);

SimilarityScore lcs_score(const Sentence& ref, const Sentence& cand, MatchMode mode = MatchMode::Key);

struct SkipConfig {
  int d = 4;  // maximum number of tokens between the two members of a pair
};

// Every in-order pair (w_i, w_j) with i < j <= i + d + 1.
NGramMultiset skip_bigrams(const Sentence& s, SkipConfig cfg, MatchMode mode = MatchMode::Key);

// Number of skip-bigrams in a sentence of `len` tokens. Uses
// (len-d-1)(d+1) + d(d+1)/2 when len > d+1 and C(len, 2) otherwise.
std::size_t skip_denominator(std::size_t len, SkipConfig cfg);

SimilarityScore skip_score(const Sentence& ref, const Sentence& cand, SkipConfig cfg,
                           MatchMode mode = MatchMode::Key);

}  // namespace simrouge
