#include "simrouge/rouge.hpp"

#include <algorithm>
#include <numeric>

#include "simrouge/errors.hpp"

namespace simrouge {

namespace {

constexpr char kSep = '\x1f';

std::string match_key(const Token& t, MatchMode mode) {
  if (mode == MatchMode::Key || !t.pos) return t.key();
  std::string k = t.key();
  k.push_back(kSep);
  k.append(pos_name(*t.pos));
  return k;
}

std::vector<std::string> match_keys(const Sentence& s, MatchMode mode) {
  std::vector<std::string> keys;
  keys.reserve(s.size());
  for (const auto& t : s.tokens) keys.push_back(match_key(t, mode));
  return keys;
}

// dp[i][j] = LCS of ref[i..] and cand[j..], flattened row-major.
std::vector<std::size_t> lcs_suffix_table(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t rows = a.size() + 1;
  const std::size_t cols = b.size() + 1;
  std::vector<std::size_t> dp(rows * cols, 0);
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      dp[i * cols + j] = a[i] == b[j] ? dp[(i + 1) * cols + j + 1] + 1
                                      : std::max(dp[(i + 1) * cols + j], dp[i * cols + j + 1]);
    }
  }
  return dp;
}

}  // namespace

double harmonic_mean(double recall, double precision) {
  const double sum = recall + precision;
  return sum > 0.0 ? 2.0 * recall * precision / sum : 0.0;
}

SimilarityScore SimilarityScore::from_ratio(double matched, double ref_total, double cand_total) {
  SimilarityScore s;
  s.recall = ref_total > 0.0 ? matched / ref_total : 0.0;
  s.precision = cand_total > 0.0 ? matched / cand_total : 0.0;
  s.f = harmonic_mean(s.recall, s.precision);
  return s;
}

std::size_t NGramMultiset::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + static_cast<std::size_t>(kv.second); });
}

NGramMultiset ngram_multiset(const Sentence& s, int n, MatchMode mode) {
  if (n < 1) throw InvalidN(n);
  NGramMultiset out;
  out.n = n;
  const auto keys = match_keys(s, mode);
  const auto width = static_cast<std::size_t>(n);
  if (keys.size() < width) return out;
  for (std::size_t i = 0; i + width <= keys.size(); ++i) {
    std::string gram = keys[i];
    for (std::size_t k = 1; k < width; ++k) {
      gram.push_back(kSep);
      gram.append(keys[i + k]);
    }
    ++out.counts[gram];
  }
  return out;
}

std::size_t clipped_overlap(const NGramMultiset& ref, const NGramMultiset& cand) {
  if (ref.n != cand.n) throw MismatchedN(ref.n, cand.n);
  const auto& small = ref.counts.size() <= cand.counts.size() ? ref.counts : cand.counts;
  const auto& large = ref.counts.size() <= cand.counts.size() ? cand.counts : ref.counts;
  std::size_t overlap = 0;
  for (const auto& [gram, count] : small) {
    auto it = large.find(gram);
    if (it != large.end()) overlap += static_cast<std::size_t>(std::min(count, it->second));
  }
  return overlap;
}

SimilarityScore ngram_score(const Sentence& ref, const Sentence& cand, int n, MatchMode mode) {
  const auto r = ngram_multiset(ref, n, mode);
  const auto c = ngram_multiset(cand, n, mode);
  return SimilarityScore::from_ratio(static_cast<double>(clipped_overlap(r, c)), static_cast<double>(r.total()),
                                     static_cast<double>(c.total()));
}

std::size_t lcs_length(const Sentence& ref, const Sentence& cand, MatchMode mode) {
  const auto a = match_keys(ref, mode);
  const auto b = match_keys(cand, mode);
  // Two-row DP; the full table is only needed for alignment.
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::pair<std::size_t, std::size_t>> lcs_alignment(const Sentence& ref, const Sentence& cand,
                                                               MatchMode mode) {
  const auto a = match_keys(ref, mode);
  const auto b = match_keys(cand, mode);
  const auto dp = lcs_suffix_table(a, b);
  const std::size_t cols = b.size() + 1;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j] && dp[i * cols + j] == dp[(i + 1) * cols + j + 1] + 1) {
      out.emplace_back(i, j);
      ++i;
      ++j;
    } else if (dp[i * cols + j + 1] == dp[i * cols + j]) {
      ++j;  // keep reference position i available as long as possible
    } else {
      ++i;
    }
  }
  return out;
}

SimilarityScore lcs_score(const Sentence& ref, const Sentence& cand, MatchMode mode) {
  return SimilarityScore::from_ratio(static_cast<double>(lcs_length(ref, cand, mode)), static_cast<double>(ref.size()),
                                     static_cast<double>(cand.size()));
}

NGramMultiset skip_bigrams(const Sentence& s, SkipConfig cfg, MatchMode mode) {
  if (cfg.d < 0) throw ConfigError("skip distance must be >= 0");
  NGramMultiset out;
  out.n = 2;
  const auto keys = match_keys(s, mode);
  const auto reach = static_cast<std::size_t>(cfg.d) + 1;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::size_t last = std::min(keys.size() - 1, i + reach);
    for (std::size_t j = i + 1; j <= last; ++j) {
      std::string pair = keys[i];
      pair.push_back(kSep);
      pair.append(keys[j]);
      ++out.counts[pair];
    }
  }
  return out;
}

std::size_t skip_denominator(std::size_t len, SkipConfig cfg) {
  if (cfg.d < 0) throw ConfigError("skip distance must be >= 0");
  const auto d = static_cast<std::size_t>(cfg.d);
  if (len > d + 1) return (len - d - 1) * (d + 1) + d * (d + 1) / 2;
  return len * (len - (len > 0 ? 1 : 0)) / 2;
}

SimilarityScore skip_score(const Sentence& ref, const Sentence& cand, SkipConfig cfg, MatchMode mode) {
  const auto overlap = clipped_overlap(skip_bigrams(ref, cfg, mode), skip_bigrams(cand, cfg, mode));
  return SimilarityScore::from_ratio(static_cast<double>(overlap), static_cast<double>(skip_denominator(ref.size(), cfg)),
                                     static_cast<double>(skip_denominator(cand.size(), cfg)));
}

}  // namespace simrouge
