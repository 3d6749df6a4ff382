#include "simrouge/engine.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "simrouge/errors.hpp"

namespace simrouge {

namespace {

struct MethodInfo {
  MethodId id;
  std::string_view name;
};

constexpr MethodInfo kMethods[] = {
    {MethodId::Unigram, "unigram"},        {MethodId::Bigram, "bigram"},
    {MethodId::Trigram, "trigram"},        {MethodId::FourGram, "fourgram"},
    {MethodId::LCS, "lcs"},                {MethodId::SkipBigram, "skip-bigram"},
    {MethodId::UnigramPOS, "unigram-pos"}, {MethodId::Synonyms, "synonyms"},
    {MethodId::Relationship, "relationship"},
};

// Runs body(k) for k in [0, n) and rethrows the exception of the lowest
// failing index, so errors are as deterministic as the results.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr error;
  std::size_t error_at = n;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(simrouge_parallel_error)
      {
        if (static_cast<std::size_t>(k) < error_at) {
          error_at = static_cast<std::size_t>(k);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

const std::vector<MethodId>& all_methods() {
  static const std::vector<MethodId> methods = [] {
    std::vector<MethodId> out;
    for (const auto& m : kMethods) out.push_back(m.id);
    return out;
  }();
  return methods;
}

std::string_view method_name(MethodId m) {
  for (const auto& info : kMethods) {
    if (info.id == m) return info.name;
  }
  return "unknown";
}

MethodId parse_method(std::string_view name) {
  for (const auto& info : kMethods) {
    if (info.name == name) return info.id;
  }
  if (name == "4gram" || name == "4-gram") return MethodId::FourGram;
  if (name == "skipbigram" || name == "skip2") return MethodId::SkipBigram;
  if (name == "unigrampos" || name == "unigram_pos") return MethodId::UnigramPOS;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

bool needs_pos(MethodId m) {
  return m == MethodId::UnigramPOS || m == MethodId::Synonyms || m == MethodId::Relationship;
}

bool uses_wordnet(MethodId m) { return m == MethodId::Synonyms || m == MethodId::Relationship; }

PreprocessConfig MethodConfig::effective_preprocess() const {
  auto p = preprocess;
  if (needs_pos(method)) p.tag_pos = true;
  return p;
}

void MethodConfig::validate(const WordNetDb* db, InputMode mode) const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ConfigError("threshold must lie in [0, 1]");
  if (skip.d < 0) throw ConfigError("skip distance must be >= 0");
  if (!weights.valid()) throw ConfigError("depth weights must start at 1 and be non-increasing");
  if (uses_wordnet(method) && preprocess.apply_stemming) {
    throw InvalidCombination(std::string(method_name(method)) + " cannot be combined with stemming");
  }
  if (db == nullptr) {
    if (uses_wordnet(method)) {
      throw MissingLexicon(std::string(method_name(method)) + " needs a WordNet lexicon (--wordnet-dir)");
    }
    if (needs_pos(method) && mode == InputMode::Plain) {
      throw MissingLexicon(std::string(method_name(method)) +
                           " needs a WordNet lexicon for tagging (--wordnet-dir) or --pretagged input");
    }
  }
}

const std::vector<RecommendedSetting>& recommended_settings() {
  static const std::vector<RecommendedSetting> table = {
      {MethodId::Unigram, Setting::SW, 0.6},      {MethodId::Bigram, Setting::NoPre, 0.4},
      {MethodId::Trigram, Setting::SM, 0.3},      {MethodId::FourGram, Setting::SW, 0.3},
      {MethodId::SkipBigram, Setting::SWSM, 0.3}, {MethodId::LCS, Setting::SWSM, 0.5},
      {MethodId::Synonyms, Setting::SW, 0.6},     {MethodId::Relationship, Setting::SW, 0.7},
  };
  return table;
}

std::optional<RecommendedSetting> recommended_for(MethodId m) {
  for (const auto& r : recommended_settings()) {
    if (r.method == m) return r;
  }
  return std::nullopt;
}

MethodConfig default_config(MethodId m) {
  const auto rec = recommended_for(m == MethodId::UnigramPOS ? MethodId::Unigram : m);
  MethodConfig cfg;
  cfg.method = m;
  cfg.preprocess = PreprocessConfig::from_setting(rec->setting, needs_pos(m));
  cfg.threshold = rec->threshold;
  return cfg;
}

SimilarityScore score_pair(const MethodConfig& cfg, const Sentence& ref, const Sentence& cand, const WordNetDb* db) {
  switch (cfg.method) {
    case MethodId::Unigram: return ngram_score(ref, cand, 1);
    case MethodId::Bigram: return ngram_score(ref, cand, 2);
    case MethodId::Trigram: return ngram_score(ref, cand, 3);
    case MethodId::FourGram: return ngram_score(ref, cand, 4);
    case MethodId::LCS: return lcs_score(ref, cand);
    case MethodId::SkipBigram: return skip_score(ref, cand, cfg.skip);
    case MethodId::UnigramPOS: return ngram_score(ref, cand, 1, MatchMode::KeyAndPos);
    case MethodId::Synonyms:
    case MethodId::Relationship:
      if (db == nullptr) throw MissingLexicon(std::string(method_name(cfg.method)) + " needs a WordNet lexicon");
      if (ref.stemmed() || cand.stemmed()) {
        throw InvalidCombination(std::string(method_name(cfg.method)) + " cannot be combined with stemming");
      }
      return cfg.method == MethodId::Synonyms ? syn_score(*db, ref, cand) : rs_score(*db, ref, cand, cfg.weights);
  }
  throw ConfigError("unknown method");
}

ScoreMatrix score_matrix(const MethodConfig& cfg, const Document& ref, const Document& cand, const WordNetDb* db) {
  ScoreMatrix m{ref.size(), cand.size(), std::vector<SimilarityScore>(ref.size() * cand.size())};
  if (m.cells.empty()) return m;
  parallel_for(m.cells.size(), [&](std::size_t k) {
    m.cells[k] = score_pair(cfg, ref.sentences[k / m.cols], cand.sentences[k % m.cols], db);
  });
  return m;
}

ScoreMatrix score_matrix_serial(const MethodConfig& cfg, const Document& ref, const Document& cand,
                                const WordNetDb* db) {
  ScoreMatrix m{ref.size(), cand.size(), {}};
  m.cells.reserve(ref.size() * cand.size());
  for (const auto& r : ref.sentences) {
    for (const auto& c : cand.sentences) m.cells.push_back(score_pair(cfg, r, c, db));
  }
  return m;
}

ComparisonReport build_report(MethodId method, const ScoreMatrix& scores, double threshold, std::size_t top_k) {
  if (top_k < 1) throw ConfigError("top-k must be >= 1");
  ComparisonReport report;
  report.method = method;
  report.rows.reserve(scores.rows);
  std::vector<std::size_t> order(scores.cols);
  for (std::size_t i = 0; i < scores.rows; ++i) {
    RefMatches row;
    row.ref_index = i;
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t keep = std::min(top_k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double fa = scores.at(i, a).f;
                        const double fb = scores.at(i, b).f;
                        return fa != fb ? fa > fb : a < b;
                      });
    for (std::size_t r = 0; r < keep; ++r) {
      const auto j = order[r];
      row.matches.push_back({j, scores.at(i, j), scores.at(i, j).f > threshold});
    }
    for (std::size_t j = 0; j < scores.cols; ++j) {
      if (scores.at(i, j).f > threshold) row.flagged_cands.push_back(j);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ComparisonReport compare_method(const MethodConfig& cfg, const Document& ref, const Document& cand,
                                std::size_t top_k, const WordNetDb* db) {
  return build_report(cfg.method, score_matrix(cfg, ref, cand, db), cfg.threshold, top_k);
}

std::vector<ComparisonReport> compare_documents(const std::vector<MethodConfig>& cfgs,
                                                const std::vector<std::string>& ref,
                                                const std::vector<std::string>& cand, std::size_t top_k,
                                                const WordNetDb* db, InputMode mode) {
  if (top_k < 1) throw ConfigError("top-k must be >= 1");
  for (const auto& cfg : cfgs) cfg.validate(db, mode);
  std::vector<ComparisonReport> out;
  out.reserve(cfgs.size());
  for (const auto& cfg : cfgs) {
    const auto pre = cfg.effective_preprocess();
    const auto r = preprocess_document(ref, pre, db, mode);
    const auto c = preprocess_document(cand, pre, db, mode);
    out.push_back(compare_method(cfg, r, c, top_k, db));
  }
  return out;
}

std::vector<SimilarityScore> compare_corresponding(const MethodConfig& cfg, const std::vector<std::string>& ref,
                                                   const std::vector<std::string>& cand, const WordNetDb* db,
                                                   InputMode mode) {
  if (ref.size() != cand.size()) throw LengthMismatch(ref.size(), cand.size());
  cfg.validate(db, mode);
  const auto pre = cfg.effective_preprocess();
  std::vector<SimilarityScore> out(ref.size());
  parallel_for(ref.size(), [&](std::size_t i) {
    out[i] = score_pair(cfg, preprocess_sentence(ref[i], pre, db, mode), preprocess_sentence(cand[i], pre, db, mode),
                        db);
  });
  return out;
}

}  // namespace simrouge
