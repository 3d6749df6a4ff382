#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "simrouge/engine.hpp"

namespace simrouge {

struct LabeledPair {
  std::string id;
  std::string reference;
  std::string candidate;
  bool label = false;

  bool operator==(const LabeledPair&) const = default;
};

// JSON Lines: {"id": str, "reference": str, "candidate": str, "label": bool}.
// Blank lines are skipped.
std::vector<LabeledPair> parse_corpus(std::istream& in, const std::string& source = "<corpus>");
std::vector<LabeledPair> load_corpus(const std::filesystem::path& path);

// Strict by default: a score equal to the threshold is a negative.
inline bool classify(double score, double threshold, bool inclusive = false) {
  return inclusive ? score >= threshold : score > threshold;
}

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

struct Prf {
  double recall = 0.0;
  double precision = 0.0;
  double f = 0.0;

  bool operator==(const Prf&) const = default;
};

Prf prf(const ConfusionCounts& c);
Prf prf(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn);

// F score of each pair, reference against its own candidate.
std::vector<double> score_corpus(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus, const WordNetDb* db,
                                 InputMode mode = InputMode::Plain);
std::vector<double> score_corpus_serial(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus,
                                        const WordNetDb* db, InputMode mode = InputMode::Plain);

ConfusionCounts tally(const std::vector<double>& scores, const std::vector<bool>& labels, double threshold,
                      bool inclusive = false);

ConfusionCounts confusion(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus, const WordNetDb* db,
                          InputMode mode = InputMode::Plain, bool inclusive = false);

struct SweepRow {
  double threshold = 0.0;
  ConfusionCounts counts;
  double recall = 0.0;
  double precision = 0.0;
  double f = 0.0;

  bool operator==(const SweepRow&) const = default;
};

// Thresholds must be ascending. Scores are computed once.
std::vector<SweepRow> sweep(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus,
                            const std::vector<double>& thresholds, const WordNetDb* db,
                            InputMode mode = InputMode::Plain, bool inclusive = false);
std::vector<SweepRow> sweep_scores(const std::vector<double>& scores, const std::vector<bool>& labels,
                                   const std::vector<double>& thresholds, bool inclusive = false);

// Two-rater, two-category Cohen's kappa. When chance agreement is 1 the
// result is 1 for identical annotations and 0 otherwise.
double cohen_kappa(const std::vector<bool>& a, const std::vector<bool>& b);

// TSV with columns id and label, optional header row. Labels accept
// 1/0, true/false, yes/no, t/f (any case).
std::vector<std::pair<std::string, bool>> parse_annotations(std::istream& in, const std::string& source = "<annotations>");
std::vector<std::pair<std::string, bool>> load_annotations(const std::filesystem::path& path);

// Labels of b reordered to follow a's ids. Throws InputError unless the id
// sets match exactly.
std::pair<std::vector<bool>, std::vector<bool>> join_annotations(const std::vector<std::pair<std::string, bool>>& a,
                                                                 const std::vector<std::pair<std::string, bool>>& b);

}  // namespace simrouge
