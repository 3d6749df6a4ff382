#include "simrouge/eval.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "simrouge/errors.hpp"

namespace simrouge {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name, const std::string& source, std::size_t line) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(source, line, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& obj, const char* name, const std::string& source, std::size_t line) {
  const auto& v = field(obj, name, source, line);
  if (!v.is_string()) throw ParseError(source, line, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::optional<bool> parse_label(std::string_view s) {
  std::string v(trim(s));
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (v == "1" || v == "true" || v == "yes" || v == "t" || v == "y") return true;
  if (v == "0" || v == "false" || v == "no" || v == "f" || v == "n") return false;
  return std::nullopt;
}

std::vector<bool> labels_of(const std::vector<LabeledPair>& corpus) {
  std::vector<bool> out;
  out.reserve(corpus.size());
  for (const auto& p : corpus) out.push_back(p.label);
  return out;
}

}  // namespace

std::vector<LabeledPair> parse_corpus(std::istream& in, const std::string& source) {
  std::vector<LabeledPair> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source, lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(source, lineno, "expected a JSON object");
    LabeledPair p;
    p.id = string_field(obj, "id", source, lineno);
    p.reference = string_field(obj, "reference", source, lineno);
    p.candidate = string_field(obj, "candidate", source, lineno);
    const auto& label = field(obj, "label", source, lineno);
    if (!label.is_boolean()) throw ParseError(source, lineno, "field 'label' must be true or false");
    p.label = label.get<bool>();
    if (!seen.insert(p.id).second) throw DuplicateId(p.id);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LabeledPair> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path.string());
  return parse_corpus(in, path.string());
}

Prf prf(const ConfusionCounts& c) {
  Prf out;
  out.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
  out.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
  out.f = harmonic_mean(out.recall, out.precision);
  return out;
}

Prf prf(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) { return prf(ConfusionCounts{tp, fp, tn, fn}); }

std::vector<double> score_corpus(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus, const WordNetDb* db,
                                 InputMode mode) {
  std::vector<std::string> ref, cand;
  ref.reserve(corpus.size());
  cand.reserve(corpus.size());
  for (const auto& p : corpus) {
    ref.push_back(p.reference);
    cand.push_back(p.candidate);
  }
  const auto scores = compare_corresponding(cfg, ref, cand, db, mode);
  std::vector<double> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back(s.f);
  return out;
}

std::vector<double> score_corpus_serial(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus,
                                        const WordNetDb* db, InputMode mode) {
  cfg.validate(db, mode);
  const auto pre = cfg.effective_preprocess();
  std::vector<double> out;
  out.reserve(corpus.size());
  for (const auto& p : corpus) {
    out.push_back(score_pair(cfg, preprocess_sentence(p.reference, pre, db, mode),
                             preprocess_sentence(p.candidate, pre, db, mode), db)
                      .f);
  }
  return out;
}

ConfusionCounts tally(const std::vector<double>& scores, const std::vector<bool>& labels, double threshold,
                      bool inclusive) {
  if (scores.size() != labels.size()) throw LengthMismatch(scores.size(), labels.size());
  ConfusionCounts c;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = classify(scores[i], threshold, inclusive);
    if (predicted) {
      ++(labels[i] ? c.tp : c.fp);
    } else {
      ++(labels[i] ? c.fn : c.tn);
    }
  }
  return c;
}

ConfusionCounts confusion(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus, const WordNetDb* db,
                          InputMode mode, bool inclusive) {
  return tally(score_corpus(cfg, corpus, db, mode), labels_of(corpus), cfg.threshold, inclusive);
}

std::vector<SweepRow> sweep_scores(const std::vector<double>& scores, const std::vector<bool>& labels,
                                   const std::vector<double>& thresholds, bool inclusive) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) throw ConfigError("thresholds must be ascending");
  std::vector<SweepRow> rows;
  rows.reserve(thresholds.size());
  for (const double t : thresholds) {
    SweepRow row;
    row.threshold = t;
    row.counts = tally(scores, labels, t, inclusive);
    const auto m = prf(row.counts);
    row.recall = m.recall;
    row.precision = m.precision;
    row.f = m.f;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep(const MethodConfig& cfg, const std::vector<LabeledPair>& corpus,
                            const std::vector<double>& thresholds, const WordNetDb* db, InputMode mode,
                            bool inclusive) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) throw ConfigError("thresholds must be ascending");
  return sweep_scores(score_corpus(cfg, corpus, db, mode), labels_of(corpus), thresholds, inclusive);
}

double cohen_kappa(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  if (a.empty()) throw InputError("kappa needs at least one annotation");
  const auto n = static_cast<double>(a.size());
  std::size_t agree = 0, a_yes = 0, b_yes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    agree += a[i] == b[i];
    a_yes += a[i];
    b_yes += b[i];
  }
  const double po = static_cast<double>(agree) / n;
  const double pa = static_cast<double>(a_yes) / n;
  const double pb = static_cast<double>(b_yes) / n;
  const double pe = pa * pb + (1.0 - pa) * (1.0 - pb);
  if (pe >= 1.0) return agree == a.size() ? 1.0 : 0.0;
  return (po - pe) / (1.0 - pe);
}

std::vector<std::pair<std::string, bool>> parse_annotations(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::string, bool>> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(source, lineno, "expected two tab-separated columns");
    std::string id(trim(std::string_view(line).substr(0, tab)));
    const auto label = parse_label(std::string_view(line).substr(tab + 1));
    if (!label) {
      if (out.empty() && seen.empty() && lineno == 1) continue;  // header
      throw ParseError(source, lineno, "label must be 1/0, true/false, yes/no or t/f");
    }
    if (!seen.insert(id).second) throw DuplicateId(id);
    out.emplace_back(std::move(id), *label);
  }
  return out;
}

std::vector<std::pair<std::string, bool>> load_annotations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path.string());
  return parse_annotations(in, path.string());
}

std::pair<std::vector<bool>, std::vector<bool>> join_annotations(const std::vector<std::pair<std::string, bool>>& a,
                                                                 const std::vector<std::pair<std::string, bool>>& b) {
  std::unordered_map<std::string, bool> by_id(b.begin(), b.end());
  if (by_id.size() != a.size()) throw InputError("annotation files do not cover the same ids");
  std::pair<std::vector<bool>, std::vector<bool>> out;
  for (const auto& [id, label] : a) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw InputError("id '" + id + "' missing from second annotation file");
    out.first.push_back(label);
    out.second.push_back(it->second);
  }
  return out;
}

}  // namespace simrouge
