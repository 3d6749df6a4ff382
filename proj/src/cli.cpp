#include "simrouge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "simrouge/engine.hpp"
#include "simrouge/errors.hpp"
#include "simrouge/eval.hpp"
#include "simrouge/report.hpp"

namespace simrouge {

namespace {

struct Options {
  std::string method = "unigram";
  std::string methods = "unigram,bigram,trigram,fourgram,lcs,skip-bigram";
  std::string preprocess = "none";
  double threshold = 0.0;
  std::vector<CLI::Option*> threshold_opts;
  int d = SkipConfig{}.d;
  std::string wordnet_dir;
  bool pretagged = false;
  bool stem = false;
  std::string stopwords;
  std::string format;
  std::size_t top_k = 5;
  std::string sentence_mode = "terminator";
  bool paired = false;
  std::string thresholds = "0.0:1.0:0.1";
  bool inclusive = false;

  // positionals
  std::string first;
  std::string second;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool threshold_given(const Options& o) {
  return std::any_of(o.threshold_opts.begin(), o.threshold_opts.end(), [](const CLI::Option* opt) { return opt->count() > 0; });
}

InputMode input_mode(const Options& o) { return o.pretagged ? InputMode::Pretagged : InputMode::Plain; }

std::vector<MethodConfig> build_configs(const std::vector<std::string>& names, const Options& o) {
  std::shared_ptr<const StopwordSet> stopwords;
  if (!o.stopwords.empty()) stopwords = std::make_shared<const StopwordSet>(load_stopwords(o.stopwords));

  std::vector<MethodConfig> cfgs;
  for (const auto& name : names) {
    const auto m = parse_method(name);
    for (const auto& c : cfgs) {
      if (c.method == m) throw ConfigError("method '" + name + "' given twice");
    }
    auto cfg = default_config(m);
    cfg.preprocess = PreprocessConfig::from_setting(parse_setting(o.preprocess));
    if (o.stem) cfg.preprocess.apply_stemming = true;
    if (stopwords) cfg.preprocess.stopwords = stopwords;
    if (threshold_given(o)) cfg.threshold = o.threshold;
    cfg.skip.d = o.d;
    cfgs.push_back(std::move(cfg));
  }
  if (cfgs.empty()) throw ConfigError("no methods given");

  // Everything except lexicon presence is checked before any file is read.
  static const WordNetDb kNoLexicon{};
  for (const auto& cfg : cfgs) cfg.validate(&kNoLexicon, input_mode(o));
  return cfgs;
}

// Loads the lexicon only when some method needs it; without a directory
// the configs fail validation with MissingLexicon.
std::unique_ptr<WordNetDb> open_lexicon(const std::vector<MethodConfig>& cfgs, const Options& o) {
  const bool needed = std::any_of(cfgs.begin(), cfgs.end(), [&](const MethodConfig& c) {
    return uses_wordnet(c.method) || (needs_pos(c.method) && !o.pretagged);
  });
  std::unique_ptr<WordNetDb> db;
  if (needed) {
    std::string dir = o.wordnet_dir;
    if (dir.empty()) {
      if (const char* env = std::getenv("SIMROUGE_WORDNET_DIR")) dir = env;
    }
    if (!dir.empty()) db = std::make_unique<WordNetDb>(WordNetDb::load(dir));
  }
  for (const auto& cfg : cfgs) cfg.validate(db.get(), input_mode(o));
  return db;
}

std::string fixed(double x, int places) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(places);
  s << round_to(x, places);
  return s.str();
}

std::string cmd_pair(const Options& o) {
  const auto cfgs = build_configs({o.method}, o);
  const auto db = open_lexicon(cfgs, o);
  const auto& cfg = cfgs.front();
  const auto pre = cfg.effective_preprocess();
  const auto mode = input_mode(o);
  const auto s = score_pair(cfg, preprocess_sentence(o.first, pre, db.get(), mode),
                            preprocess_sentence(o.second, pre, db.get(), mode), db.get());
  const bool flagged = s.f > cfg.threshold;

  std::ostringstream out;
  if (o.format == "text") {
    out << method_name(cfg.method) << " (" << setting_label(cfg.preprocess.setting()) << ", threshold "
        << fixed(cfg.threshold, 2) << "): R " << fixed(s.recall, 2) << "  P " << fixed(s.precision, 2) << "  F "
        << fixed(s.f, 2) << (flagged ? "  flagged" : "") << '\n';
  } else if (o.format == "tsv") {
    out << "method\tsetting\tthreshold\tr\tp\tf\tflagged\n"
        << method_name(cfg.method) << '\t' << setting_flag(cfg.preprocess.setting()) << '\t' << fixed(cfg.threshold, 4)
        << '\t' << fixed(s.recall, 4) << '\t' << fixed(s.precision, 4) << '\t' << fixed(s.f, 4) << '\t'
        << (flagged ? 1 : 0) << '\n';
  } else {
    nlohmann::ordered_json j = {{"method", method_name(cfg.method)},
                                {"setting", setting_flag(cfg.preprocess.setting())},
                                {"threshold", cfg.threshold},
                                {"r", round_to(s.recall, 4)},
                                {"p", round_to(s.precision, 4)},
                                {"f", round_to(s.f, 4)},
                                {"flagged", flagged}};
    out << j.dump(2) << '\n';
  }
  return out.str();
}

ComparisonReport paired_report(const MethodConfig& cfg, const std::vector<SimilarityScore>& scores) {
  ComparisonReport report;
  report.method = cfg.method;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    RefMatches row;
    row.ref_index = i;
    const bool flagged = scores[i].f > cfg.threshold;
    row.matches.push_back({i, scores[i], flagged});
    if (flagged) row.flagged_cands.push_back(i);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string cmd_compare(const Options& o) {
  if (o.top_k < 1) throw ConfigError("--top-k must be >= 1");
  const auto cfgs = build_configs(split_list(o.methods), o);
  const auto split = o.sentence_mode == "line" ? SplitMode::Line : SplitMode::Terminator;
  const auto ref = split_sentences(read_file(o.first), split);
  const auto cand = split_sentences(read_file(o.second), split);
  const auto db = open_lexicon(cfgs, o);

  std::vector<ComparisonReport> reports;
  if (o.paired) {
    for (const auto& cfg : cfgs) {
      reports.push_back(paired_report(cfg, compare_corresponding(cfg, ref, cand, db.get(), input_mode(o))));
    }
  } else {
    reports = compare_documents(cfgs, ref, cand, o.top_k, db.get(), input_mode(o));
  }
  if (o.format == "tsv") return reports_to_tsv(reports);
  if (o.format == "text") return reports_to_text(reports, cfgs);
  return reports_to_json(reports);
}

std::string cmd_sweep(const Options& o) {
  const auto thresholds = parse_thresholds(o.thresholds);
  const auto cfgs = build_configs({o.method}, o);
  const auto corpus = load_corpus(o.first);
  const auto db = open_lexicon(cfgs, o);
  const auto rows = sweep(cfgs.front(), corpus, thresholds, db.get(), input_mode(o), o.inclusive);
  return o.format == "json" ? sweep_to_json(rows) : sweep_to_tsv(rows);
}

std::string cmd_kappa(const Options& o) {
  const auto [a, b] = join_annotations(load_annotations(o.first), load_annotations(o.second));
  return fixed(cohen_kappa(a, b), 3) + "\n";
}

std::string cmd_settings(const Options& o) {
  std::ostringstream out;
  if (o.format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const auto& r : recommended_settings()) {
      j.push_back({{"method", method_name(r.method)}, {"setting", setting_flag(r.setting)}, {"threshold", r.threshold}});
    }
    out << j.dump(2) << '\n';
  } else if (o.format == "tsv") {
    out << "method\tsetting\tthreshold\n";
    for (const auto& r : recommended_settings()) {
      out << method_name(r.method) << '\t' << setting_flag(r.setting) << '\t' << fixed(r.threshold, 2) << '\n';
    }
  } else {
    for (const auto& r : recommended_settings()) {
      std::string name(method_name(r.method));
      name.resize(14, ' ');
      std::string label(setting_label(r.setting));
      label.resize(8, ' ');
      out << name << label << fixed(r.threshold, 2) << '\n';
    }
  }
  return out.str();
}

void add_scoring_flags(CLI::App* sub, Options& o) {
  sub->add_option("--preprocess", o.preprocess, "none, sw, sm or sw+sm");
  o.threshold_opts.push_back(
      sub->add_option("--threshold", o.threshold, "Flagging threshold (default: recommended)")->check(CLI::Range(0.0, 1.0)));
  sub->add_option("--d", o.d, "Skip distance for skip-bigram")->check(CLI::NonNegativeNumber);
  sub->add_option("--wordnet-dir", o.wordnet_dir, "WordNet dict directory (or SIMROUGE_WORDNET_DIR)");
  sub->add_flag("--pretagged", o.pretagged, "Words carry _NOUN/_VERB/_ADJ/_ADV/_OTHER tags");
  sub->add_flag("--stem", o.stem, "Apply stemming in addition to --preprocess");
  sub->add_option("--stopwords", o.stopwords, "Stopword file, one word per line");
}

}  // namespace

std::vector<double> parse_thresholds(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("bad threshold '" + s + "'");
    if (v < 0.0 || v > 1.0) throw ConfigError("threshold " + s + " is outside [0, 1]");
    return v;
  };

  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw ConfigError("threshold range must be start:stop:step");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    std::size_t used = 0;
    double step = 0.0;
    try {
      step = std::stod(parts[2], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[2].size() || !(step > 0.0)) throw ConfigError("threshold step must be > 0");
    for (std::size_t k = 0;; ++k) {
      const double t = round_to(start + static_cast<double>(k) * step, 10);
      if (t > stop + 1e-9) break;
      out.push_back(std::min(t, 1.0));
    }
  } else {
    for (const auto& s : split_list(spec)) out.push_back(number(s));
  }
  if (out.empty()) throw ConfigError("no thresholds given");
  std::sort(out.begin(), out.end());
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sentence-level plagiarism scoring with n-gram, LCS, skip-bigram and WordNet measures", "simrouge"};
  app.require_subcommand(1);
  Options o;

  auto* pair = app.add_subcommand("pair", "Score one reference sentence against one candidate");
  pair->add_option("reference", o.first, "Reference sentence")->required();
  pair->add_option("candidate", o.second, "Candidate sentence")->required();
  pair->add_option("--method", o.method, "Scoring method");
  add_scoring_flags(pair, o);
  pair->add_option("--format", o.format, "json, text or tsv")->check(CLI::IsMember({"json", "text", "tsv"}));

  auto* compare = app.add_subcommand("compare", "Score every reference sentence against every candidate sentence");
  compare->add_option("reference", o.first, "Reference document")->required();
  compare->add_option("candidate", o.second, "Candidate document")->required();
  compare->add_option("--methods,--method", o.methods, "Comma-separated methods");
  add_scoring_flags(compare, o);
  compare->add_option("--top-k", o.top_k, "Matches kept per reference sentence");
  compare->add_option("--sentence-mode", o.sentence_mode, "terminator or line")
      ->check(CLI::IsMember({"terminator", "line"}));
  compare->add_flag("--paired", o.paired, "Compare sentence i with sentence i only");
  compare->add_option("--format", o.format, "json, text or tsv")->check(CLI::IsMember({"json", "text", "tsv"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Confusion counts and R/P/F over a labelled corpus");
  sweep_cmd->add_option("corpus", o.first, "JSON Lines corpus")->required();
  sweep_cmd->add_option("--method", o.method, "Scoring method");
  add_scoring_flags(sweep_cmd, o);
  sweep_cmd->add_option("--thresholds", o.thresholds, "start:stop:step or comma list");
  sweep_cmd->add_flag("--inclusive", o.inclusive, "Flag scores equal to the threshold");
  sweep_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json", "text"}));

  auto* kappa = app.add_subcommand("kappa", "Cohen's kappa between two annotation files");
  kappa->add_option("first", o.first, "TSV with id and label")->required();
  kappa->add_option("second", o.second, "TSV with id and label")->required();

  auto* settings = app.add_subcommand("settings", "Print the recommended setting and threshold per method");
  settings->add_option("--format", o.format, "text, tsv or json")->check(CLI::IsMember({"json", "text", "tsv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  }

  try {
    std::string result;
    if (pair->parsed()) {
      result = cmd_pair(o);
    } else if (compare->parsed()) {
      result = cmd_compare(o);
    } else if (sweep_cmd->parsed()) {
      result = cmd_sweep(o);
    } else if (kappa->parsed()) {
      result = cmd_kappa(o);
    } else {
      result = cmd_settings(o);
    }
    out << result;
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace simrouge
