// Serial vs OpenMP scoring of an M x N sentence grid and a paired corpus.
//   simrouge_bench [sentences] [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "simrouge/engine.hpp"
#include "simrouge/eval.hpp"

using namespace simrouge;

namespace {

std::vector<std::string> synthetic_sentences(std::size_t count, std::mt19937& rng) {
  static const char* vocab[] = {"the",   "cat",    "sat",   "on",    "mat",     "police", "killed", "gunman",
                                "brown", "dwarfs", "rank",  "among", "elusive", "objects", "in",     "universe",
                                "rise",  "of",     "industry", "growth", "cities", "and",  "population", "great"};
  std::uniform_int_distribution<std::size_t> word(0, std::size(vocab) - 1);
  std::uniform_int_distribution<int> length(6, 30);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    for (int k = length(rng); k > 0; --k) {
      if (!s.empty()) s += ' ';
      s += vocab[word(rng)];
    }
    out.push_back(std::move(s));
  }
  return out;
}

template <typename F>
double best_ms(int reps, F f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::mt19937 rng(7);
  const auto ref_raw = synthetic_sentences(n, rng);
  const auto cand_raw = synthetic_sentences(n, rng);

  std::printf("threads %d, %zu x %zu sentences, best of %d\n", omp_get_max_threads(), n, n, reps);
  std::printf("%-12s %12s %12s %8s %s\n", "method", "serial ms", "omp ms", "speedup", "equal");

  int failures = 0;
  for (const auto m : {MethodId::Unigram, MethodId::Bigram, MethodId::FourGram, MethodId::LCS, MethodId::SkipBigram}) {
    auto cfg = default_config(m);
    cfg.preprocess = PreprocessConfig::from_setting(Setting::NoPre);
    const auto ref = preprocess_document(ref_raw, cfg.preprocess, nullptr);
    const auto cand = preprocess_document(cand_raw, cfg.preprocess, nullptr);
    ScoreMatrix serial, parallel;
    const double ts = best_ms(reps, [&] { serial = score_matrix_serial(cfg, ref, cand, nullptr); });
    const double tp = best_ms(reps, [&] { parallel = score_matrix(cfg, ref, cand, nullptr); });
    const bool equal = serial == parallel;
    failures += !equal;
    std::printf("%-12s %12.2f %12.2f %8.2f %s\n", std::string(method_name(m)).c_str(), ts, tp, ts / tp,
                equal ? "yes" : "NO");
  }

  std::vector<LabeledPair> corpus;
  for (std::size_t i = 0; i < n; ++i) corpus.push_back({std::to_string(i), ref_raw[i], cand_raw[i], i % 3 == 0});
  const auto cfg = default_config(MethodId::LCS);
  std::vector<double> serial, parallel;
  const double ts = best_ms(reps, [&] { serial = score_corpus_serial(cfg, corpus, nullptr); });
  const double tp = best_ms(reps, [&] { parallel = score_corpus(cfg, corpus, nullptr); });
  failures += serial != parallel;
  std::printf("%-12s %12.2f %12.2f %8.2f %s\n", "corpus-lcs", ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  return failures == 0 ? 0 : 1;
}
