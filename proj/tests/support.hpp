#pragma once

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "simrouge/preprocess.hpp"
#include "simrouge/text.hpp"
#include "simrouge/wordnet.hpp"

namespace testing_support {

inline std::filesystem::path data_dir() { return SIMROUGE_TEST_DATA; }
inline std::filesystem::path fixture_dir() { return data_dir() / "mini_wordnet"; }

inline const simrouge::WordNetDb& fixture_db() {
  static const simrouge::WordNetDb db = simrouge::WordNetDb::load(fixture_dir());
  return db;
}

// Full WordNet 3.0 if configured and present; SIMROUGE_WORDNET_DIR in the
// environment overrides the configured path.
inline std::optional<std::filesystem::path> full_wordnet_dir() {
  std::filesystem::path dir = SIMROUGE_FULL_WORDNET;
  if (const char* env = std::getenv("SIMROUGE_WORDNET_DIR")) dir = env;
  if (dir.empty() || !std::filesystem::exists(dir / "data.noun")) return std::nullopt;
  return dir;
}

inline simrouge::Sentence plain(const std::string& text) {
  return simrouge::preprocess_sentence(text, simrouge::PreprocessConfig{}, nullptr);
}

inline simrouge::Sentence with_setting(const std::string& text, simrouge::Setting s) {
  return simrouge::preprocess_sentence(text, simrouge::PreprocessConfig::from_setting(s), nullptr);
}

// "word_TAG word_TAG ..."
inline simrouge::Sentence tagged(const std::string& text) {
  return simrouge::preprocess_sentence(text, simrouge::PreprocessConfig::from_setting(simrouge::Setting::NoPre, true),
                                       nullptr, simrouge::InputMode::Pretagged);
}

inline simrouge::Token tok(const std::string& surface, simrouge::Pos pos) { return {surface, pos, std::nullopt}; }

inline std::vector<std::string> words(const simrouge::Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.key());
  return out;
}

}  // namespace testing_support
