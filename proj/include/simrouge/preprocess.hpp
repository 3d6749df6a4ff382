#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "simrouge/text.hpp"

namespace simrouge {

class WordNetDb;

enum class SplitMode { Terminator, Line };

// Terminator mode splits after `.`, `!` or `?` when followed by whitespace or
// the end of input; line mode splits on newlines. Segments are trimmed and
// empty ones dropped.
std::vector<std::string> split_sentences(std::string_view text, SplitMode mode);

// Whitespace split, punctuation removal and lowercasing. Non-alphanumeric
// characters are stripped except apostrophes between two kept characters.
// Non-ASCII letters are kept and case-folded for Latin-1, Latin Extended-A,
// Greek and Cyrillic.
std::vector<Token> tokenize(std::string_view sentence);

// Same as tokenize() for input whose words carry a `_NOUN`, `_VERB`, `_ADJ`,
// `_ADV` or `_OTHER` suffix. Throws InputError when a word has no valid tag.
std::vector<Token> tokenize_pretagged(std::string_view sentence);

using StopwordSet = std::unordered_set<std::string>;

// One word per line; `#` starts a comment; words are lowercased.
StopwordSet parse_stopwords(std::istream& in);
StopwordSet load_stopwords(const std::filesystem::path& path);

// The bundled SMART list (data/stopwords_smart.txt).
const std::shared_ptr<const StopwordSet>& default_stopwords();
std::string_view default_stopwords_text();

// FNV-1a 64 over the raw bytes of a stopword file.
std::uint64_t stopword_checksum(std::string_view text);

std::vector<Token> remove_stopwords(std::vector<Token> tokens, const StopwordSet& stopwords);

// Tags each token with the WordNet category holding the most synsets for it
// (after morphological reduction); ties go NOUN > VERB > ADJ > ADV, and words
// absent from the lexicon become OTHER.
std::vector<Token> pos_tag(std::vector<Token> tokens, const WordNetDb& db);
Pos tag_word(std::string_view word, const WordNetDb& db);

enum class Setting { NoPre, SW, SM, SWSM };

std::string_view setting_flag(Setting s);     // none, sw, sm, sw+sm
std::string_view setting_label(Setting s);    // No Pre, SW, SM, SW+SM
Setting parse_setting(std::string_view flag);  // throws ConfigError

struct PreprocessConfig {
  bool remove_stopwords = false;
  bool apply_stemming = false;
  bool tag_pos = false;
  std::shared_ptr<const StopwordSet> stopwords = default_stopwords();

  static PreprocessConfig from_setting(Setting s, bool tag_pos = false);
  Setting setting() const;
};

enum class InputMode { Plain, Pretagged };

// Runs tokenization, POS tagging, stopword removal and stemming in that
// order, skipping disabled steps. Throws MissingLexicon when tagging is
// requested for plain input without a lexicon.
Sentence preprocess_sentence(std::string raw, const PreprocessConfig& config, const WordNetDb* db,
                             InputMode mode = InputMode::Plain);

Document preprocess_document(const std::vector<std::string>& sentences, const PreprocessConfig& config,
                             const WordNetDb* db, InputMode mode = InputMode::Plain);

}  // namespace simrouge
