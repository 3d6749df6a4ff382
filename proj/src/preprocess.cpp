#include "simrouge/preprocess.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <sstream>

#include "simrouge/errors.hpp"
#include "simrouge/porter.hpp"
#include "simrouge/wordnet.hpp"

namespace simrouge {

namespace detail {
extern const std::string_view kDefaultStopwordsText;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Decodes one UTF-8 sequence at s[i]; returns 0xFFFFFFFF for malformed input
// and advances i past the bytes consumed.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++i;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++i;
    return 0xFFFFFFFF;
  }
  ++i;
  for (int k = 0; k < extra; ++k, ++i) {
    if (i >= s.size() || (static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) return 0xFFFFFFFF;
    cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
  }
  return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'\u2019'; }

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') || (cp >= U'0' && cp <= U'9');
  }
  if (cp == 0xFFFFFFFF) return false;
  if (cp <= 0xBF) return false;                    // C1 controls, Latin-1 punctuation and symbols
  if (cp == 0xD7 || cp == 0xF7) return false;      // multiplication and division signs
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // general punctuation through misc symbols
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return false;
  return true;
}

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x178) return 0xFF;
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) return cp % 2 == 0 ? cp + 1 : cp;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) return cp % 2 == 1 ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

// Normalizes one whitespace-delimited chunk; may return an empty string.
std::string normalize_word(std::string_view chunk) {
  std::vector<char32_t> kept;
  std::size_t i = 0;
  while (i < chunk.size()) {
    const char32_t cp = decode_utf8(chunk, i);
    if (is_word_char(cp)) {
      kept.push_back(fold_case(cp));
    } else if (is_apostrophe(cp)) {
      kept.push_back(U'\'');
    }
  }
  std::string out;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (kept[k] == U'\'') {
      const bool inner = k > 0 && k + 1 < kept.size() && kept[k - 1] != U'\'' && kept[k + 1] != U'\'';
      if (!inner) continue;
    }
    encode_utf8(kept[k], out);
  }
  return out;
}

constexpr std::array<Pos, 4> kLexicalPos = {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv};

}  // namespace

std::vector<std::string> split_sentences(std::string_view text, SplitMode mode) {
  std::vector<std::string> out;
  auto emit = [&out](std::string_view seg) {
    seg = trim(seg);
    if (!seg.empty()) out.emplace_back(seg);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (mode == SplitMode::Line) {
      if (c == '\n') {
        emit(text.substr(start, i - start));
        start = i + 1;
      }
    } else if ((c == '.' || c == '!' || c == '?') && (i + 1 == text.size() || is_space(text[i + 1]))) {
      emit(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < text.size()) emit(text.substr(start));
  return out;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  for (auto chunk : split_whitespace(sentence)) {
    auto word = normalize_word(chunk);
    if (!word.empty()) tokens.push_back(Token{std::move(word), std::nullopt, std::nullopt});
  }
  return tokens;
}

std::vector<Token> tokenize_pretagged(std::string_view sentence) {
  std::vector<Token> tokens;
  for (auto chunk : split_whitespace(sentence)) {
    const auto cut = chunk.rfind('_');
    const auto tag = cut == std::string_view::npos ? std::optional<Pos>{} : parse_pos(chunk.substr(cut + 1));
    if (!tag) throw InputError("pre-tagged word without a valid _POS suffix: " + std::string(chunk));
    auto word = normalize_word(chunk.substr(0, cut));
    if (!word.empty()) tokens.push_back(Token{std::move(word), *tag, std::nullopt});
  }
  return tokens;
}

StopwordSet parse_stopwords(std::istream& in) {
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    std::string word(view);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c; });
    words.insert(std::move(word));
  }
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path.string());
  return parse_stopwords(in);
}

std::string_view default_stopwords_text() { return detail::kDefaultStopwordsText; }

const std::shared_ptr<const StopwordSet>& default_stopwords() {
  static const std::shared_ptr<const StopwordSet> words = [] {
    std::istringstream in{std::string(detail::kDefaultStopwordsText)};
    return std::make_shared<const StopwordSet>(parse_stopwords(in));
  }();
  return words;
}

std::uint64_t stopword_checksum(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Token> remove_stopwords(std::vector<Token> tokens, const StopwordSet& stopwords) {
  std::erase_if(tokens, [&](const Token& t) { return stopwords.contains(t.surface); });
  return tokens;
}

Pos tag_word(std::string_view word, const WordNetDb& db) {
  Pos best = Pos::Other;
  std::size_t best_count = 0;
  for (const Pos pos : kLexicalPos) {
    const auto count = word_synsets(word, pos, db).size();
    if (count > best_count) {
      best = pos;
      best_count = count;
    }
  }
  return best;
}

std::vector<Token> pos_tag(std::vector<Token> tokens, const WordNetDb& db) {
  for (auto& t : tokens) t.pos = tag_word(t.surface, db);
  return tokens;
}

std::string_view setting_flag(Setting s) {
  switch (s) {
    case Setting::NoPre: return "none";
    case Setting::SW: return "sw";
    case Setting::SM: return "sm";
    case Setting::SWSM: return "sw+sm";
  }
  return "none";
}

std::string_view setting_label(Setting s) {
  switch (s) {
    case Setting::NoPre: return "No Pre";
    case Setting::SW: return "SW";
    case Setting::SM: return "SM";
    case Setting::SWSM: return "SW+SM";
  }
  return "No Pre";
}

Setting parse_setting(std::string_view flag) {
  for (const Setting s : {Setting::NoPre, Setting::SW, Setting::SM, Setting::SWSM}) {
    if (setting_flag(s) == flag) return s;
  }
  throw ConfigError("unknown preprocessing setting '" + std::string(flag) + "' (expected none, sw, sm or sw+sm)");
}

PreprocessConfig PreprocessConfig::from_setting(Setting s, bool tag_pos) {
  PreprocessConfig c;
  c.remove_stopwords = s == Setting::SW || s == Setting::SWSM;
  c.apply_stemming = s == Setting::SM || s == Setting::SWSM;
  c.tag_pos = tag_pos;
  return c;
}

Setting PreprocessConfig::setting() const {
  if (remove_stopwords) return apply_stemming ? Setting::SWSM : Setting::SW;
  return apply_stemming ? Setting::SM : Setting::NoPre;
}

Sentence preprocess_sentence(std::string raw, const PreprocessConfig& config, const WordNetDb* db, InputMode mode) {
  std::vector<Token> tokens;
  if (mode == InputMode::Pretagged) {
    tokens = tokenize_pretagged(raw);
    if (!config.tag_pos) {
      for (auto& t : tokens) t.pos.reset();
    }
  } else {
    tokens = tokenize(raw);
    if (config.tag_pos) {
      if (db == nullptr) throw MissingLexicon("POS tagging needs a WordNet lexicon (--wordnet-dir) or --pretagged input");
      tokens = pos_tag(std::move(tokens), *db);
    }
  }
  if (config.remove_stopwords && config.stopwords) tokens = remove_stopwords(std::move(tokens), *config.stopwords);
  if (config.apply_stemming) {
    for (auto& t : tokens) t.stem = porter_stem(t.surface);
  }
  return Sentence{std::move(raw), std::move(tokens)};
}

Document preprocess_document(const std::vector<std::string>& sentences, const PreprocessConfig& config,
                             const WordNetDb* db, InputMode mode) {
  Document doc;
  doc.sentences.reserve(sentences.size());
  for (const auto& s : sentences) doc.sentences.push_back(preprocess_sentence(s, config, db, mode));
  return doc;
}

}  // namespace simrouge
