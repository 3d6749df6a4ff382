#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <unordered_map>

#include "simrouge/errors.hpp"
#include "simrouge/wordnet.hpp"

namespace simrouge {

namespace {

constexpr std::array<std::pair<Pos, const char*>, 4> kFiles = {
    {{Pos::Noun, "noun"}, {Pos::Verb, "verb"}, {Pos::Adj, "adj"}, {Pos::Adv, "adv"}}};

std::optional<Pos> pos_from_code(std::string_view code) {
  if (code == "n") return Pos::Noun;
  if (code == "v") return Pos::Verb;
  if (code == "a" || code == "s") return Pos::Adj;
  if (code == "r") return Pos::Adv;
  return std::nullopt;
}

// Whitespace tokenizer over one line.
class Fields {
 public:
  explicit Fields(std::string_view line) : line_(line) {}

  std::optional<std::string_view> next() {
    while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
    if (pos_ >= line_.size()) return std::nullopt;
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ') ++pos_;
    return line_.substr(start, pos_ - start);
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
};

class LineParser {
 public:
  LineParser(std::string source, std::size_t line, std::string_view text)
      : source_(std::move(source)), line_(line), fields_(text) {}

  std::optional<std::string_view> maybe_word() { return fields_.next(); }

  std::string_view word(const char* what) {
    auto f = fields_.next();
    if (!f) fail(std::string("missing ") + what);
    return *f;
  }

  std::uint32_t number(const char* what, int base = 10) {
    const auto f = word(what);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value, base);
    if (ec != std::errc{} || ptr != f.data() + f.size()) fail(std::string("bad ") + what + " '" + std::string(f) + "'");
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

 private:
  std::string source_;
  std::size_t line_;
  Fields fields_;
};

std::string lower_lemma(std::string_view word) {
  // Adjective markers such as (a), (p) and (ip) are not part of the lemma.
  if (const auto paren = word.find('('); paren != std::string_view::npos && word.back() == ')') {
    word = word.substr(0, paren);
  }
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c; });
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path.string());
  return in;
}

bool is_header(const std::string& line) { return line.size() >= 2 && line[0] == ' ' && line[1] == ' '; }

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

struct PendingLink {
  SynsetId from;
  SynsetId to;
  std::string source;
  std::size_t line;
};

}  // namespace

std::size_t WordNetDb::slot(Pos pos) {
  switch (pos) {
    case Pos::Noun: return 0;
    case Pos::Verb: return 1;
    case Pos::Adj: return 2;
    case Pos::Adv: return 3;
    case Pos::Other: break;
  }
  return 4;
}

WordNetDb WordNetDb::load(const std::filesystem::path& dir) {
  for (const auto& [pos, name] : kFiles) {
    for (const auto& file : {std::string("data.") + name, std::string("index.") + name, std::string(name) + ".exc"}) {
      if (!std::filesystem::is_regular_file(dir / file)) throw MissingFile((dir / file).string());
    }
  }

  WordNetDb db;
  std::vector<PendingLink> links;

  for (const auto& [file_pos, name] : kFiles) {
    const auto path = dir / (std::string("data.") + name);
    auto in = open_or_throw(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      strip_cr(line);
      if (line.empty() || is_header(line)) continue;
      std::string_view body = line;
      if (const auto bar = body.find(" | "); bar != std::string_view::npos) body = body.substr(0, bar);
      LineParser p(path.string(), lineno, body);

      Synset s;
      s.id.offset = p.number("synset offset");
      p.number("lex_filenum");
      const auto ss_type = pos_from_code(p.word("ss_type"));
      if (!ss_type || *ss_type != file_pos) p.fail("synset type does not match file");
      s.id.pos = *ss_type;
      const auto w_cnt = p.number("w_cnt", 16);
      if (w_cnt == 0) p.fail("synset without lemmas");
      for (std::uint32_t i = 0; i < w_cnt; ++i) {
        s.lemmas.push_back(lower_lemma(p.word("word")));
        p.word("lex_id");
      }
      std::sort(s.lemmas.begin(), s.lemmas.end());
      s.lemmas.erase(std::unique(s.lemmas.begin(), s.lemmas.end()), s.lemmas.end());

      const auto p_cnt = p.number("p_cnt");
      for (std::uint32_t i = 0; i < p_cnt; ++i) {
        const auto symbol = p.word("pointer symbol");
        const auto target = p.number("pointer offset");
        const auto target_pos = pos_from_code(p.word("pointer pos"));
        if (!target_pos) p.fail("bad pointer pos");
        p.word("source/target");
        if (symbol == "@") {
          const SynsetId to{target, *target_pos};
          s.hypernyms.push_back(to);
          links.push_back({s.id, to, path.string(), lineno});
        }
      }
      const auto id = s.id;
      if (!db.synsets_.emplace(id, std::move(s)).second) p.fail("duplicate synset offset");
    }
  }

  for (const auto& link : links) {
    auto it = db.synsets_.find(link.to);
    if (it == db.synsets_.end()) throw ParseError(link.source, link.line, "hypernym pointer does not resolve");
    it->second.hyponyms.push_back(link.from);
  }

  for (const auto& [file_pos, name] : kFiles) {
    const auto path = dir / (std::string("index.") + name);
    auto in = open_or_throw(path);
    auto& index = db.index_[slot(file_pos)];
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      strip_cr(line);
      if (line.empty() || is_header(line)) continue;
      LineParser p(path.string(), lineno, line);
      auto lemma = lower_lemma(p.word("lemma"));
      const auto pos = pos_from_code(p.word("pos"));
      if (!pos || *pos != file_pos) p.fail("index pos does not match file");
      const auto synset_cnt = p.number("synset_cnt");
      const auto p_cnt = p.number("p_cnt");
      for (std::uint32_t i = 0; i < p_cnt; ++i) p.word("pointer symbol");
      p.number("sense_cnt");
      p.number("tagsense_cnt");
      std::vector<SynsetId> ids;
      ids.reserve(synset_cnt);
      for (std::uint32_t i = 0; i < synset_cnt; ++i) {
        const SynsetId id{p.number("synset offset"), file_pos};
        if (!db.synsets_.contains(id)) p.fail("index entry does not resolve to a synset");
        ids.push_back(id);
      }
      index[std::move(lemma)] = std::move(ids);
    }
  }

  for (const auto& [file_pos, name] : kFiles) {
    const auto path = dir / (std::string(name) + ".exc");
    auto in = open_or_throw(path);
    auto& exc = db.exceptions_[slot(file_pos)];
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      strip_cr(line);
      if (line.empty()) continue;
      LineParser p(path.string(), lineno, line);
      auto form = lower_lemma(p.word("inflected form"));
      auto& bases = exc[form];
      bases.push_back(lower_lemma(p.word("base form")));
      while (const auto more = p.maybe_word()) bases.push_back(lower_lemma(*more));
    }
  }

  return db;
}

const Synset* WordNetDb::find(SynsetId id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& WordNetDb::at(SynsetId id) const {
  const auto* s = find(id);
  if (s == nullptr) throw Error("unknown synset " + std::to_string(id.offset));
  return *s;
}

std::span<const SynsetId> WordNetDb::lookup(std::string_view lemma, Pos pos) const {
  const auto k = slot(pos);
  if (k >= index_.size()) return {};
  auto it = index_[k].find(std::string(lemma));
  if (it == index_[k].end()) return {};
  return it->second;
}

std::span<const std::string> WordNetDb::exceptions(std::string_view form, Pos pos) const {
  const auto k = slot(pos);
  if (k >= exceptions_.size()) return {};
  auto it = exceptions_[k].find(std::string(form));
  if (it == exceptions_[k].end()) return {};
  return it->second;
}

}  // namespace simrouge
