#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simrouge {

// Coarse tagset shared by the tagger and the WordNet lexicon.
enum class Pos { Noun, Verb, Adj, Adv, Other };

std::string_view pos_name(Pos pos);
std::optional<Pos> parse_pos(std::string_view name);

struct Token {
  std::string surface;
  std::optional<Pos> pos;
  std::optional<std::string> stem;

  // The form that scorers compare: the stem when stemming ran, else the surface.
  const std::string& key() const { return stem ? *stem : surface; }

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool stemmed() const;
  bool tagged() const;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
};

}  // namespace simrouge
