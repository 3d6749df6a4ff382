#include "simrouge/text.hpp"

#include <algorithm>
#include <array>

namespace simrouge {

namespace {
constexpr std::array<std::string_view, 5> kPosNames = {"NOUN", "VERB", "ADJ", "ADV", "OTHER"};
}

std::string_view pos_name(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<Pos> parse_pos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

bool Sentence::stemmed() const {
  return std::any_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.stem.has_value(); });
}

bool Sentence::tagged() const {
  return std::all_of(tokens.begin(), tokens.end(), [](const Token& t) { return t.pos.has_value(); });
}

}  // namespace simrouge
