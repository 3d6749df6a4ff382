#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simrouge/rouge.hpp"
#include "simrouge/text.hpp"

namespace simrouge {

struct SynsetId {
  std::uint32_t offset = 0;
  Pos pos = Pos::Noun;

  bool operator==(const SynsetId&) const = default;
  auto operator<=>(const SynsetId&) const = default;
};

struct SynsetIdHash {
  std::size_t operator()(const SynsetId& id) const noexcept {
    return (static_cast<std::size_t>(id.offset) << 3) ^ static_cast<std::size_t>(id.pos);
  }
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // lowercase, sorted, unique; multi-word lemmas keep underscores
  std::vector<SynsetId> hypernyms;
  std::vector<SynsetId> hyponyms;   // reverse of every hypernym link
};

// Read-only lexicon in the Princeton WordNet 3.0 dict/ layout. Only `@`
// pointers are read; hyponyms are derived from them. Synsets are keyed by
// the offset field, so offsets need not be byte positions.
class WordNetDb {
 public:
  static WordNetDb load(const std::filesystem::path& dir);

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;

  // Synsets of an indexed lemma, in sense order. Empty if not indexed.
  std::span<const SynsetId> lookup(std::string_view lemma, Pos pos) const;
  bool contains(std::string_view lemma, Pos pos) const { return !lookup(lemma, pos).empty(); }

  std::span<const std::string> exceptions(std::string_view form, Pos pos) const;

  std::size_t synset_count() const { return synsets_.size(); }

 private:
  static std::size_t slot(Pos pos);

  std::unordered_map<SynsetId, Synset, SynsetIdHash> synsets_;
  std::array<std::unordered_map<std::string, std::vector<SynsetId>>, 4> index_;
  std::array<std::unordered_map<std::string, std::vector<std::string>>, 4> exceptions_;
};

// Exception list first, then one step of the standard suffix detachment
// rules. Returns the indexed base forms (the form itself first if indexed).
std::vector<std::string> morphy(std::string_view form, Pos pos, const WordNetDb& db);

// Union of the synsets of every morphy() lemma, in sense order.
std::vector<SynsetId> word_synsets(std::string_view form, Pos pos, const WordNetDb& db);

double jaccard_synsets(const Synset& a, const Synset& b);

// Exact (surface, pos) equality scores 1; otherwise the best Jaccard over all
// synset pairs. OTHER-tagged or unfindable words score 0.
double syn_word_sim(const WordNetDb& db, const Token& a, const Token& b);
double syn_word_sentence(const WordNetDb& db, const Token& w, const Sentence& s);
SimilarityScore syn_score(const WordNetDb& db, const Sentence& ref, const Sentence& cand);

enum class Direction { Hypernym, Hyponym };

struct Relation {
  Direction direction;
  int depth;

  bool operator==(const Relation&) const = default;
};

inline constexpr int kMaxRelationDepth = 3;

// Shortest pure chain between a and b of at most max_depth links. The
// direction says what a is to b: Hypernym when b lies below a, Hyponym when
// b lies above a. Same synset is depth 0, reported as Hypernym.
std::optional<Relation> relation_depth(const WordNetDb& db, SynsetId a, SynsetId b,
                                       int max_depth = kMaxRelationDepth);
std::optional<int> relation_depth_along(const WordNetDb& db, SynsetId a, SynsetId b, Direction dir,
                                        int max_depth = kMaxRelationDepth);

struct DepthWeights {
  std::array<double, kMaxRelationDepth + 1> weights{1.0, 0.85, 0.5, 0.2};

  double at(int depth) const {
    return depth >= 0 && depth <= kMaxRelationDepth ? weights[static_cast<std::size_t>(depth)] : 0.0;
  }
  bool valid() const;
};

double rs_word(const WordNetDb& db, const Token& a, const Token& b, const DepthWeights& wt = {});
double rs_word_sentence(const WordNetDb& db, const Token& w, const Sentence& s, const DepthWeights& wt = {});
SimilarityScore rs_score(const WordNetDb& db, const Sentence& ref, const Sentence& cand,
                         const DepthWeights& wt = {});

// Clipped sum of pairwise similarities: the largest total over assignments
// that give each reference word at most one candidate token, a candidate
// token being available as many times as it occurs.
using TokenSimilarity = std::function<double(const Token&, const Token&)>;
double clipped_similarity_sum(const Sentence& ref, const Sentence& cand, const TokenSimilarity& sim);

}  // namespace simrouge
