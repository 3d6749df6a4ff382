#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "simrouge/errors.hpp"
#include "simrouge/wordnet.hpp"

namespace simrouge {

namespace {

struct Rule {
  std::string_view suffix;
  std::string_view ending;
};

constexpr Rule kNounRules[] = {{"s", ""},     {"ses", "s"},   {"xes", "x"},   {"zes", "z"},
                               {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
constexpr Rule kVerbRules[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},  {"es", ""},
                               {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
constexpr Rule kAdjRules[] = {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};

std::span<const Rule> rules_for(Pos pos) {
  switch (pos) {
    case Pos::Noun: return kNounRules;
    case Pos::Verb: return kVerbRules;
    case Pos::Adj: return kAdjRules;
    default: return {};
  }
}

void push_unique(std::vector<std::string>& out, std::string s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

bool lexical(const std::optional<Pos>& pos) { return pos && *pos != Pos::Other; }

bool exact_match(const Token& a, const Token& b) { return a.surface == b.surface && a.pos == b.pos; }

// Synsets reachable from `from` within max_depth links in one direction,
// with the shortest depth to each.
std::unordered_map<SynsetId, int, SynsetIdHash> closure(const WordNetDb& db, SynsetId from, Direction dir,
                                                       int max_depth) {
  std::unordered_map<SynsetId, int, SynsetIdHash> depth{{from, 0}};
  std::deque<SynsetId> queue{from};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const int d = depth[cur];
    if (d == max_depth) continue;
    const auto* s = db.find(cur);
    if (s == nullptr) continue;
    for (const auto& next : dir == Direction::Hypernym ? s->hypernyms : s->hyponyms) {
      if (depth.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return depth;
}

// Per-token lexical data, computed once per scoring call.
struct Senses {
  std::vector<SynsetId> synsets;
  std::vector<std::unordered_map<SynsetId, int, SynsetIdHash>> up;
  std::vector<std::unordered_map<SynsetId, int, SynsetIdHash>> down;
};

class SenseCache {
 public:
  SenseCache(const WordNetDb& db, bool with_relations) : db_(db), with_relations_(with_relations) {}

  const Senses& get(const Token& t) {
    const auto key = std::make_pair(t.surface, t.pos.value_or(Pos::Other));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Senses s;
    if (lexical(t.pos)) s.synsets = word_synsets(t.surface, *t.pos, db_);
    if (with_relations_) {
      for (const auto& id : s.synsets) {
        s.up.push_back(closure(db_, id, Direction::Hypernym, kMaxRelationDepth));
        s.down.push_back(closure(db_, id, Direction::Hyponym, kMaxRelationDepth));
      }
    }
    return cache_.emplace(key, std::move(s)).first->second;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::string, Pos>& k) const noexcept {
      return std::hash<std::string>{}(k.first) * 31 + static_cast<std::size_t>(k.second);
    }
  };

  const WordNetDb& db_;
  bool with_relations_;
  std::unordered_map<std::pair<std::string, Pos>, Senses, KeyHash> cache_;
};

double best_jaccard(const WordNetDb& db, const Senses& a, const Senses& b) {
  double best = 0.0;
  for (const auto& x : a.synsets) {
    const auto& sx = db.at(x);
    for (const auto& y : b.synsets) {
      best = std::max(best, jaccard_synsets(sx, db.at(y)));
      if (best >= 1.0) return 1.0;
    }
  }
  return best;
}

double best_relation(const Senses& a, const Senses& b, const DepthWeights& wt) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.synsets.size(); ++i) {
    for (const auto& y : b.synsets) {
      int depth = kMaxRelationDepth + 1;
      if (auto it = a.up[i].find(y); it != a.up[i].end()) depth = std::min(depth, it->second);
      if (auto it = a.down[i].find(y); it != a.down[i].end()) depth = std::min(depth, it->second);
      best = std::max(best, wt.at(depth));
    }
  }
  return best;
}

void require_unstemmed(const Sentence& ref, const Sentence& cand) {
  if (ref.stemmed() || cand.stemmed()) throw StemmingIncompatible();
}

}  // namespace

std::vector<std::string> morphy(std::string_view form, Pos pos, const WordNetDb& db) {
  std::vector<std::string> candidates;
  if (pos == Pos::Other || form.empty()) return candidates;
  candidates.emplace_back(form);
  const auto exc = db.exceptions(form, pos);
  if (!exc.empty()) {
    for (const auto& base : exc) push_unique(candidates, base);
  } else {
    const bool detachable = !(pos == Pos::Noun && (form.size() <= 2 || form.ends_with("ss")));
    if (detachable) {
      for (const auto& rule : rules_for(pos)) {
        if (form.size() > rule.suffix.size() && form.ends_with(rule.suffix)) {
          std::string base(form.substr(0, form.size() - rule.suffix.size()));
          base.append(rule.ending);
          push_unique(candidates, std::move(base));
        }
      }
    }
  }
  std::erase_if(candidates, [&](const std::string& c) { return !db.contains(c, pos); });
  return candidates;
}

std::vector<SynsetId> word_synsets(std::string_view form, Pos pos, const WordNetDb& db) {
  std::vector<SynsetId> out;
  for (const auto& lemma : morphy(form, pos, db)) {
    for (const auto& id : db.lookup(lemma, pos)) {
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
  }
  return out;
}

double jaccard_synsets(const Synset& a, const Synset& b) {
  std::size_t shared = 0;
  auto i = a.lemmas.begin();
  auto j = b.lemmas.begin();
  while (i != a.lemmas.end() && j != b.lemmas.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  const std::size_t total = a.lemmas.size() + b.lemmas.size() - shared;
  return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total);
}

double syn_word_sim(const WordNetDb& db, const Token& a, const Token& b) {
  if (exact_match(a, b)) return 1.0;
  if (!lexical(a.pos) || !lexical(b.pos)) return 0.0;
  SenseCache cache(db, false);
  return best_jaccard(db, cache.get(a), cache.get(b));
}

double syn_word_sentence(const WordNetDb& db, const Token& w, const Sentence& s) {
  double best = 0.0;
  for (const auto& t : s.tokens) {
    best = std::max(best, syn_word_sim(db, w, t));
    if (best >= 1.0) break;
  }
  return best;
}

SimilarityScore syn_score(const WordNetDb& db, const Sentence& ref, const Sentence& cand) {
  require_unstemmed(ref, cand);
  SenseCache cache(db, false);
  const auto sum = clipped_similarity_sum(ref, cand, [&](const Token& a, const Token& b) {
    if (exact_match(a, b)) return 1.0;
    if (!lexical(a.pos) || !lexical(b.pos)) return 0.0;
    return best_jaccard(db, cache.get(a), cache.get(b));
  });
  return SimilarityScore::from_ratio(sum, static_cast<double>(ref.size()), static_cast<double>(cand.size()));
}

std::optional<int> relation_depth_along(const WordNetDb& db, SynsetId a, SynsetId b, Direction dir, int max_depth) {
  // a is b's hypernym when b lies below a.
  const auto reach = closure(db, a, dir == Direction::Hypernym ? Direction::Hyponym : Direction::Hypernym, max_depth);
  auto it = reach.find(b);
  if (it == reach.end()) return std::nullopt;
  return it->second;
}

std::optional<Relation> relation_depth(const WordNetDb& db, SynsetId a, SynsetId b, int max_depth) {
  if (a == b) return Relation{Direction::Hypernym, 0};
  const auto up = relation_depth_along(db, a, b, Direction::Hypernym, max_depth);
  const auto down = relation_depth_along(db, a, b, Direction::Hyponym, max_depth);
  if (up && (!down || *up <= *down)) return Relation{Direction::Hypernym, *up};
  if (down) return Relation{Direction::Hyponym, *down};
  return std::nullopt;
}

bool DepthWeights::valid() const {
  if (weights[0] != 1.0) return false;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (weights[i] > weights[i - 1] || weights[i] < 0.0) return false;
  }
  return true;
}

double rs_word(const WordNetDb& db, const Token& a, const Token& b, const DepthWeights& wt) {
  if (exact_match(a, b)) return 1.0;
  if (!lexical(a.pos) || !lexical(b.pos)) return 0.0;
  SenseCache cache(db, true);
  return best_relation(cache.get(a), cache.get(b), wt);
}

double rs_word_sentence(const WordNetDb& db, const Token& w, const Sentence& s, const DepthWeights& wt) {
  double best = 0.0;
  for (const auto& t : s.tokens) {
    best = std::max(best, rs_word(db, w, t, wt));
    if (best >= 1.0) break;
  }
  return best;
}

SimilarityScore rs_score(const WordNetDb& db, const Sentence& ref, const Sentence& cand, const DepthWeights& wt) {
  require_unstemmed(ref, cand);
  SenseCache cache(db, true);
  const auto sum = clipped_similarity_sum(ref, cand, [&](const Token& a, const Token& b) {
    if (exact_match(a, b)) return 1.0;
    if (!lexical(a.pos) || !lexical(b.pos)) return 0.0;
    return best_relation(cache.get(a), cache.get(b), wt);
  });
  return SimilarityScore::from_ratio(sum, static_cast<double>(ref.size()), static_cast<double>(cand.size()));
}

double clipped_similarity_sum(const Sentence& ref, const Sentence& cand, const TokenSimilarity& sim) {
  // Similarities are computed once per distinct candidate token; every
  // occurrence then becomes its own column.
  std::vector<const Token*> distinct;
  std::vector<std::size_t> column_of;
  for (const auto& t : cand.tokens) {
    auto it = std::find_if(distinct.begin(), distinct.end(), [&](const Token* d) { return exact_match(*d, t); });
    column_of.push_back(static_cast<std::size_t>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(&t);
  }

  const std::size_t p = ref.tokens.size();
  const std::size_t q = cand.tokens.size();
  if (p == 0 || q == 0) return 0.0;
  std::vector<double> by_distinct(p * distinct.size());
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) by_distinct[i * distinct.size() + j] = sim(ref.tokens[i], *distinct[j]);
  }
  auto weight = [&](std::size_t i, std::size_t j) { return by_distinct[i * distinct.size() + column_of[j]]; };

  // Maximum-weight assignment (Hungarian method with potentials) over the
  // shorter side as rows.
  const bool ref_rows = p <= q;
  const std::size_t n = ref_rows ? p : q;
  const std::size_t m = ref_rows ? q : p;
  auto cost = [&](std::size_t r, std::size_t c) { return -(ref_rows ? weight(r, c) : weight(c, r)); };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  for (std::size_t r = 1; r <= n; ++r) {
    owner[0] = r;
    std::size_t c0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[c0] = true;
      const std::size_t r0 = owner[c0];
      double delta = kInf;
      std::size_t c1 = 0;
      for (std::size_t c = 1; c <= m; ++c) {
        if (used[c]) continue;
        const double cur = cost(r0 - 1, c - 1) - u[r0] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = c0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          c1 = c;
        }
      }
      for (std::size_t c = 0; c <= m; ++c) {
        if (used[c]) {
          u[owner[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      c0 = c1;
    } while (owner[c0] != 0);
    do {
      const std::size_t c1 = way[c0];
      owner[c0] = owner[c1];
      c0 = c1;
    } while (c0 != 0);
  }

  double sum = 0.0;
  for (std::size_t c = 1; c <= m; ++c) {
    if (owner[c] != 0) sum -= cost(owner[c] - 1, c - 1);
  }
  return sum;
}

}  // namespace simrouge
