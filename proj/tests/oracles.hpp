#pragma once
// Deliberately naive re-derivations used as test oracles. Nothing here calls
// into the library's scoring code.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simrouge/wordnet.hpp"

namespace oracle {

using Words = std::vector<std::string>;

inline bool is_subsequence(const Words& sub, const Words& seq) {
  std::size_t k = 0;
  for (const auto& w : seq) {
    if (k < sub.size() && sub[k] == w) ++k;
  }
  return k == sub.size();
}

// Tries every subsequence of a.
inline std::size_t lcs_brute(const Words& a, const Words& b) {
  std::size_t best = 0;
  const std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Words sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && is_subsequence(sub, b)) best = sub.size();
  }
  return best;
}

inline std::size_t skip_pairs_enumerated(std::size_t len, int d) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (j - i - 1 <= static_cast<std::size_t>(d)) ++count;
    }
  }
  return count;
}

inline std::vector<std::pair<std::string, std::string>> skip_pairs(const Words& w, int d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size() && j - i - 1 <= static_cast<std::size_t>(d); ++j) {
      out.emplace_back(w[i], w[j]);
    }
  }
  return out;
}

template <typename T>
std::size_t clipped(const std::vector<T>& ref, const std::vector<T>& cand) {
  std::map<T, std::size_t> rc, cc;
  for (const auto& x : ref) ++rc[x];
  for (const auto& x : cand) ++cc[x];
  std::size_t total = 0;
  for (const auto& [k, v] : rc) {
    auto it = cc.find(k);
    if (it != cc.end()) total += std::min(v, it->second);
  }
  return total;
}

inline std::vector<Words> ngrams(const Words& w, std::size_t n) {
  std::vector<Words> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace_back(w.begin() + i, w.begin() + i + n);
  return out;
}

inline double f_measure(double matched, double ref_total, double cand_total) {
  const double r = ref_total > 0 ? matched / ref_total : 0.0;
  const double p = cand_total > 0 ? matched / cand_total : 0.0;
  return r + p > 0 ? 2 * r * p / (r + p) : 0.0;
}

inline double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end()), u = sa;
  u.insert(sb.begin(), sb.end());
  std::size_t both = 0;
  for (const auto& x : sa) both += sb.count(x);
  return u.empty() ? 0.0 : static_cast<double>(both) / static_cast<double>(u.size());
}

// Minimum number of hypernym links from `from` up to `to`, -1 if none
// within max_depth.
inline int up_distance(const simrouge::WordNetDb& db, simrouge::SynsetId from, simrouge::SynsetId to, int max_depth) {
  std::deque<std::pair<simrouge::SynsetId, int>> queue{{from, 0}};
  std::set<simrouge::SynsetId> seen{from};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (cur == to) return d;
    if (d == max_depth) continue;
    for (const auto& h : db.at(cur).hypernyms) {
      if (seen.insert(h).second) queue.emplace_back(h, d + 1);
    }
  }
  return -1;
}

inline double kappa(const std::vector<bool>& a, const std::vector<bool>& b) {
  double n11 = 0, n10 = 0, n01 = 0, n00 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) ++n11;
    else if (a[i]) ++n10;
    else if (b[i]) ++n01;
    else ++n00;
  }
  const double n = n11 + n10 + n01 + n00;
  const double po = (n11 + n00) / n;
  const double pe = ((n11 + n10) / n) * ((n11 + n01) / n) + ((n00 + n01) / n) * ((n00 + n10) / n);
  return (po - pe) / (1 - pe);
}

}  // namespace oracle
