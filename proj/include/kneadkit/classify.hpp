#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "kneadkit/word.hpp"

namespace kneadkit {

/// True iff w is primitive: not u^k for any shorter u and k >= 2.
inline bool is_irreducible(const Word& w) {
  size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool rep = true;
    for (size_t i = d; i < n && rep; ++i) rep = w[i] == w[i % d];
    if (rep) return false;
  }
  return n >= 1;
}

/// Shortest u with w = u^k.
inline Word primitive_root(const Word& w) {
  size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool rep = true;
    for (size_t i = d; i < n && rep; ++i) rep = w[i] == w[i % d];
    if (rep) return w.prefix(d);
  }
  return w;
}

/// First shift index 1 <= k < |w| with sigma^k(w^inf) > w^inf, if any.
inline std::optional<size_t> extremal_witness(const Word& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (compare_shift(w, k) == Comparison::Greater) return k;
  return std::nullopt;
}

/// w^inf is an admissible sequence: periodic and every shift is <= w^inf.
inline bool is_extremal(const Word& w) {
  return is_periodic(w) && !extremal_witness(w).has_value();
}

inline bool is_admissible_word(const Word& w) { return is_extremal(w) && sign(w) == 1; }

/// First k in [2, |w|] with Suff_k(wN) not strictly below Pre_k(w), if any.
inline std::optional<size_t> dominant_witness(const Word& w) {
  Word wn = w.append(w.graph().top());
  for (size_t k = 2; k <= w.size(); ++k)
    if (compare_words(wn.suffix(k), w.prefix(k)) != Comparison::Less) return k;
  return std::nullopt;
}

/// Every proper suffix of wN is strictly below the matching prefix of w.
inline bool is_dominant(const Word& w) {
  return is_periodic(w) && !dominant_witness(w).has_value();
}

struct ClassificationReport {
  bool periodic = false;
  bool irreducible = false;
  bool extremal = false;
  bool admissible = false;
  bool dominant = false;
  // Smallest k violating the extremal shift condition, or failing that the
  // dominance inequality; absent when both hold.
  std::optional<size_t> failure_witness;
};

inline ClassificationReport classify(const Word& w) {
  ClassificationReport r;
  r.periodic = is_periodic(w);
  r.irreducible = is_irreducible(w);
  if (r.periodic) {
    auto ew = extremal_witness(w);
    r.extremal = !ew.has_value();
    r.admissible = r.extremal && sign(w) == 1;
    auto dw = dominant_witness(w);
    r.dominant = !dw.has_value();
    if (ew)
      r.failure_witness = *ew;
    else if (dw)
      r.failure_witness = *dw;
  }
  return r;
}

inline constexpr uint64_t kDefaultEnumerationCap = 1u << 22;

/// W_n: all periodic words of length n, ascending under the signed order
/// (total on equal lengths). Depth-first generation with a wraparound check.
inline std::vector<Word> enumerate_Wn(const SignedGraph& g, size_t n,
                                      uint64_t cap = kDefaultEnumerationCap) {
  require(n >= 1, errc::precondition, "n must be >= 1");
  std::vector<Word> out;
  std::vector<Vertex> cur{g.top()};
  uint64_t count = 0;
  auto dfs = [&](auto&& self) -> void {
    if (cur.size() == n) {
      if (g.has_edge(cur.back(), cur.front())) {
        if (++count > cap) fail(errc::resource_bound, "W_n exceeds enumeration cap");
        out.emplace_back(g, cur);
      }
      return;
    }
    for (Vertex j : g.out(cur.back())) {
      cur.push_back(j);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

/// Immediate successor of w within W_|w|, or nothing at the top.
inline std::optional<Word> next_word(const Word& w, uint64_t cap = kDefaultEnumerationCap) {
  require(is_periodic(w), errc::not_periodic, w.str());
  auto ws = enumerate_Wn(w.graph(), w.size(), cap);
  auto it = std::lower_bound(ws.begin(), ws.end(), w, word_less);
  if (it == ws.end() || ++it == ws.end()) return std::nullopt;
  return *it;
}

/// Immediate predecessor of w within W_|w|, or nothing at the bottom.
inline std::optional<Word> prev_word(const Word& w, uint64_t cap = kDefaultEnumerationCap) {
  require(is_periodic(w), errc::not_periodic, w.str());
  auto ws = enumerate_Wn(w.graph(), w.size(), cap);
  auto it = std::lower_bound(ws.begin(), ws.end(), w, word_less);
  if (it == ws.begin()) return std::nullopt;
  return *(--it);
}

/// All admissible words of length 1..max_len, shortest first, then in order.
inline std::vector<Word> admissible_words(const SignedGraph& g, size_t max_len,
                                          uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Word> out;
  for (size_t n = 1; n <= max_len; ++n)
    for (const Word& w : enumerate_Wn(g, n, cap))
      if (is_admissible_word(w)) out.push_back(w);
  return out;
}

}  // namespace kneadkit
