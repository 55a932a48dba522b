#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneadkit/classify.hpp"
#include "kneadkit/word.hpp"

namespace kneadkit {

/// An adjacent pair in W_n: `lower` admissible, `upper` = Next(lower),
/// extremal with sign -1. The two blocks play the letters 0 and 1 of the
/// unimodal exponent system when tuning.
struct TuningPair {
  Word lower;
  Word upper;
};

/// Shortest periodic word with exactly one top letter, sign -1, whose
/// extension w_min*N is a lower bound for all of W_{|w_min|+1}. (For the
/// unimodal and four-vertex systems w_min*N is itself the member minimum;
/// for graphs without an (N,N) edge it is a strict lower bound.)
inline std::optional<Word> find_w_min(const SignedGraph& g, size_t max_len,
                                      uint64_t cap = kDefaultEnumerationCap) {
  require(max_len >= 1, errc::precondition, "max_len must be >= 1");
  for (size_t len = 1; len <= max_len; ++len) {
    auto wn1 = enumerate_Wn(g, len + 1, cap);
    // candidates: single-N periodic words of this length with sign -1
    std::vector<Vertex> cur{g.top()};
    std::optional<Word> found;
    auto dfs = [&](auto&& self) -> void {
      if (found) return;
      if (cur.size() == len) {
        if (!g.has_edge(cur.back(), cur.front())) return;
        Word w(g, cur);
        if (sign(w) != -1) return;
        Word wN = w.append(g.top());
        for (const Word& u : wn1) {
          Comparison c = compare_words(wN, u);
          if (c != Comparison::Less && c != Comparison::Equal) return;
        }
        found = w;
        return;
      }
      for (Vertex j : g.out(cur.back())) {
        if (j == g.top()) continue;  // exactly one N
        cur.push_back(j);
        self(self);
        cur.pop_back();
      }
    };
    dfs(dfs);
    if (found) return found;
  }
  return std::nullopt;
}

/// The pair (a, Next(a)) when the successor is extremal with sign -1.
inline std::optional<TuningPair> find_tuning_pair(const Word& a,
                                                  uint64_t cap = kDefaultEnumerationCap) {
  require(is_admissible_word(a), errc::not_admissible, a.str());
  auto nxt = next_word(a, cap);
  if (!nxt || !is_extremal(*nxt) || sign(*nxt) != -1) return std::nullopt;
  return TuningPair{a, *nxt};
}

/// Exponent words live over the fixed unimodal system and must be extremal
/// there (the word 1^k and the upper word of a detected tuning are legal
/// exponents even though their sign is -1).
inline bool valid_exponent(const Word& v) {
  if (&v.graph() != &unimodal_system()) {
    for (Vertex c : v.letters())
      if (c != 0 && c != 1) return false;
    return is_extremal(Word(unimodal_system(), v.letters()));
  }
  return is_extremal(v);
}

/// Block substitution: letter 0 of v becomes pair.lower, letter 1 pair.upper.
inline Word tune(const TuningPair& pair, const Word& v) {
  require(valid_exponent(v), errc::invalid_exponent,
          "exponent must be an extremal unimodal word: " + v.str());
  std::vector<Vertex> out;
  out.reserve(v.size() * pair.lower.size());
  for (Vertex c : v.letters()) {
    const Word& block = c == 0 ? pair.lower : pair.upper;
    out.insert(out.end(), block.letters().begin(), block.letters().end());
  }
  return Word(pair.lower.graph(), std::move(out));
}

/// Writes w as a tuning pair.lower * v if possible, scanning divisors of |w|
/// in increasing order so the returned base is the shortest one. Defined for
/// extremal words; admissible inputs can only match at proper divisors, while
/// sign -1 inputs may also match trivially as upper = w itself.
inline std::optional<std::pair<TuningPair, Word>> detect_renormalization(
    const Word& w, uint64_t cap = kDefaultEnumerationCap) {
  require(is_extremal(w), errc::not_admissible, "renormalization needs an extremal word");
  const SignedGraph& g = w.graph();
  size_t n = w.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    Word upper = w.prefix(d);  // exponents start with 1, so the first block is the upper word
    if (!is_periodic(upper) || !is_extremal(upper) || sign(upper) != -1) continue;
    auto lower = prev_word(upper, cap);
    if (!lower || !is_admissible_word(*lower)) continue;
    std::vector<Vertex> bits;
    bool ok = true;
    for (size_t i = 0; i < n && ok; i += d) {
      Word block(g, std::vector<Vertex>(w.letters().begin() + i, w.letters().begin() + i + d));
      if (block == upper)
        bits.push_back(1);
      else if (block == *lower)
        bits.push_back(0);
      else
        ok = false;
    }
    if (!ok) continue;
    Word v(unimodal_system(), bits);
    if (!is_extremal(v)) continue;
    return std::make_pair(TuningPair{*lower, upper}, v);
  }
  return std::nullopt;
}

/// For an extremal word of sign -1 that is not a power of w_min, produce
/// (base, exponent) with w = base * exponent and the base nonrenormalizable.
inline std::pair<Word, Word> base_decomposition(const Word& w,
                                                uint64_t cap = kDefaultEnumerationCap) {
  require(is_extremal(w), errc::not_extremal, w.str());
  require(sign(w) == -1, errc::not_extremal, "base decomposition wants sign -1: " + w.str());
  auto wm = find_w_min(w.graph(), w.size(), cap);
  if (wm) {
    Word root = primitive_root(w);
    if (root == *wm) fail(errc::minimal_word, w.str() + " is a power of w_min");
  }
  auto r = detect_renormalization(w, cap);
  if (!r) fail(errc::certification_failure, "no tuning decomposition found for " + w.str());
  // round trip, and the shortest base must itself be nonrenormalizable
  require(tune(r->first, r->second) == w, errc::certification_failure,
          "tuning round trip failed for " + w.str());
  require(!detect_renormalization(r->first.lower, cap).has_value(), errc::certification_failure,
          "shortest base is renormalizable for " + w.str());
  return {r->first.lower, r->second};
}

struct TunabilityReport {
  std::optional<Word> w_min;
  size_t verified_up_to = 0;
  std::vector<Word> violations;
  bool tunable_up_to_bound() const { return w_min.has_value() && violations.empty(); }
};

/// Audit of the two tunability conditions up to a length bound. A word
/// violates condition 2 when it is extremal, irreducible, of sign -1, not an
/// odd power of w_min, and its predecessor in W_n is not admissible.
inline TunabilityReport check_tunable(const SignedGraph& g, size_t max_len,
                                      uint64_t cap = kDefaultEnumerationCap) {
  require(max_len >= 1, errc::precondition, "max_len must be >= 1");
  TunabilityReport rep;
  rep.verified_up_to = max_len;
  rep.w_min = find_w_min(g, max_len, cap);
  for (size_t n = 1; n <= max_len; ++n) {
    auto ws = enumerate_Wn(g, n, cap);
    for (size_t i = 0; i < ws.size(); ++i) {
      const Word& w = ws[i];
      if (sign(w) != -1 || !is_irreducible(w) || !is_extremal(w)) continue;
      if (rep.w_min) {
        const Word& m = *rep.w_min;
        if (n % m.size() == 0 && (n / m.size()) % 2 == 1 && w == m.pow(n / m.size())) continue;
      }
      if (i > 0 && is_admissible_word(ws[i - 1])) continue;
      rep.violations.push_back(w);
    }
  }
  return rep;
}

}  // namespace kneadkit
