#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kneadkit/errors.hpp"
#include "kneadkit/signed_graph.hpp"

namespace kneadkit {

enum class Comparison { Less, Equal, Greater, Incomparable };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
    case Comparison::Incomparable: return "Incomparable";
  }
  return "?";
}

/// A finite word over the vertices of a signed graph. Words are immutable
/// value types; the graph must outlive every word built over it.
class Word {
 public:
  Word(const SignedGraph& g, std::vector<Vertex> letters)
      : g_(&g), letters_(std::move(letters)) {
    for (Vertex v : letters_)
      require(v >= 0 && v < g.vertex_count(), errc::invalid_config,
              "letter " + std::to_string(v) + " is not a vertex");
  }
  Word(const SignedGraph& g, const std::string& text) : Word(g, g.parse_letters(text)) {}

  const SignedGraph& graph() const { return *g_; }
  const std::vector<Vertex>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Vertex operator[](size_t i) const { return letters_[i]; }
  std::string str() const { return g_->format_word(letters_); }

  bool operator==(const Word& o) const { return g_ == o.g_ && letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  Word prefix(size_t k) const {
    return Word(*g_, std::vector<Vertex>(letters_.begin(), letters_.begin() + k));
  }
  Word suffix(size_t k) const {
    return Word(*g_, std::vector<Vertex>(letters_.end() - k, letters_.end()));
  }
  Word concat(const Word& o) const {
    std::vector<Vertex> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return Word(*g_, std::move(v));
  }
  Word append(Vertex c) const {
    std::vector<Vertex> v = letters_;
    v.push_back(c);
    return Word(*g_, std::move(v));
  }
  Word pow(size_t n) const {
    std::vector<Vertex> v;
    v.reserve(letters_.size() * n);
    for (size_t i = 0; i < n; ++i) v.insert(v.end(), letters_.begin(), letters_.end());
    return Word(*g_, std::move(v));
  }
  Word rotate(size_t k) const {
    std::vector<Vertex> v(letters_.begin() + k, letters_.end());
    v.insert(v.end(), letters_.begin(), letters_.begin() + k);
    return Word(*g_, std::move(v));
  }

 private:
  const SignedGraph* g_;
  std::vector<Vertex> letters_;
};

/// Product of O over the letters; the empty word has sign +1.
inline int sign(const Word& w) {
  int s = 1;
  for (Vertex v : w.letters()) s *= w.graph().sign_of(v);
  return s;
}

/// Signed partial order on finite words: compare at the first differing index
/// within the common range, weighting by the sign of the common prefix.
/// Words where one is a proper prefix of the other are incomparable.
inline Comparison compare_words(const Word& u, const Word& v) {
  require(&u.graph() == &v.graph(), errc::precondition, "words must share a graph");
  const SignedGraph& g = u.graph();
  size_t m = std::min(u.size(), v.size());
  int s = 1;
  for (size_t j = 0; j < m; ++j) {
    if (u[j] != v[j]) return s * (u[j] - v[j]) < 0 ? Comparison::Less : Comparison::Greater;
    s *= g.sign_of(u[j]);
  }
  return u.size() == v.size() ? Comparison::Equal : Comparison::Incomparable;
}

inline bool word_less(const Word& u, const Word& v) {
  return compare_words(u, v) == Comparison::Less;
}

/// True iff consecutive letters are edges; with wrap also (last, first).
inline bool is_path_word(const Word& w, bool wrap) {
  const SignedGraph& g = w.graph();
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!g.has_edge(w[i], w[i + 1])) return false;
  if (wrap && !w.empty() && !g.has_edge(w[w.size() - 1], w[0])) return false;
  return true;
}

/// w is a periodic word: w^inf lies in Sigma and w starts with the top letter.
inline bool is_periodic(const Word& w) {
  return !w.empty() && w[0] == w.graph().top() && is_path_word(w, true);
}

// ---------------------------------------------------------------------------
// Eventually periodic sequences: preperiod followed by a repeating period.
// These represent shift orbit points, cylinder extremes and sequence bounds
// exactly, so all order arithmetic stays in integers.
// ---------------------------------------------------------------------------
struct EPSeq {
  std::vector<Vertex> pre;
  std::vector<Vertex> per;  // nonempty

  Vertex at(size_t k) const {
    return k < pre.size() ? pre[k] : per[(k - pre.size()) % per.size()];
  }

  /// Canonical form: primitive period, preperiod as short as possible.
  EPSeq& normalize() {
    for (size_t d = 1; d < per.size(); ++d) {
      if (per.size() % d) continue;
      bool rep = true;
      for (size_t i = d; i < per.size() && rep; ++i) rep = per[i] == per[i % d];
      if (rep) {
        per.resize(d);
        break;
      }
    }
    while (!pre.empty() && pre.back() == per.back()) {
      per.insert(per.begin(), per.back());
      per.pop_back();
      pre.pop_back();
    }
    return *this;
  }

  EPSeq shifted() const {
    if (!pre.empty()) return {std::vector<Vertex>(pre.begin() + 1, pre.end()), per};
    std::vector<Vertex> p(per.begin() + 1, per.end());
    p.push_back(per[0]);
    return {{}, std::move(p)};
  }

  std::string str(const SignedGraph& g) const {
    std::string s = g.format_word(pre);
    return s + "(" + g.format_word(per) + ")";
  }
};

inline EPSeq periodic_seq(const Word& w) { return {{}, w.letters()}; }

/// Compare two eventually periodic sequences under the signed order. Two
/// sequences agreeing past both preperiods for per1+per2 letters are equal.
inline Comparison compare_eps(const SignedGraph& g, const EPSeq& a, const EPSeq& b) {
  size_t window =
      std::max(a.pre.size(), b.pre.size()) + a.per.size() + b.per.size();
  int s = 1;
  for (size_t k = 0; k < window; ++k) {
    Vertex x = a.at(k), y = b.at(k);
    if (x != y) return s * (x - y) < 0 ? Comparison::Less : Comparison::Greater;
    s *= g.sign_of(x);
  }
  return Comparison::Equal;
}

/// Compare u^inf with v^inf. Both words must be periodic.
inline Comparison compare_periodic(const Word& u, const Word& v) {
  require(&u.graph() == &v.graph(), errc::precondition, "words must share a graph");
  require(is_periodic(u), errc::not_periodic, "left word: " + u.str());
  require(is_periodic(v), errc::not_periodic, "right word: " + v.str());
  return compare_eps(u.graph(), periodic_seq(u), periodic_seq(v));
}

/// Compare sigma^k(w^inf) with w^inf. Both have period |w|, so the windowed
/// comparison over |w| letters decides.
inline Comparison compare_shift(const Word& w, size_t k) {
  require(is_periodic(w), errc::not_periodic, w.str());
  require(k < w.size(), errc::precondition, "shift amount must be < |w|");
  const SignedGraph& g = w.graph();
  size_t p = w.size();
  int s = 1;
  for (size_t i = 0; i < p; ++i) {
    Vertex x = w[(k + i) % p], y = w[i];
    if (x != y) return s * (x - y) < 0 ? Comparison::Less : Comparison::Greater;
    s *= g.sign_of(y);
  }
  return Comparison::Equal;
}

}  // namespace kneadkit
