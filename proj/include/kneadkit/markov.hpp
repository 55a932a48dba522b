#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kneadkit/classify.hpp"
#include "kneadkit/intmatrix.hpp"
#include "kneadkit/word.hpp"

namespace kneadkit {

/// Smallest element of Sigma, built greedily: the next letter extreme is
/// picked per the sign of the prefix so far. The walk over (vertex, sign)
/// states is finite, so the result is eventually periodic.
inline EPSeq extreme_sequence(const SignedGraph& g, bool maximal) {
  // first letter: empty prefix has sign +1
  Vertex first = maximal ? g.top() : 0;
  std::vector<Vertex> seq{first};
  int s = g.sign_of(first);
  std::vector<int> seen(static_cast<size_t>(g.vertex_count()) * 2, -1);
  auto key = [&](Vertex v, int sg) { return static_cast<size_t>(v) * 2 + (sg > 0 ? 0 : 1); };
  seen[key(first, s)] = 0;
  while (true) {
    const auto& outs = g.out(seq.back());
    bool want_big = maximal == (s > 0);
    Vertex nxt = want_big ? outs.back() : outs.front();
    seq.push_back(nxt);
    s *= g.sign_of(nxt);
    size_t k = key(nxt, s);
    if (seen[k] >= 0) {
      size_t cut = seen[k] + 1;
      EPSeq e{std::vector<Vertex>(seq.begin(), seq.begin() + cut),
              std::vector<Vertex>(seq.begin() + cut, seq.end())};
      return e.normalize();
    }
    seen[k] = static_cast<int>(seq.size()) - 1;
  }
}

inline EPSeq minimal_sequence(const SignedGraph& g) { return extreme_sequence(g, false); }
inline EPSeq maximal_sequence(const SignedGraph& g) { return extreme_sequence(g, true); }

namespace detail {

/// Extreme of S_w = {x : sigma^n(x) <= w^inf for all n} within the cylinder
/// I_j. The greedy walk over (vertex, max/min) states: at (N, max) the tail
/// is w^inf itself; elsewhere constraints never bind because any sequence
/// avoiding N is below everything starting with N, and the two N-states are
/// resolved against sigma(w^inf) by extremality of w.
inline EPSeq subshift_cyl_extreme(const Word& w, Vertex j0, bool maximal) {
  const SignedGraph& g = w.graph();
  std::vector<Vertex> seq;
  std::vector<int> seen(static_cast<size_t>(g.vertex_count()) * 2, -1);
  Vertex j = j0;
  bool mode_max = maximal;
  while (true) {
    if (j == g.top() && mode_max) {
      EPSeq e{seq, w.letters()};  // splice w^inf
      return e.normalize();
    }
    size_t key = static_cast<size_t>(j) * 2 + (mode_max ? 0 : 1);
    if (seen[key] >= 0) {
      size_t cut = seen[key];
      EPSeq e{std::vector<Vertex>(seq.begin(), seq.begin() + cut),
              std::vector<Vertex>(seq.begin() + cut, seq.end())};
      return e.normalize();
    }
    seen[key] = static_cast<int>(seq.size());
    seq.push_back(j);
    bool tail_max = g.sign_of(j) > 0 ? mode_max : !mode_max;
    const auto& outs = g.out(j);
    j = tail_max ? outs.back() : outs.front();
    mode_max = tail_max;
  }
}

}  // namespace detail

struct MarkovPiece {
  size_t interval;  // index into the descending point list; 0 is the top interval
  Vertex cylinder;
  EPSeq lower;
  EPSeq upper;
};

/// The finite Markov decomposition of Sigma_{w^inf}: orbit points of w^inf
/// sorted descending with the minimum of Sigma appended, intersected with
/// the letter cylinders. Degenerate one-point intersections are dropped and
/// logged.
struct MarkovPartition {
  const SignedGraph* graph;
  Word word;
  std::vector<EPSeq> points;             // descending; last entry is min(Sigma) (or lowest orbit point if equal)
  std::vector<MarkovPiece> pieces;
  std::vector<std::string> dropped;      // logged singleton intersections

  size_t bottom_interval() const { return points.size() - 2; }

  /// Index of the piece whose upper endpoint is w^inf.
  size_t top_piece() const {
    for (size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].interval == 0 &&
          compare_eps(*graph, pieces[i].upper, points[0]) == Comparison::Equal)
        return i;
    return 0;
  }

  /// Pieces of the orbit intervals (everything above the bottom interval).
  std::vector<size_t> core_pieces() const {
    std::vector<size_t> idx;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].interval < bottom_interval()) idx.push_back(i);
    return idx;
  }
};

inline MarkovPartition markov_partition(const Word& w) {
  require(is_extremal(w), errc::not_extremal, w.str());
  const SignedGraph& g = w.graph();
  size_t p = w.size();

  std::vector<EPSeq> pts;
  for (size_t k = 0; k < p; ++k) {
    EPSeq r = periodic_seq(w.rotate(k));
    bool dup = false;
    for (const auto& e : pts)
      if (compare_eps(g, r, e) == Comparison::Equal) dup = true;
    if (!dup) pts.push_back(std::move(r));
  }
  std::sort(pts.begin(), pts.end(), [&](const EPSeq& a, const EPSeq& b) {
    return compare_eps(g, a, b) == Comparison::Greater;  // descending
  });
  EPSeq bottom = minimal_sequence(g);
  if (compare_eps(g, bottom, pts.back()) != Comparison::Equal) pts.push_back(bottom);

  MarkovPartition part{&g, w, std::move(pts), {}, {}};
  if (part.points.size() < 2) return part;  // single point, no intervals

  std::vector<EPSeq> cmax, cmin;
  for (Vertex j = 0; j < g.vertex_count(); ++j) {
    cmax.push_back(detail::subshift_cyl_extreme(w, j, true));
    cmin.push_back(detail::subshift_cyl_extreme(w, j, false));
  }

  for (size_t t = 0; t + 1 < part.points.size(); ++t) {
    const EPSeq& hi = part.points[t];
    const EPSeq& lo = part.points[t + 1];
    for (Vertex j = 0; j < g.vertex_count(); ++j) {
      const EPSeq& lower =
          compare_eps(g, lo, cmin[j]) == Comparison::Greater ? lo : cmin[j];
      const EPSeq& upper =
          compare_eps(g, hi, cmax[j]) == Comparison::Less ? hi : cmax[j];
      Comparison c = compare_eps(g, lower, upper);
      if (c == Comparison::Greater) continue;  // empty
      if (c == Comparison::Equal) {
        part.dropped.push_back("[" + lower.str(g) + "] in I" + std::to_string(j) +
                               " interval " + std::to_string(t));
        continue;
      }
      part.pieces.push_back({t, j, lower, upper});
    }
  }
  return part;
}

/// 0/1 transition matrix of the decomposition: entry (P,Q) = 1 iff the shift
/// image of P (endpoint arithmetic, orientation per the cylinder sign)
/// contains Q.
struct IncidenceMatrix {
  IntMatrix m;
  std::vector<std::string> labels;
  size_t top_piece = 0;
  std::vector<size_t> core;  // indices of orbit-interval pieces

  size_t size() const { return m.size(); }
  bool irreducible() const { return m.irreducible(); }

  /// The core pieces form a single strongly connected block. The transient
  /// part below the orbit never communicates back, so this is the operative
  /// irreducibility of the decomposition; callers pair it with a spectral
  /// radius check (see spectral.hpp).
  bool core_strongly_connected() const {
    if (core.empty()) return false;
    return m.submatrix(core).irreducible();
  }
};

inline IncidenceMatrix incidence_matrix(const MarkovPartition& part) {
  const SignedGraph& g = *part.graph;
  size_t n = part.pieces.size();
  IncidenceMatrix im;
  im.m = IntMatrix(n);
  im.top_piece = part.top_piece();
  im.core = part.core_pieces();
  for (size_t a = 0; a < n; ++a) {
    const auto& P = part.pieces[a];
    EPSeq A = P.lower.shifted(), B = P.upper.shifted();
    if (g.sign_of(P.cylinder) < 0) std::swap(A, B);
    for (size_t b = 0; b < n; ++b) {
      const auto& Q = part.pieces[b];
      if (!g.has_edge(P.cylinder, Q.cylinder)) continue;
      if (compare_eps(g, A, Q.lower) != Comparison::Greater &&
          compare_eps(g, Q.upper, B) != Comparison::Greater)
        im.m.at(a, b) = 1;
    }
    im.labels.push_back("J" + std::to_string(P.interval) + ":I" +
                        std::to_string(P.cylinder));
  }
  return im;
}

}  // namespace kneadkit
