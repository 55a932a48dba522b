#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "kneadkit/intmatrix.hpp"
#include "kneadkit/intpoly.hpp"
#include "kneadkit/markov.hpp"
#include "kneadkit/roots.hpp"

namespace kneadkit {

struct Spectrum {
  std::vector<Complex> eigenvalues;  // with multiplicity, sorted by (re, im)
  double radius = 0;
  double circle_tol = 0;
  std::vector<Complex> inside;    // |z| < 1 - tol
  std::vector<Complex> outside;   // |z| > 1 + tol
  std::vector<Complex> on_circle; // the band in between
};

inline IntPoly char_poly(const IncidenceMatrix& M) { return char_poly(M.m); }

/// All eigenvalues with multiplicity via the exact characteristic polynomial
/// and simultaneous root iteration, partitioned around the unit circle.
inline Spectrum spectrum(const IntMatrix& M, double circle_tol = 1e-8) {
  Spectrum s;
  s.circle_tol = circle_tol;
  if (M.size() == 0) return s;
  RootResult rr = find_roots(char_poly(M));
  if (!rr.converged)
    fail(errc::convergence_failure,
         "root iteration residual " + std::to_string(static_cast<double>(rr.max_scaled_residual)) +
             " after " + std::to_string(rr.iterations) + " iterations");
  s.eigenvalues = rr.roots;
  for (Complex z : s.eigenvalues) {
    double a = std::abs(z);
    s.radius = std::max(s.radius, a);
    if (a < 1 - circle_tol)
      s.inside.push_back(z);
    else if (a > 1 + circle_tol)
      s.outside.push_back(z);
    else
      s.on_circle.push_back(z);
  }
  return s;
}

inline Spectrum spectrum(const IncidenceMatrix& M, double circle_tol = 1e-8) {
  return spectrum(M.m, circle_tol);
}

inline double spectral_radius(const IntMatrix& M) { return spectrum(M).radius; }

/// log of the spectral radius; 0 for an empty matrix.
inline double entropy(const IncidenceMatrix& M) {
  if (M.size() == 0) return 0.0;
  return std::log(spectral_radius(M.m));
}

/// The decomposition matrix always carries a transient block below the orbit
/// intervals, so plain irreducibility is the wrong question for the theorems;
/// the operative notion is that the orbit-interval core is one strongly
/// connected block and realizes the full spectral radius.
inline bool essentially_irreducible(const IncidenceMatrix& M) {
  if (!M.core_strongly_connected()) return false;
  double full = spectral_radius(M.m);
  double core = spectral_radius(M.m.submatrix(M.core));
  return core >= full - 1e-9;
}

/// det(I - tM) as an exact integer polynomial in t, by fraction-free
/// elimination over Z[t]. Zeta poles are its roots.
inline IntPoly zeta_denominator(const IntMatrix& M) {
  size_t n = M.size();
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<BigInt> c{i == j ? 1 : 0, -M.at(i, j)};
      a[i][j] = IntPoly(std::move(c));
    }
  return det_poly_bareiss(std::move(a));
}

inline IntPoly zeta_denominator(const IncidenceMatrix& M) { return zeta_denominator(M.m); }

/// The Gaussian-elimination polynomials p_0..p_N: a gcd-reduced integer
/// solution of lambda p_i = sum over edges (i,j) of p_j for i < N, computed
/// from signed maximal minors of the first N rows of (lambda I - A). The sign
/// is fixed so p_N has a positive leading coefficient.
inline std::vector<IntPoly> elimination_polys(const SignedGraph& g) {
  int n = g.vertex_count();
  // rows 0..N-1 of (lambda I - A)
  std::vector<std::vector<IntPoly>> B(n - 1, std::vector<IntPoly>(n));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt c0 = g.has_edge(i, j) ? -1 : 0;
      std::vector<BigInt> c{c0, i == j ? 1 : 0};
      B[i][j] = IntPoly(std::move(c));
    }
  std::vector<IntPoly> p(n);
  bool all_zero = true;
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<IntPoly>> minor(n - 1, std::vector<IntPoly>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k)
        if (k != j) minor[i][cc++] = B[i][k];
    }
    IntPoly d = det_poly_bareiss(std::move(minor));
    p[j] = j % 2 ? -d : d;
    if (!p[j].is_zero()) all_zero = false;
  }
  if (all_zero) fail(errc::degenerate_kernel, "kernel dimension exceeds 1");
  IntPoly gcd;
  for (const auto& q : p) gcd = poly_gcd(gcd, q);
  for (auto& q : p)
    if (!q.is_zero()) q = q.div_exact(gcd);
  if (p[n - 1].is_zero()) fail(errc::degenerate_kernel, "p_N vanishes after reduction");
  if (p[n - 1].leading() < 0)
    for (auto& q : p) q = -q;
  // exact check of the defining identities
  for (int i = 0; i + 1 < n; ++i) {
    IntPoly lhs = IntPoly::x() * p[i];
    for (Vertex j : g.out(i)) lhs = lhs - p[j];
    require(lhs.is_zero(), errc::internal, "elimination polynomials fail their identity");
  }
  return p;
}

/// The kneading polynomial F_w: compose the edge-indexed affine maps along
/// the cyclic edge sequence of w starting from p_N, then subtract p_N.
/// Coordinates are positions from the left interval end throughout, so the
/// orientation-reversing case is x -> p_j + sum_{k>j} p_k - lambda x.
inline IntPoly kneading_poly(const Word& w) {
  require(is_periodic(w), errc::not_periodic, w.str());
  const SignedGraph& g = w.graph();
  auto p = elimination_polys(g);
  IntPoly lam = IntPoly::x();
  IntPoly x = p[g.top()];
  size_t n = w.size();
  for (size_t i = 0; i < n; ++i) {
    Vertex a = w[i], b = w[(i + 1) % n];
    if (g.sign_of(a) > 0) {
      IntPoly low;
      for (Vertex k : g.out(a))
        if (k < b) low = low + p[k];
      x = lam * x - low;
    } else {
      IntPoly high;
      for (Vertex k : g.out(a))
        if (k > b) high = high + p[k];
      x = p[b] + high - lam * x;
    }
  }
  return x - p[g.top()];
}

struct MatchReport {
  std::vector<Complex> poly_roots;   // off-circle nonzero roots of F_w
  std::vector<Complex> matrix_eigs;  // off-circle nonzero eigenvalues of M_w
  std::vector<std::pair<size_t, size_t>> pairing;  // indices, when sizes agree
  double max_pair_distance = std::numeric_limits<double>::infinity();
  double hausdorff = std::numeric_limits<double>::infinity();
  bool sizes_equal = false;
  bool f_zero = false;  // F_w vanished identically (degenerate case)
};

namespace detail {

/// min-cost perfect matching by bitmask DP; costs are pair distances, the
/// returned value minimizes the total and we report the max edge used.
inline std::vector<size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  size_t n = cost.size();
  require(n <= 20, errc::resource_bound, "matching instance too large");
  size_t full = size_t(1) << n;
  std::vector<double> dp(full, std::numeric_limits<double>::infinity());
  std::vector<int> take(full, -1);
  dp[0] = 0;
  for (size_t mask = 0; mask < full; ++mask) {
    if (!std::isfinite(dp[mask])) continue;
    size_t i = static_cast<size_t>(__builtin_popcountll(mask));
    if (i == n) continue;
    for (size_t j = 0; j < n; ++j) {
      if (mask & (size_t(1) << j)) continue;
      size_t m2 = mask | (size_t(1) << j);
      double c = dp[mask] + cost[i][j];
      if (c < dp[m2]) {
        dp[m2] = c;
        take[m2] = static_cast<int>(j);
      }
    }
  }
  std::vector<size_t> assign(n);
  size_t mask = full - 1;
  while (mask) {
    size_t j = static_cast<size_t>(take[mask]);
    size_t i = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
    assign[i] = j;
    mask &= ~(size_t(1) << j);
  }
  return assign;
}

inline std::vector<Complex> off_circle(const std::vector<Complex>& zs, double tol) {
  std::vector<Complex> out;
  for (Complex z : zs) {
    double a = std::abs(z);
    if (a > 1e-9 && (a < 1 - tol || a > 1 + tol)) out.push_back(z);
  }
  return out;
}

}  // namespace detail

/// Compare the off-unit-circle nonzero roots of F_w against the off-circle
/// nonzero eigenvalues of the decomposition matrix.
inline MatchReport match_off_circle(const Word& w, double tol = 1e-4) {
  require(is_admissible_word(w), errc::not_admissible, w.str());
  MatchReport rep;
  IntPoly F = kneading_poly(w);
  auto part = markov_partition(w);
  auto M = incidence_matrix(part);
  Spectrum sp = spectrum(M, tol);
  rep.matrix_eigs = detail::off_circle(sp.eigenvalues, tol);
  if (F.is_zero()) {
    rep.f_zero = true;
    rep.sizes_equal = rep.matrix_eigs.empty();
    if (rep.sizes_equal) {
      rep.max_pair_distance = 0;
      rep.hausdorff = 0;
    }
    return rep;
  }
  RootResult rr = find_roots(F);
  if (!rr.converged) fail(errc::convergence_failure, "F_w root iteration did not converge");
  rep.poly_roots = detail::off_circle(rr.roots, tol);

  // set-level Hausdorff distance
  auto one_sided = [](const std::vector<Complex>& A, const std::vector<Complex>& B) {
    double h = 0;  // sup over A of the distance to B; 0 when A is empty
    for (Complex a : A) {
      double best = std::numeric_limits<double>::infinity();
      for (Complex b : B) best = std::min(best, std::abs(a - b));
      h = std::max(h, best);
    }
    return h;
  };
  rep.hausdorff = std::max(one_sided(rep.poly_roots, rep.matrix_eigs),
                           one_sided(rep.matrix_eigs, rep.poly_roots));

  rep.sizes_equal = rep.poly_roots.size() == rep.matrix_eigs.size();
  if (rep.sizes_equal) {
    size_t n = rep.poly_roots.size();
    if (n == 0) {
      rep.max_pair_distance = 0;
      return rep;
    }
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        cost[i][j] = std::abs(rep.poly_roots[i] - rep.matrix_eigs[j]);
    auto assign = detail::min_cost_assignment(cost);
    rep.max_pair_distance = 0;
    for (size_t i = 0; i < n; ++i) {
      rep.pairing.emplace_back(i, assign[i]);
      rep.max_pair_distance = std::max(rep.max_pair_distance, cost[i][assign[i]]);
    }
  }
  return rep;
}

}  // namespace kneadkit
