#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "kneadkit/intpoly.hpp"

namespace kneadkit {

/// Dense square integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(size_t n) : n_(n), a_(n * n) {}

  size_t size() const { return n_; }
  BigInt& at(size_t i, size_t j) { return a_[i * n_ + j]; }
  const BigInt& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n_);
    for (size_t i = 0; i < x.n_; ++i)
      for (size_t k = 0; k < x.n_; ++k) {
        const BigInt& v = x.at(i, k);
        if (v == 0) continue;
        for (size_t j = 0; j < x.n_; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  BigInt trace() const {
    BigInt t = 0;
    for (size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  /// Tarjan strongly connected components of the nonzero pattern. Returns the
  /// component index per row, components numbered in reverse topological order.
  std::vector<int> sccs(int* count = nullptr) const {
    size_t n = n_;
    std::vector<int> comp(n, -1), idx(n, 0), low(n, 0);
    std::vector<char> onstk(n, 0);
    std::vector<size_t> stk;
    int timer = 1, ncomp = 0;
    // iterative Tarjan
    struct Frame {
      size_t v;
      size_t next;
    };
    for (size_t s = 0; s < n; ++s) {
      if (idx[s]) continue;
      std::vector<Frame> call{{s, 0}};
      idx[s] = low[s] = timer++;
      stk.push_back(s);
      onstk[s] = 1;
      while (!call.empty()) {
        auto& f = call.back();
        if (f.next < n) {
          size_t u = f.next++;
          if (at(f.v, u) == 0) continue;
          if (!idx[u]) {
            idx[u] = low[u] = timer++;
            stk.push_back(u);
            onstk[u] = 1;
            call.push_back({u, 0});
          } else if (onstk[u]) {
            low[f.v] = std::min(low[f.v], idx[u]);
          }
        } else {
          if (low[f.v] == idx[f.v]) {
            while (true) {
              size_t u = stk.back();
              stk.pop_back();
              onstk[u] = 0;
              comp[u] = ncomp;
              if (u == f.v) break;
            }
            ++ncomp;
          }
          size_t v = f.v;
          call.pop_back();
          if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
      }
    }
    if (count) *count = ncomp;
    return comp;
  }

  bool irreducible() const {
    if (n_ == 0) return false;
    int c = 0;
    sccs(&c);
    return c == 1;
  }

  IntMatrix submatrix(const std::vector<size_t>& rows) const {
    IntMatrix r(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) r.at(i, j) = at(rows[i], rows[j]);
    return r;
  }

 private:
  size_t n_ = 0;
  std::vector<BigInt> a_;
};

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier. All divisions
/// are exact over the integers.
inline IntPoly char_poly_faddeev(const IntMatrix& A) {
  size_t n = A.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix M(n);  // zero
  for (size_t k = 1; k <= n; ++k) {
    // M <- A * (M + c_{n-k+1} I)
    for (size_t i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
    M = A * M;
    BigInt t = M.trace();
    require(t % static_cast<int64_t>(k) == 0, errc::internal, "Faddeev trace not divisible");
    c[n - k] = -t / static_cast<int64_t>(k);
  }
  return IntPoly(std::move(c));
}

namespace detail {

// 31-bit primes for the CRT characteristic polynomial.
inline constexpr uint64_t kCrtPrimes[] = {
    2147483647ull, 2147483629ull, 2147483587ull, 2147483579ull, 2147483563ull, 2147483549ull,
    2147483543ull, 2147483497ull, 2147483489ull, 2147483477ull, 2147483423ull, 2147483399ull,
    2147483353ull, 2147483323ull, 2147483269ull, 2147483249ull, 2147483237ull, 2147483179ull,
    2147483171ull, 2147483137ull, 2147483123ull, 2147483077ull, 2147483069ull, 2147483059ull,
    2147483053ull, 2147483033ull, 2147483029ull, 2147482951ull, 2147482949ull, 2147482943ull,
    2147482937ull, 2147482921ull, 2147482877ull, 2147482873ull, 2147482867ull, 2147482859ull,
    2147482819ull, 2147482817ull, 2147482811ull, 2147482801ull, 2147482763ull, 2147482739ull,
    2147482697ull, 2147482693ull, 2147482681ull, 2147482663ull, 2147482661ull, 2147482621ull,
};

inline uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

inline uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod(a, p - 2, p); }

/// char poly of A mod p: Hessenberg reduction then the leading-minor
/// recurrence. O(n^3).
inline std::vector<uint64_t> char_poly_mod(const IntMatrix& A, uint64_t p) {
  size_t n = A.size();
  std::vector<uint64_t> h(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      BigInt v = A.at(i, j) % static_cast<int64_t>(p);
      if (v < 0) v += static_cast<int64_t>(p);
      h[i * n + j] = v.convert_to<uint64_t>();
    }
  auto H = [&](size_t i, size_t j) -> uint64_t& { return h[i * n + j]; };
  for (size_t k = 1; k + 1 < n; ++k) {
    // pivot below the subdiagonal in column k-1
    size_t piv = k;
    while (piv < n && H(piv, k - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(H(k, j), H(piv, j));
      for (size_t i = 0; i < n; ++i) std::swap(H(i, k), H(i, piv));
    }
    uint64_t inv = inv_mod(H(k, k - 1), p);
    for (size_t i = k + 1; i < n; ++i) {
      if (H(i, k - 1) == 0) continue;
      uint64_t f = (__uint128_t)H(i, k - 1) * inv % p;
      uint64_t nf = p - f;
      for (size_t j = 0; j < n; ++j) H(i, j) = ((__uint128_t)H(k, j) * nf + H(i, j)) % p;
      for (size_t i2 = 0; i2 < n; ++i2) H(i2, k) = ((__uint128_t)H(i2, i) * f + H(i2, k)) % p;
    }
  }
  // p_k(x) = charpoly of leading k x k Hessenberg block
  std::vector<std::vector<uint64_t>> P(n + 1);
  P[0] = {1};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<uint64_t> q(k + 1, 0);
    // (x - H(k-1,k-1)) * P[k-1]
    uint64_t d = H(k - 1, k - 1);
    for (size_t i = 0; i < P[k - 1].size(); ++i) {
      q[i + 1] = (q[i + 1] + P[k - 1][i]) % p;
      q[i] = (q[i] + (__uint128_t)(p - d) * P[k - 1][i]) % p;
    }
    uint64_t prod = 1;
    for (size_t m = 1; m < k; ++m) {
      prod = (__uint128_t)prod * H(k - m, k - m - 1) % p;
      uint64_t coef = (__uint128_t)prod * H(k - m - 1, k - 1) % p;
      if (coef == 0) continue;
      uint64_t nc = p - coef;
      for (size_t i = 0; i < P[k - m - 1].size(); ++i)
        q[i] = (q[i] + (__uint128_t)nc * P[k - m - 1][i]) % p;
    }
    P[k] = std::move(q);
  }
  return P[n];
}

}  // namespace detail

/// Exact characteristic polynomial. Faddeev-LeVerrier for small matrices,
/// CRT over word-size primes with Hessenberg reduction for larger ones.
inline IntPoly char_poly(const IntMatrix& A) {
  size_t n = A.size();
  if (n == 0) return IntPoly(BigInt(1));
  if (n <= 24) return char_poly_faddeev(A);
  // coefficient bound: |c_k| <= C(n,k) * (sqrt(n) * maxabs)^n  -- via logs
  double maxabs = 1.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double v = std::fabs(A.at(i, j).convert_to<double>());
      maxabs = std::max(maxabs, v);
    }
  double bits = n + n * (0.5 * std::log2(static_cast<double>(n)) + std::log2(maxabs)) + 4;
  size_t need = static_cast<size_t>(bits / 30.9) + 2;
  require(need <= std::size(detail::kCrtPrimes), errc::resource_bound,
          "matrix too large for the CRT prime table");
  std::vector<BigInt> c(n + 1, 0);
  BigInt mod = 1;
  for (size_t t = 0; t < need; ++t) {
    uint64_t p = detail::kCrtPrimes[t];
    auto cp = detail::char_poly_mod(A, p);
    if (t == 0) {
      for (size_t i = 0; i <= n; ++i) c[i] = cp[i];
      mod = p;
    } else {
      // CRT lift: x = c + mod * ((cp - c) / mod mod p)
      uint64_t mp = (mod % p).convert_to<uint64_t>();
      uint64_t minv = detail::inv_mod(mp, p);
      for (size_t i = 0; i <= n; ++i) {
        BigInt ci = c[i] % static_cast<int64_t>(p);
        if (ci < 0) ci += static_cast<int64_t>(p);
        uint64_t d = (p + cp[i] - ci.convert_to<uint64_t>() % p) % p;
        c[i] += mod * static_cast<int64_t>((__uint128_t)d * minv % p);
      }
      mod *= p;
    }
  }
  // symmetric range
  BigInt half = mod / 2;
  for (auto& x : c) {
    x %= mod;
    if (x < 0) x += mod;
    if (x > half) x -= mod;
  }
  return IntPoly(std::move(c));
}

/// Exact determinant of a square matrix of integer polynomials, by the
/// Bareiss fraction-free elimination with row pivoting.
inline IntPoly det_poly_bareiss(std::vector<std::vector<IntPoly>> m) {
  size_t n = m.size();
  if (n == 0) return IntPoly(BigInt(1));
  IntPoly prev(BigInt(1));
  int sign_flips = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};  // singular
      std::swap(m[k], m[piv]);
      ++sign_flips;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
    prev = m[k][k];
  }
  IntPoly det = m[n - 1][n - 1];
  return sign_flips % 2 ? -det : det;
}

}  // namespace kneadkit
