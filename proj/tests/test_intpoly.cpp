#include <catch2/catch_amalgamated.hpp>

#include "kneadkit/intmatrix.hpp"
#include "kneadkit/intpoly.hpp"
#include "kneadkit/roots.hpp"

using namespace kneadkit;

namespace {
IntPoly P(std::vector<int64_t> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPoly a = P({1, 2, 3});   // 3x^2 + 2x + 1
  IntPoly b = P({-1, 1});     // x - 1
  CHECK((a + b) == P({0, 3, 3}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == P({-1, -1, -1, 3}));
  CHECK(a.eval(BigInt(2)) == 17);
  CHECK(P({0, 0, 5, 0}).degree() == 2);  // trailing zeros trimmed
  CHECK(P({0, 0, 6}).valuation() == 2);
  CHECK(a.derivative() == P({2, 6}));
  CHECK(a.str("x") == "3x^2 + 2x + 1");
  CHECK(P({-1, 0, 1}).str() == "x^2 - 1");
}

TEST_CASE("exact division") {
  IntPoly p = P({-1, 0, 1});  // (x-1)(x+1)
  CHECK(p.div_exact(P({-1, 1})) == P({1, 1}));
  CHECK(P({2, 4}).div_scalar_exact(2) == P({1, 2}));
  CHECK_THROWS_AS(P({1, 2}).div_scalar_exact(2), error);
  CHECK_THROWS_AS(P({1, 1, 1}).div_exact(P({-1, 1})), error);
}

TEST_CASE("polynomial gcd") {
  IntPoly a = P({-1, 0, 1}) * P({1, 1});      // (x^2-1)(x+1)
  IntPoly b = P({-1, 1}) * P({1, 1});         // (x-1)(x+1)
  CHECK(poly_gcd(a, b) == P({-1, 0, 1}));
  CHECK(poly_gcd(P({2, 2}), P({4})) == P({1}));  // primitive parts
  CHECK(poly_gcd(IntPoly(), P({0, 3})) == P({0, 1}));
}

TEST_CASE("characteristic polynomials of small matrices") {
  IntMatrix I2(2);
  I2.at(0, 0) = I2.at(1, 1) = 1;
  CHECK(char_poly_faddeev(I2) == P({1, -2, 1}));  // (x-1)^2

  IntMatrix T(2);  // [[1,0],[1,1]]
  T.at(0, 0) = T.at(1, 0) = T.at(1, 1) = 1;
  CHECK(char_poly_faddeev(T) == P({1, -2, 1}));

  IntMatrix F(2);  // [[0,1],[1,1]]
  F.at(0, 1) = F.at(1, 0) = F.at(1, 1) = 1;
  CHECK(char_poly_faddeev(F) == P({-1, -1, 1}));  // x^2 - x - 1
}

TEST_CASE("modular and Faddeev characteristic polynomials agree") {
  // deterministic pseudo-random 0/1/2 matrices
  uint64_t state = 12345;
  auto rnd = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (size_t n : {5u, 17u, 30u, 41u}) {
    IntMatrix M(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) M.at(i, j) = static_cast<int64_t>(rnd() % 3) - 1;
    auto fl = char_poly_faddeev(M);
    auto cp = char_poly(M);
    CHECK(fl == cp);
  }
}

TEST_CASE("bareiss polynomial determinant") {
  // det(I - tM) for M = [[1,0],[1,1]] is (1-t)^2
  std::vector<std::vector<IntPoly>> a{{P({1, -1}), P({0})}, {P({0, -1}), P({1, -1})}};
  CHECK(det_poly_bareiss(a) == P({1, -2, 1}));
  // singular matrix of polynomials
  std::vector<std::vector<IntPoly>> s{{P({0, 1}), P({0, 1})}, {P({0, 1}), P({0, 1})}};
  CHECK(det_poly_bareiss(s).is_zero());
  // pivoting path: zero in the corner
  std::vector<std::vector<IntPoly>> piv{{IntPoly(), P({1})}, {P({1}), IntPoly()}};
  CHECK(det_poly_bareiss(piv) == P({-1}));
}

TEST_CASE("root finding") {
  // x^2 - x - 1: golden pair
  auto rr = find_roots(P({-1, -1, 1}));
  REQUIRE(rr.roots.size() == 2);
  CHECK(rr.converged);
  CHECK(std::abs(rr.roots[0] - Complex(-0.6180339887498949, 0)) < 1e-12);
  CHECK(std::abs(rr.roots[1] - Complex(1.618033988749895, 0)) < 1e-12);

  // x^3 (x-1)^2 (x^2+1): origin multiplicity and a complex pair
  IntPoly p = IntPoly::monomial(3) * P({1, -2, 1}) * P({1, 0, 1});
  auto r2 = find_roots(p);
  CHECK(r2.origin_multiplicity == 3);
  REQUIRE(r2.roots.size() == 7);
  CHECK(r2.converged);
  int on_i = 0;
  for (auto z : r2.roots)
    if (std::abs(z - Complex(0, 1)) < 1e-9 || std::abs(z - Complex(0, -1)) < 1e-9) ++on_i;
  CHECK(on_i == 2);

  // product of roots equals the constant term up to sign
  IntPoly q = P({6, -5, -2, 1});  // (x-1)(x+2)(x-3)
  auto r3 = find_roots(q);
  Complex prod = 1;
  for (auto z : r3.roots) prod *= z;
  CHECK(std::abs(prod - Complex(-6, 0)) < 1e-9);
}

TEST_CASE("matrix strongly connected components") {
  IntMatrix M(3);  // 0 -> 1 -> 0, 2 -> 0: two components
  M.at(0, 1) = M.at(1, 0) = M.at(2, 0) = 1;
  int c = 0;
  auto comp = M.sccs(&c);
  CHECK(c == 2);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[2] != comp[0]);
  CHECK_FALSE(M.irreducible());
  IntMatrix C(3);  // 3-cycle
  C.at(0, 1) = C.at(1, 2) = C.at(2, 0) = 1;
  CHECK(C.irreducible());
}
