#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "kneadkit/intpoly.hpp"

namespace kneadkit {

using Complex = std::complex<double>;

namespace detail {

using CL = std::complex<long double>;

inline long double scaled_residual(const std::vector<long double>& c, CL z, CL pz) {
  long double s = 0, az = std::max<long double>(1.0L, std::abs(z)), zp = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    s += std::fabs(c[i]) * zp;
    zp *= az;
  }
  return s > 0 ? std::abs(pz) / s : std::abs(pz);
}

}  // namespace detail

/// All complex roots of a nonzero integer polynomial with multiplicity, by
/// Aberth-Ehrlich simultaneous iteration in extended precision. Roots at the
/// origin are split off exactly first. Deterministic.
///
/// `max_scaled_residual` reports the worst |p(z)| relative to the coefficient
/// magnitude at z; callers enforce their own acceptance threshold.
struct RootResult {
  std::vector<Complex> roots;  // sorted by (re, im)
  size_t origin_multiplicity = 0;
  long double max_scaled_residual = 0;
  int iterations = 0;
  bool converged = true;
};

inline RootResult find_roots(const IntPoly& p) {
  using detail::CL;
  RootResult out;
  require(!p.is_zero(), errc::precondition, "cannot take roots of the zero polynomial");
  size_t val = p.valuation();
  out.origin_multiplicity = val;
  IntPoly q = p.shifted_down(val);
  // peel integer roots at +-1 exactly; they are ubiquitous (transient blocks)
  // and would otherwise cap the attainable accuracy as multiple roots
  size_t ones = 0, minus_ones = 0;
  for (int r : {1, -1}) {
    while (q.degree() >= 1 && q.eval(BigInt(r)) == 0) {
      q = q.div_exact(IntPoly(std::vector<BigInt>{-r, 1}));
      (r == 1 ? ones : minus_ones)++;
    }
  }
  int deg = q.degree();
  if (deg == 0) {
    out.roots.assign(val, Complex(0, 0));
    out.roots.insert(out.roots.end(), ones, Complex(1, 0));
    out.roots.insert(out.roots.end(), minus_ones, Complex(-1, 0));
    std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return out;
  }

  std::vector<long double> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = q.coeff(i).convert_to<long double>();

  // Cauchy-style radius for initial placement
  long double lead = std::fabs(c[deg]);
  long double radius = 0;
  for (int i = 0; i < deg; ++i)
    radius = std::max(radius, std::pow(std::fabs(c[i]) / lead, 1.0L / (deg - i)));
  radius = std::max<long double>(radius, 0.5L);

  std::vector<CL> z(deg);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int k = 0; k < deg; ++k) {
    long double ang = 2 * pi * k / deg + 0.4L;  // fixed offset avoids real-axis symmetry traps
    z[k] = radius * CL(std::cos(ang), std::sin(ang));
  }

  auto eval2 = [&](CL x, CL& pv, CL& dv) {
    pv = c[deg];
    dv = 0;
    for (int i = deg - 1; i >= 0; --i) {
      dv = dv * x + pv;
      pv = pv * x + c[i];
    }
  };

  const int max_iter = 600;
  int it = 0;
  for (; it < max_iter; ++it) {
    long double worst_step = 0;
    for (int k = 0; k < deg; ++k) {
      CL pv, dv;
      eval2(z[k], pv, dv);
      if (std::abs(pv) == 0) continue;
      CL newton = dv == CL(0) ? CL(1e-30L, 0) : pv / dv;
      CL sum = 0;
      for (int j = 0; j < deg; ++j)
        if (j != k) {
          CL d = z[k] - z[j];
          if (std::abs(d) < 1e-60L) d = CL(1e-60L, 0);
          sum += CL(1) / d;
        }
      CL denom = CL(1) - newton * sum;
      CL step = std::abs(denom) < 1e-60L ? newton : newton / denom;
      z[k] -= step;
      worst_step = std::max(worst_step, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    if (worst_step < 1e-15L) break;
  }
  out.iterations = it;

  long double worst = 0;
  for (int k = 0; k < deg; ++k) {
    CL pv, dv;
    eval2(z[k], pv, dv);
    worst = std::max(worst, detail::scaled_residual(c, z[k], pv));
  }
  out.max_scaled_residual = worst;
  out.converged = worst < 1e-10L;

  out.roots.reserve(deg + val + ones + minus_ones);
  for (size_t i = 0; i < val; ++i) out.roots.emplace_back(0, 0);
  for (size_t i = 0; i < ones; ++i) out.roots.emplace_back(1, 0);
  for (size_t i = 0; i < minus_ones; ++i) out.roots.emplace_back(-1, 0);
  for (int k = 0; k < deg; ++k)
    out.roots.emplace_back(static_cast<double>(z[k].real()), static_cast<double>(z[k].imag()));
  std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace kneadkit
