#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kneadkit/classify.hpp"
#include "kneadkit/constructor.hpp"
#include "kneadkit/parallel.hpp"
#include "kneadkit/spectral.hpp"

namespace kneadkit {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct TeapotRow {
  double re, im;     // eigenvalue
  double lambda;     // spectral radius of the source matrix
  std::string word;
};

struct TeapotCloud {
  std::string system;
  size_t max_len = 0;
  double circle_tol = 0;
  std::vector<TeapotRow> rows;

  std::string to_csv() const {
    std::string s = "re,im,lambda,word\n";
    for (const auto& r : rows)
      s += format_double(r.re) + "," + format_double(r.im) + "," + format_double(r.lambda) +
           "," + r.word + "\n";
    return s;
  }
};

/// One row per (admissible word, eigenvalue). Words in enumeration order,
/// eigenvalues sorted by (re, im); sweeps parallelize over words with
/// index-addressed aggregation.
inline TeapotCloud teapot_sweep(const SignedGraph& g, size_t max_len, double circle_tol = 1e-8,
                                uint64_t cap = kDefaultEnumerationCap) {
  require(max_len >= 1, errc::precondition, "max_len must be >= 1");
  TeapotCloud cloud;
  cloud.system = g.name();
  cloud.max_len = max_len;
  cloud.circle_tol = circle_tol;
  auto words = admissible_words(g, max_len, cap);
  std::vector<std::vector<TeapotRow>> per_word(words.size());
  parallel_for(words.size(), [&](size_t i) {
    const Word& w = words[i];
    auto sp = spectrum(incidence_matrix(markov_partition(w)), circle_tol);
    for (Complex z : sp.eigenvalues)
      per_word[i].push_back({z.real(), z.imag(), sp.radius, w.str()});
  });
  for (auto& rows : per_word)
    cloud.rows.insert(cloud.rows.end(), rows.begin(), rows.end());
  return cloud;
}

struct PersistenceStep {
  size_t n = 0;
  std::string word;
  size_t word_length = 0;
  double entropy_diff = 0;              // |h(w'_n) - h(w)|
  std::vector<double> target_distance;  // per inside eigenvalue of M_v
  double worst_distance = 0;
};

struct PersistenceResult {
  std::vector<Complex> targets;  // inside-circle eigenvalues of M_v
  double target_entropy = 0;     // h(w)
  std::vector<PersistenceStep> steps;
  bool success = false;
  size_t achieved_n = 0;
  double achieved_epsilon = 0;  // max of entropy diff and worst distance at success/best
};

/// Persistence experiment: bridge words w'_n = a^n c b^n keep the entropy of
/// w while dragging eigenvalues of the result toward every inside-circle
/// eigenvalue of M_v. Succeeds at the first n where both errors drop below
/// eps; otherwise reports the best n seen.
inline PersistenceResult run_persistence(const Word& w, const Word& v, double eps, size_t n_max,
                                         size_t search_cap = 64, double circle_tol = 1e-8) {
  require(eps > 0, errc::precondition, "eps must be positive");
  require(n_max >= 1, errc::precondition, "n_max must be >= 1");
  require(is_admissible_word(w), errc::precondition, "w must be admissible: " + w.str());
  require(is_admissible_word(v), errc::precondition, "v must be admissible: " + v.str());
  require(!detect_renormalization(w).has_value(), errc::precondition,
          "w must be nonrenormalizable: " + w.str());
  require(compare_periodic(v, w) == Comparison::Less, errc::precondition,
          "need v^inf < w^inf");
  auto Mw = incidence_matrix(markov_partition(w));
  require(essentially_irreducible(Mw), errc::precondition,
          "decomposition matrix of w must be (essentially) irreducible");

  PersistenceResult res;
  res.target_entropy = entropy(Mw);
  auto Mv = incidence_matrix(markov_partition(v));
  Spectrum sv = spectrum(Mv, circle_tol);
  for (Complex z : sv.inside)
    if (std::abs(z) > 1e-9) res.targets.push_back(z);

  double best = std::numeric_limits<double>::infinity();
  for (size_t n = 1; n <= n_max; ++n) {
    CertifiedWord u = concat_bridge(w, v, n, search_cap);
    auto sp = spectrum(incidence_matrix(markov_partition(u.word)), circle_tol);
    PersistenceStep step;
    step.n = n;
    step.word = u.word.str();
    step.word_length = u.word.size();
    step.entropy_diff = std::fabs(std::log(sp.radius) - res.target_entropy);
    for (Complex z : res.targets) {
      double d = std::numeric_limits<double>::infinity();
      for (Complex e : sp.eigenvalues) d = std::min(d, std::abs(e - z));
      step.target_distance.push_back(d);
      step.worst_distance = std::max(step.worst_distance, d);
    }
    double achieved = std::max(step.entropy_diff, step.worst_distance);
    res.steps.push_back(step);
    if (achieved < best) {
      best = achieved;
      res.achieved_n = n;
      res.achieved_epsilon = achieved;
    }
    if (step.entropy_diff < eps && step.worst_distance < eps) {
      res.success = true;
      res.achieved_n = n;
      res.achieved_epsilon = achieved;
      break;
    }
  }
  return res;
}

}  // namespace kneadkit
