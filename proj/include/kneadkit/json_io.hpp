#pragma once

#include <json.hpp>

#include "kneadkit/classify.hpp"
#include "kneadkit/constructor.hpp"
#include "kneadkit/experiments.hpp"
#include "kneadkit/markov.hpp"
#include "kneadkit/spectral.hpp"
#include "kneadkit/tuning.hpp"

namespace kneadkit {

using Json = nlohmann::ordered_json;

inline Json poly_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;  // ascending degree, exact coefficients as strings
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json complex_list_json(const std::vector<Complex>& zs) {
  Json a = Json::array();
  for (Complex z : zs) a.push_back(complex_json(z));
  return a;
}

inline Json classification_json(const Word& w, const ClassificationReport& r) {
  Json j;
  j["word"] = w.str();
  j["periodic"] = r.periodic;
  j["irreducible"] = r.irreducible;
  j["extremal"] = r.extremal;
  j["admissible"] = r.admissible;
  j["dominant"] = r.dominant;
  if (r.failure_witness)
    j["failure_witness"] = *r.failure_witness;
  else
    j["failure_witness"] = nullptr;
  return j;
}

inline Json tunability_json(const TunabilityReport& r) {
  Json j;
  j["w_min"] = r.w_min ? Json(r.w_min->str()) : Json(nullptr);
  j["verified_up_to"] = r.verified_up_to;
  j["tunable_up_to_bound"] = r.tunable_up_to_bound();
  Json v = Json::array();
  for (const auto& w : r.violations) v.push_back(w.str());
  j["violations"] = std::move(v);
  return j;
}

inline Json certified_json(const CertifiedWord& c) {
  Json j;
  j["word"] = c.word.str();
  j["certificate"] = classification_json(c.word, c.certificate);
  j["trace"] = c.trace;
  return j;
}

inline Json partition_json(const MarkovPartition& p) {
  const SignedGraph& g = *p.graph;
  Json j;
  j["word"] = p.word.str();
  Json pts = Json::array();
  for (const auto& e : p.points) pts.push_back(e.str(g));
  j["orbit_points"] = std::move(pts);
  Json pieces = Json::array();
  for (const auto& pc : p.pieces) {
    Json q;
    q["interval"] = pc.interval;
    q["cylinder"] = pc.cylinder;
    q["lower"] = pc.lower.str(g);
    q["upper"] = pc.upper.str(g);
    pieces.push_back(std::move(q));
  }
  j["pieces"] = std::move(pieces);
  j["dropped_singletons"] = p.dropped;
  return j;
}

inline Json matrix_json(const IncidenceMatrix& m) {
  Json j;
  j["size"] = m.size();
  Json rows = Json::array();
  for (size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < m.size(); ++k) row.push_back(m.m.at(i, k).convert_to<int64_t>());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["labels"] = m.labels;
  j["irreducible"] = m.irreducible();
  j["essentially_irreducible"] = essentially_irreducible(m);
  return j;
}

inline Json spectrum_json(const Spectrum& s) {
  Json j;
  j["eigenvalues"] = complex_list_json(s.eigenvalues);
  j["radius"] = s.radius;
  j["entropy"] = s.radius > 0 ? std::log(s.radius) : 0.0;
  j["circle_tol"] = s.circle_tol;
  j["inside"] = complex_list_json(s.inside);
  j["outside"] = complex_list_json(s.outside);
  j["on_circle"] = complex_list_json(s.on_circle);
  return j;
}

inline Json match_json(const MatchReport& r) {
  Json j;
  j["poly_roots_off_circle"] = complex_list_json(r.poly_roots);
  j["matrix_eigs_off_circle"] = complex_list_json(r.matrix_eigs);
  j["sizes_equal"] = r.sizes_equal;
  j["f_identically_zero"] = r.f_zero;
  Json pairs = Json::array();
  for (auto [a, b] : r.pairing) pairs.push_back({a, b});
  j["pairing"] = std::move(pairs);
  j["max_pair_distance"] = r.max_pair_distance;
  j["hausdorff"] = r.hausdorff;
  return j;
}

inline Json persistence_json(const PersistenceResult& r) {
  Json j;
  j["targets"] = complex_list_json(r.targets);
  j["target_entropy"] = r.target_entropy;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json q;
    q["n"] = s.n;
    q["word_length"] = s.word_length;
    q["word"] = s.word;
    q["entropy_diff"] = s.entropy_diff;
    q["target_distance"] = s.target_distance;
    q["worst_distance"] = s.worst_distance;
    steps.push_back(std::move(q));
  }
  j["steps"] = std::move(steps);
  j["success"] = r.success;
  j["achieved_n"] = r.achieved_n;
  j["achieved_epsilon"] = r.achieved_epsilon;
  return j;
}

}  // namespace kneadkit
