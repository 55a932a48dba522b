// Walks the full pipeline on the unimodal system: classify a word, build its
// Markov decomposition, list the spectrum, then run a small persistence
// experiment and print where the eigenvalues land.

#include <iostream>

#include "kneadkit/kneadkit.hpp"

namespace kk = kneadkit;

int main() {
  const kk::SignedGraph& g = kk::unimodal_system();
  kk::Word w(g, "1001"), v(g, "101");

  std::cout << "classify " << w.str() << ":\n"
            << kk::classification_json(w, kk::classify(w)).dump(2) << "\n\n";

  auto part = kk::markov_partition(w);
  auto M = kk::incidence_matrix(part);
  std::cout << w.str() << " has " << part.pieces.size() << " Markov pieces, entropy "
            << kk::entropy(M) << "\n";
  std::cout << "zeta denominator: " << kk::zeta_denominator(M).str("t") << "\n\n";

  auto res = kk::run_persistence(w, v, 0.05, 8);
  std::cout << "persistence toward the inside spectrum of " << v.str() << ": "
            << (res.success ? "succeeded" : "did not converge") << " at n = " << res.achieved_n
            << " (eps " << res.achieved_epsilon << ")\n";
  for (const auto& s : res.steps)
    std::cout << "  n=" << s.n << " |w'|=" << s.word_length << " entropy_diff=" << s.entropy_diff
              << " worst_distance=" << s.worst_distance << "\n";
  return 0;
}
