#include <catch2/catch_amalgamated.hpp>

#include "kneadkit/tuning.hpp"

using namespace kneadkit;

namespace {
const SignedGraph& G2 = unimodal_system();
const SignedGraph& TREE = tree_system();
const SignedGraph& FOUR = four_vertex_system();
Word w2(const std::string& s) { return Word(G2, s); }
}  // namespace

TEST_CASE("w_min of the built-in systems") {
  CHECK(find_w_min(G2, 4)->str() == "1");
  CHECK(find_w_min(FOUR, 4)->str() == "3");
  CHECK(find_w_min(TREE, 6)->str() == "3210");
}

TEST_CASE("tuning pairs") {
  auto p = find_tuning_pair(w2("1001"));
  REQUIRE(p.has_value());
  CHECK(p->lower.str() == "1001");
  CHECK(p->upper.str() == "1000");
  CHECK(sign(p->lower) == 1);
  CHECK(sign(p->upper) == -1);
  CHECK_THROWS_AS(find_tuning_pair(w2("10")), error);  // not admissible
}

TEST_CASE("tuning substitution") {
  TuningPair p{w2("1001"), w2("1000")};
  CHECK(tune(p, w2("1")).str() == "1000");
  CHECK(tune(p, w2("10")).str() == "10001001");
  CHECK(tune(p, w2("1001")).str() == "1000100110011000");
  CHECK_THROWS_AS(tune(p, w2("01")), error);  // not a unimodal periodic word
  CHECK_THROWS_AS(tune(p, w2("110")), error); // not extremal over the exponent system
}

TEST_CASE("tuning preserves order for a fixed pair") {
  TuningPair p{w2("1001"), w2("1000")};
  for (size_t m = 1; m <= 6; ++m) {
    auto ws = enumerate_Wn(G2, m);
    for (const auto& v : ws)
      for (const auto& v2 : ws) {
        if (!is_extremal(v) || !is_extremal(v2)) continue;
        CHECK(compare_words(v, v2) == compare_words(tune(p, v), tune(p, v2)));
      }
  }
}

TEST_CASE("renormalization detection") {
  auto r = detect_renormalization(w2("10001001"));
  REQUIRE(r.has_value());
  CHECK(r->first.lower.str() == "1001");
  CHECK(r->first.upper.str() == "1000");
  CHECK(r->second.str() == "10");
  CHECK(tune(r->first, r->second) == w2("10001001"));

  CHECK_FALSE(detect_renormalization(w2("1001")).has_value());
  CHECK_FALSE(detect_renormalization(w2("101")).has_value());
  // the doubled word is a tuning by the exponent 11
  auto r2 = detect_renormalization(w2("1010"));
  REQUIRE(r2.has_value());
  CHECK(r2->second.str() == "11");
}

TEST_CASE("renormalization round trip on all detected words") {
  for (size_t n = 1; n <= 10; ++n)
    for (const auto& w : enumerate_Wn(G2, n)) {
      if (!is_extremal(w)) continue;
      auto r = detect_renormalization(w);
      if (r) CHECK(tune(r->first, r->second) == w);
    }
}

TEST_CASE("base decomposition") {
  auto [b1, v1] = base_decomposition(w2("1000"));
  CHECK(b1.str() == "1001");
  CHECK(v1.str() == "1");
  auto [b2, v2] = base_decomposition(w2("10"));
  CHECK(b2.str() == "11");
  CHECK(v2.str() == "1");
  CHECK_THROWS_AS(base_decomposition(w2("111")), error);   // power of w_min
  CHECK_THROWS_AS(base_decomposition(w2("1001")), error);  // sign +1
}

TEST_CASE("base decomposition round trips over negative extremal words") {
  auto wm = find_w_min(G2, 8);
  for (size_t n = 1; n <= 8; ++n)
    for (const auto& w : enumerate_Wn(G2, n)) {
      if (!is_extremal(w) || sign(w) != -1) continue;
      if (n % wm->size() == 0 && w == wm->pow(n / wm->size())) continue;
      auto [base, v] = base_decomposition(w);
      CHECK(is_admissible_word(base));
      CHECK_FALSE(detect_renormalization(base).has_value());
      CHECK(tune({base, *next_word(base)}, v) == w);
    }
}

TEST_CASE("between lemma at finite scale") {
  // admissible sequences in [a' a^inf, a^inf] with period a multiple of |a|
  // are a^k or tunings of the pair (a, a')
  auto blocks_of_pair = [](const Word& b, const TuningPair& pr) -> bool {
    size_t d = pr.lower.size();
    if (b.size() % d) return false;
    std::vector<Vertex> bits;
    for (size_t i = 0; i < b.size(); i += d) {
      Word blk(b.graph(),
               std::vector<Vertex>(b.letters().begin() + i, b.letters().begin() + i + d));
      if (blk == pr.upper)
        bits.push_back(1);
      else if (blk == pr.lower)
        bits.push_back(0);
      else
        return false;
    }
    if (bits.front() != 1) return false;
    return is_extremal(Word(unimodal_system(), bits));
  };
  for (size_t m = 2; m <= 4; ++m)
    for (const auto& a : enumerate_Wn(G2, m)) {
      if (!is_admissible_word(a)) continue;
      auto pair = find_tuning_pair(a);
      if (!pair) continue;
      EPSeq lo{pair->upper.letters(), a.letters()};  // a' a^inf
      EPSeq hi = periodic_seq(a);
      for (size_t mult = 1; mult * m <= 12; ++mult)
        for (const auto& b : enumerate_Wn(G2, mult * m)) {
          if (!is_admissible_word(b)) continue;
          EPSeq bs = periodic_seq(b);
          if (compare_eps(G2, bs, lo) == Comparison::Less) continue;
          if (compare_eps(G2, bs, hi) == Comparison::Greater) continue;
          CHECK((b == a.pow(mult) || blocks_of_pair(b, *pair)));
        }
    }
}

TEST_CASE("tunability audits") {
  auto g2rep = check_tunable(G2, 8);
  CHECK(g2rep.w_min->str() == "1");
  CHECK(g2rep.violations.empty());
  CHECK(g2rep.tunable_up_to_bound());

  // The four-vertex and tree systems carry genuine condition-2 gaps; the
  // audit reports them rather than papering over.
  auto fourrep = check_tunable(FOUR, 6);
  CHECK(fourrep.w_min->str() == "3");
  CHECK_FALSE(fourrep.violations.empty());
  CHECK(fourrep.violations.front().str() == "320");

  auto treerep = check_tunable(TREE, 6);
  CHECK(treerep.w_min->str() == "3210");
  REQUIRE_FALSE(treerep.violations.empty());
  CHECK(treerep.violations.front().str() == "310");
}
