#include <catch2/catch_amalgamated.hpp>

#include "kneadkit/classify.hpp"
#include "oracles.hpp"

using namespace kneadkit;

namespace {
const SignedGraph& G2 = unimodal_system();
const SignedGraph& TREE = tree_system();
const SignedGraph& FOUR = four_vertex_system();
Word w2(const std::string& s) { return Word(G2, s); }
}  // namespace

TEST_CASE("periodic words") {
  CHECK(is_periodic(w2("10")));
  CHECK_FALSE(is_periodic(w2("01")));
  CHECK(is_periodic(Word(TREE, "3210")));
  CHECK_FALSE(is_periodic(Word(TREE, "3102")));  // wrap edge (2,3) is absent
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(w2("1001")));
  CHECK_FALSE(is_irreducible(w2("11")));
  CHECK_FALSE(is_irreducible(w2("1010")));
  CHECK(primitive_root(w2("10101010")) == w2("10"));
}

TEST_CASE("extremality") {
  CHECK(is_extremal(w2("1001")));
  CHECK(is_extremal(w2("10")));
  CHECK_FALSE(is_extremal(w2("110")));
  CHECK(classify(w2("110")).failure_witness == size_t{1});
}

TEST_CASE("admissibility") {
  CHECK(is_admissible_word(w2("1001")));
  CHECK_FALSE(is_admissible_word(w2("10")));  // extremal but sign -1
  CHECK(is_admissible_word(w2("101")));
}

TEST_CASE("dominance") {
  CHECK(is_dominant(w2("1001")));
  CHECK(is_dominant(w2("10")));
  CHECK_FALSE(is_dominant(w2("11")));
}

TEST_CASE("W_n enumeration") {
  auto w1 = enumerate_Wn(G2, 1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].str() == "1");
  auto ws = enumerate_Wn(G2, 2);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].str() == "11");
  CHECK(ws[1].str() == "10");
  auto tn = enumerate_Wn(TREE, 2);
  REQUIRE(tn.size() == 1);  // "31" lacks the edge (1,3), "32" lacks (2,3), "33" lacks (3,3)
  CHECK(tn[0].str() == "30");
  CHECK_THROWS_AS(enumerate_Wn(G2, 12, 100), error);  // cap
}

TEST_CASE("next and prev") {
  CHECK(next_word(w2("11"))->str() == "10");
  CHECK(next_word(w2("1001"))->str() == "1000");
  CHECK(prev_word(w2("10"))->str() == "11");
  CHECK_FALSE(next_word(w2("10")).has_value());
  CHECK_FALSE(prev_word(w2("11")).has_value());
  CHECK_THROWS_AS(next_word(w2("01")), error);
  // inverse property across several lengths
  for (size_t n : {3u, 4u, 5u}) {
    auto ws = enumerate_Wn(G2, n);
    for (const auto& w : ws) {
      auto p = prev_word(w);
      if (p) CHECK(*next_word(*p) == w);
    }
  }
}

TEST_CASE("extremality agrees with the rotation oracle") {
  for (const SignedGraph* g : {&G2, &TREE, &FOUR})
    for (size_t n = 1; n <= 7; ++n)
      for (const auto& w : enumerate_Wn(*g, n))
        CHECK(is_extremal(w) == oracles::brute_extremal(w));
}

TEST_CASE("dominant implies extremal and irreducible") {
  for (const SignedGraph* g : {&G2, &TREE, &FOUR})
    for (size_t n = 1; n <= 8; ++n)
      for (const auto& w : enumerate_Wn(*g, n))
        if (is_dominant(w)) {
          CHECK(is_extremal(w));
          CHECK(is_irreducible(w));
        }
}

TEST_CASE("admissible implies extremal with positive sign") {
  for (size_t n = 1; n <= 8; ++n)
    for (const auto& w : enumerate_Wn(G2, n))
      if (is_admissible_word(w)) {
        CHECK(is_extremal(w));
        CHECK(sign(w) == 1);
      }
}

TEST_CASE("sandwich property of equal prefix-suffixes") {
  // extremal irreducible words: a word equal to its length-k suffix at a
  // proper k forces that prefix to carry sign -1
  for (const SignedGraph* g : {&G2, &TREE, &FOUR})
    for (size_t n = 1; n <= 10; ++n)
      for (const auto& w : enumerate_Wn(*g, n)) {
        if (!is_extremal(w) || !is_irreducible(w)) continue;
        for (size_t k = 1; k < w.size(); ++k)
          if (compare_words(w.prefix(k), w.suffix(k)) == Comparison::Equal)
            CHECK(sign(w.prefix(k)) == -1);
      }
}
