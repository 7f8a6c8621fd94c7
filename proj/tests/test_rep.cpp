#include <doctest.h>

#include "braidcong/garside.hpp"
#include "braidcong/rep.hpp"
#include "braidcong/rng.hpp"

#include <vector>

using namespace braidcong;

TEST_CASE("representation space shapes") {
  RepSpace odd = rep_space(5);
  CHECK(odd.dim == 4);
  CHECK(!odd.has_fixed_vector);
  CHECK(odd.sigma.size() == 4);
  RepSpace even = rep_space(4);
  CHECK(even.dim == 4);
  REQUIRE(even.has_fixed_vector);
  CHECK(even.fixed_vector == IntVector{Int(1), Int(0), Int(1), Int(0)});
  for (int n = 3; n <= 7; ++n) {
    RepSpace s = rep_space(n);
    for (size_t i = 0; i < s.sigma.size(); ++i)
      CHECK(s.sigma[i] * s.sigma_inv[i] == IntegerMatrix::identity(s.dim));
  }
  CHECK_THROWS(rep_space(2));
}

TEST_CASE("golden images of the generators on three strands") {
  RepSpace s = rep_space(3);
  IntegerMatrix t1 = rho(s, BraidWord{3, {1}});
  IntegerMatrix t2 = rho(s, BraidWord{3, {2}});
  CHECK(t1.at(0, 0) == 1);
  CHECK(t1.at(0, 1) == 1);
  CHECK(t1.at(1, 0) == 0);
  CHECK(t1.at(1, 1) == 1);
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(0, 1) == 0);
  CHECK(t2.at(1, 0) == -1);
  CHECK(t2.at(1, 1) == 1);
}

TEST_CASE("rho is a homomorphism and preserves the form") {
  Rng rng(kDefaultSeed, "rep-hom");
  for (int n : {3, 4, 5}) {
    RepSpace s = rep_space(n);
    for (int t = 0; t < 60; ++t) {
      BraidWord a = rng.word(n, 12);
      BraidWord b = rng.word(n, 12);
      CHECK(rho(s, compose(a, b)) == rho(s, a) * rho(s, b));
      CHECK(rho(s, inverse(a)) == rho(s, a).inverse_unimodular());
      IntegerMatrix m = rho(s, a);
      CHECK(is_isometry(m, s.form));
      if (s.has_fixed_vector) CHECK(fixes_vector(m, s.fixed_vector));
    }
  }
}

TEST_CASE("modular evaluation equals reduction of the integral image") {
  Rng rng(kDefaultSeed, "rep-mod");
  for (int n : {3, 4}) {
    RepSpace s = rep_space(n);
    for (std::uint32_t m : {2u, 3u, 6u, 10u}) {
      for (int t = 0; t < 40; ++t) {
        BraidWord w = rng.word(n, 30);
        CHECK(rho_mod(s, w, m) == reduce_mod(rho(s, w), m));
      }
    }
  }
}

TEST_CASE("congruence membership basics") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    BraidWord w{3, {}};
    for (std::uint32_t t = 0; t < p; ++t) w.letters.push_back(1);
    CHECK(in_congruence(w, p));
    CHECK(!in_congruence(BraidWord{3, {1}}, p));
  }
  // Band generator squares to the double transvection: trivial mod 2.
  CHECK(in_congruence(pure_generator(1, 3, 4), 2));
  // a_{i,j}^p lands in level 2p.
  CHECK(in_congruence(power(pure_generator(1, 2, 3), 3), 6));
  CHECK(in_congruence(power(pure_generator(1, 3, 4), 5), 10));
  CHECK(!in_torelli(BraidWord{3, {1, 1}}));
}

TEST_CASE("kernel structure: closure, inversion, conjugation, divisibility") {
  std::vector<CongruenceElement> gens = b33_generators();
  REQUIRE(gens.size() == 4);
  BraidWord x = gens[0].word, y = gens[2].word;
  CHECK(in_congruence(compose(x, y), 3));
  CHECK(in_congruence(inverse(x), 3));
  CHECK(in_congruence(conjugate(x, BraidWord{3, {2, -1, 2}}), 3));
  for (const CongruenceElement& e : cor54_generators(3, 3)) {
    CHECK(e.level == 6);
    CHECK(in_congruence(e.word, 6));
    CHECK(in_congruence(e.word, 2));  // level divides imply membership at divisors
    CHECK(in_congruence(e.word, 3));
  }
}

TEST_CASE("separating chain twists lie in the integral kernel") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 5}}) {
    CongruenceElement e = separating_chain_element(k, n);
    CHECK(e.level == 0);
    CHECK(in_torelli(e.word));
  }
  CHECK(separating_chain_element(1, 3).word == power(BraidWord{3, {1, 2}}, 6));
  CHECK_THROWS(separating_chain_element(2, 3));
}

TEST_CASE("odd chain squares") {
  CHECK(odd_chain_square_check(1, 3));
  CHECK(odd_chain_square_check(3, 5));
  CHECK(odd_chain_square_check(3, 6));
}

TEST_CASE("involution element levels and side-condition flag") {
  CongruenceElement e5 = involution_element(5, 3);
  CHECK(e5.level == 5);
  CHECK(!e5.flagged);
  CHECK(in_congruence(e5.word, 5));
  CongruenceElement e3 = involution_element(3, 3);
  CHECK(e3.flagged);
  CHECK(in_congruence(e3.word, 3));
}

TEST_CASE("nested twist words and their mod-p action") {
  CHECK(a_k_word(1, 3, 3).letters.empty());
  CHECK(a_k_word(3, 3, 5).letters == std::vector<int>{4, 3, 3, 4, 2, -3, 2});
  CHECK(a_k_action_check(1, 3, 3));
  CHECK(a_k_action_check(3, 3, 5));
  CHECK(a_k_action_check(3, 5, 5));
  CongruenceElement c = center_element(3, 3, 5);
  CHECK(c.level == 3);
  CHECK(in_congruence(c.word, 3));
}

TEST_CASE("twist-generator relator families stay in level p") {
  CHECK(wajnryb_relators(3, 3).size() == 1);
  CHECK(wajnryb_relators(3, 5).size() == 3);
  CHECK(wajnryb_relators(5, 3).size() == 2);
  CHECK(wajnryb_relators(3, 3, true).size() == 3);
  for (const BraidWord& r : wajnryb_relators(3, 5)) CHECK(in_congruence(r, 5));
  for (const BraidWord& r : wajnryb_relators(5, 3)) CHECK(in_congruence(r, 3));
  CHECK_THROWS(wajnryb_relators(3, 4));
}

TEST_CASE("band-generator relator families stay in level p") {
  for (const BraidWord& r : sypre_relators(3, 3)) CHECK(in_congruence(r, 3));
  CHECK(!sypre_relators(3, 3).empty());
  CHECK(!sypre_relators(5, 3).empty());
}

TEST_CASE("four-element generating set of the level-3 kernel on three strands") {
  std::vector<CongruenceElement> g = b33_generators();
  REQUIRE(g.size() == 4);
  CHECK(g[0].word.letters == std::vector<int>{1, 1, 1});
  CHECK(g[1].word.letters == std::vector<int>{2, 2, 2});
  CHECK(g[2].word.letters == std::vector<int>{2, 1, 1, 1, -2});
  CHECK(g[3].word.letters == std::vector<int>{2, 2, 1, 1, 1, -2, -2});
  for (const CongruenceElement& e : g) {
    CHECK(e.level == 3);
    CHECK(in_congruence(e.word, 3));
  }
  std::vector<std::pair<BraidWord, BraidWord>> ids = b33_proof_identities();
  CHECK(!ids.empty());
  for (const auto& [lhs, rhs] : ids) CHECK(words_equal(lhs, rhs));
  CHECK(b33_alternate_set_check());
}

TEST_CASE("quotient-by-permutation checks") {
  Report r = symmetric_quotient_check(3, 3, 40);
  CHECK(r.all_pass());
  Report r2 = symmetric_quotient_check(4, 3, 25);
  CHECK(r2.all_pass());
}
