#include <doctest.h>

#include "braidcong/enumgrp.hpp"
#include "braidcong/rep.hpp"
#include "braidcong/rng.hpp"
#include "braidcong/symplectic.hpp"

#include <vector>

using namespace braidcong;

namespace {

std::vector<ModularMatrix> artin_images(int n, std::uint32_t m) {
  RepSpace s = rep_space(n);
  std::vector<ModularMatrix> out;
  for (int i = 1; i < n; ++i) out.push_back(rho_mod(s, BraidWord{n, {i}}, m));
  return out;
}

}  // namespace

TEST_CASE("closure of small linear groups") {
  FiniteMatrixGroup g2 = FiniteMatrixGroup::generate(artin_images(3, 2));
  CHECK(g2.complete());
  CHECK(g2.order() == 6);
  CHECK(!g2.is_abelian());
  CHECK(g2.exponent() == 6);

  FiniteMatrixGroup g3 = FiniteMatrixGroup::generate(artin_images(3, 3));
  CHECK(g3.order() == 24);
  CHECK(g3.exponent() == 12);
  CHECK(g3.dim() == 2);
  CHECK(g3.modulus() == 3);
}

TEST_CASE("element set is closed and generator-order independent") {
  std::vector<ModularMatrix> gens = artin_images(3, 3);
  FiniteMatrixGroup g = FiniteMatrixGroup::generate(gens);
  Rng rng(kDefaultSeed, "enum-closure");
  for (int t = 0; t < 100; ++t) {
    const ModularMatrix& a = g.elements()[rng.below(g.size())];
    const ModularMatrix& b = g.elements()[rng.below(g.size())];
    CHECK(g.contains(a * b));
    CHECK(g.contains(a.inverse()));
  }
  std::vector<ModularMatrix> reversed(gens.rbegin(), gens.rend());
  FiniteMatrixGroup h = FiniteMatrixGroup::generate(reversed);
  CHECK(g.same_group(h));
  CHECK(h.same_group(g));
  CHECK(g.order() == h.order());
}

TEST_CASE("enumeration limit semantics") {
  std::vector<ModularMatrix> gens = artin_images(3, 3);
  FiniteMatrixGroup exact = FiniteMatrixGroup::generate(gens, 24);
  CHECK(exact.complete());
  CHECK(exact.order() == 24);
  FiniteMatrixGroup cut = FiniteMatrixGroup::generate(gens, 23);
  CHECK(!cut.complete());
  CHECK(cut.size() <= 24);
  CHECK_THROWS(cut.order());
  CHECK_THROWS_AS(bfs_generate(gens, 10), EnumLimitExceeded);
}

TEST_CASE("orbit and stabilizer sizes multiply to the group order") {
  FiniteMatrixGroup g = FiniteMatrixGroup::generate(artin_images(3, 3));
  std::vector<std::uint32_t> e1{1, 0};
  CHECK(g.orbit(e1).size() == 8);  // all nonzero vectors of F_3^2
  CHECK(g.stabilizer_order(e1) == 3);
  CHECK(g.orbit(std::vector<std::uint32_t>{0, 0}).size() == 1);
}

TEST_CASE("symmetric group recognition") {
  // Images of the cubes of the generators mod 6 form a copy of S_3.
  RepSpace s = rep_space(3);
  std::vector<ModularMatrix> gens;
  for (const CongruenceElement& e : b33_generators()) gens.push_back(rho_mod(s, e.word, 6));
  FiniteMatrixGroup g = FiniteMatrixGroup::generate(gens);
  CHECK(g.complete());
  CHECK(g.order() == 6);
  CHECK(recognize_symmetric(g, 3));
  // Same order as 4!, but not isomorphic to S_4 (unique involution).
  FiniteMatrixGroup sl23 = FiniteMatrixGroup::generate(artin_images(3, 3));
  CHECK(sl23.order() == 24);
  CHECK(!recognize_symmetric(sl23, 4));
  // S_4 itself, as signed permutation matrices mod 5 would be overkill; use the
  // mod-2 image for S_3 once more with the wrong n.
  FiniteMatrixGroup s3 = FiniteMatrixGroup::generate(artin_images(3, 2));
  CHECK(recognize_symmetric(s3, 3));
  CHECK(!recognize_symmetric(s3, 4));
}

TEST_CASE("reduction of congruence generators onto the coprime-level group") {
  Report r32 = verify_exact_sequence_32(3, 2, 1);
  CHECK(r32.all_pass());
  Report r23 = verify_exact_sequence_32(2, 3, 1);
  CHECK(r23.all_pass());
  CHECK_THROWS(verify_exact_sequence_32(2, 4, 1));  // levels must be coprime
}

TEST_CASE("kernel of the prime-square reduction") {
  Report r3 = verify_cp_kernel_generation(3, 1);
  CHECK(r3.all_pass());
  Report r2 = verify_cp_kernel_generation(2, 1);
  CHECK(r2.all_pass());
}

TEST_CASE("pure braid image orders factored over prime powers") {
  Report r = verify_theorem_b(3, 6);
  CHECK(r.all_pass());
  CHECK_THROWS(verify_theorem_b(3, 8));   // 2-part limited to 2 or 4
  CHECK_THROWS(verify_theorem_b(3, 18));  // odd part must be squarefree
}
