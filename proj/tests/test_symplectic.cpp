#include <doctest.h>

#include "braidcong/matrix.hpp"
#include "braidcong/rng.hpp"
#include "braidcong/symplectic.hpp"

#include <numeric>
#include <vector>

using namespace braidcong;

namespace {

IntVector random_vector(Rng& rng, int dim, long bound) {
  IntVector v(dim);
  for (auto& x : v) x = rng.range(-bound, bound);
  return v;
}

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("standard and chain Gram matrices") {
  AlternatingForm j = standard_J(2);
  CHECK(j.dim() == 4);
  CHECK(j.gram().at(0, 2) == 1);
  CHECK(j.gram().at(1, 3) == 1);
  CHECK(j.gram().at(2, 0) == -1);
  CHECK(j.gram().at(3, 1) == -1);
  CHECK(j.gram().at(0, 1) == 0);

  AlternatingForm e = tridiagonal_form(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Int want = (r == c + 1) ? 1 : (c == r + 1) ? -1 : 0;
      CHECK(e.gram().at(r, c) == want);
    }
  // Odd dimension is allowed (degenerate form with one-dimensional radical).
  AlternatingForm odd = tridiagonal_form(5);
  IntVector u{Int(1), Int(0), Int(1), Int(0), Int(1)};
  for (int c = 0; c < 5; ++c) {
    IntVector ec(5);
    ec[c] = 1;
    CHECK(odd.pairing(u, ec) == 0);
  }
}

TEST_CASE("transvections: golden 2x2 values and power law") {
  AlternatingForm e2 = tridiagonal_form(2);
  IntVector e1{Int(1), Int(0)}, e2v{Int(0), Int(1)};
  CHECK(transvection(e1, e2, Int(1)) == from_rows({{1, 1}, {0, 1}}));
  CHECK(transvection(e2v, e2, Int(1)) == from_rows({{1, 0}, {-1, 1}}));
  IntegerMatrix prod = (transvection(e1, e2, Int(1)) * transvection(e2v, e2, Int(1))).pow(3);
  CHECK(prod == from_rows({{-1, 0}, {0, -1}}));

  Rng rng(kDefaultSeed, "symp-transvection");
  for (int dim : {2, 4, 6}) {
    AlternatingForm e = tridiagonal_form(dim);
    for (int t = 0; t < 40; ++t) {
      IntVector v = random_vector(rng, dim, 3);
      Int a = rng.range(-5, 5), b = rng.range(-5, 5);
      IntegerMatrix ta = transvection(v, e, a);
      CHECK(is_isometry(ta, e));
      CHECK(ta * transvection(v, e, b) == transvection(v, e, a + b));
    }
  }
  CHECK(transvection(e1, e2, Int(0)) == IntegerMatrix::identity(2));
}

TEST_CASE("congruence generator families") {
  CHECK(church_putman_set(Int(3), 1).size() == 3);
  CHECK(church_putman_set(Int(3), 2).size() == 10);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int half : {1, 2}) {
      for (const IntegerMatrix& g : church_putman_set(Int(p), half)) {
        CHECK(in_principal_congruence(g, p));
        CHECK(is_isometry(g, standard_J(half)));
      }
    }
  }
  // U at half = 1 is the explicit 2x2 block [[1+r, r], [-r, 1-r]].
  IntegerMatrix u = church_putman(CPKind::U, 1, 1, Int(3), 1);
  CHECK(u == from_rows({{4, 3}, {-3, -2}}));
  // Level-1 generators are isometries but not congruent to I mod 3.
  CHECK(!in_principal_congruence(church_putman(CPKind::X, 1, 1, Int(1), 1), 3));
  // Congruent to I mod 3 but not an isometry.
  IntegerMatrix bad = IntegerMatrix::identity(2);
  bad.at(0, 0) = 4;
  CHECK(!in_principal_congruence(bad, 3));
}

TEST_CASE("reduction mod m normalizes negative entries") {
  IntegerMatrix a = from_rows({{-1, -7}, {12, 4}});
  ModularMatrix r = reduce_mod(a, 5);
  CHECK(r.at(0, 0) == 4);
  CHECK(r.at(0, 1) == 3);
  CHECK(r.at(1, 0) == 2);
  CHECK(r.at(1, 1) == 4);
}

TEST_CASE("prime power factorization") {
  CHECK(prime_power_factors(1).empty());
  CHECK(prime_power_factors(6) == std::vector<std::uint32_t>{2, 3});
  CHECK(prime_power_factors(12) == std::vector<std::uint32_t>{4, 3});
  CHECK(prime_power_factors(30) == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(prime_power_factors(36) == std::vector<std::uint32_t>{4, 9});
  CHECK(prime_power_factors(97) == std::vector<std::uint32_t>{97});
}

TEST_CASE("chinese remainder splitting is a ring isomorphism") {
  Rng rng(kDefaultSeed, "symp-crt");
  for (std::uint32_t m : {6u, 12u, 30u, 36u}) {
    std::vector<std::uint32_t> factors = prime_power_factors(m);
    for (int t = 0; t < 40; ++t) {
      IntegerMatrix a(3), b(3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          a.at(r, c) = rng.range(0, 200);
          b.at(r, c) = rng.range(0, 200);
        }
      ModularMatrix am = reduce_mod(a, m), bm = reduce_mod(b, m);
      std::vector<ModularMatrix> pa = crt_split(am), pb = crt_split(bm);
      REQUIRE(pa.size() == factors.size());
      for (size_t k = 0; k < pa.size(); ++k) {
        CHECK(pa[k].modulus() == factors[k]);
        CHECK(pa[k] * pb[k] == crt_split(am * bm)[k]);
      }
      CHECK(crt_join(pa) == am);
    }
  }
}

TEST_CASE("symplectic group and Lie algebra orders") {
  CHECK(sp_order(1, 2) == 6);
  CHECK(sp_order(1, 3) == 24);
  CHECK(sp_order(1, 5) == 120);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(2, 3) == 51840);
  CHECK(sp_lie_order(1, 2) == 8);
  CHECK(sp_lie_order(1, 3) == 27);
  CHECK(sp_lie_order(2, 2) == 1024);
  CHECK(sp_lie_order(2, 3) == 59049);
}

TEST_CASE("lie algebra membership test") {
  // sl2 over Z/3: trace zero iff member.
  ModularMatrix a(2, 3);
  a.set(0, 0, 1);
  a.set(1, 1, 2);
  a.set(0, 1, 2);
  CHECK(lie_check(a, 1));
  ModularMatrix id = ModularMatrix::identity(2, 3);
  CHECK(!lie_check(id, 1));
}

TEST_CASE("log map recovers the displacement and is additive on the kernel") {
  // K = I + 3A mod 9  ->  log(K) = A mod 3.
  ModularMatrix k(2, 9);
  k.set(0, 0, 1 + 3 * 2);
  k.set(0, 1, 3 * 1);
  k.set(1, 0, 3 * 2);
  k.set(1, 1, 1 + 3 * 1);
  ModularMatrix l = log_map(k, 3, 3);
  CHECK(l.at(0, 0) == 2);
  CHECK(l.at(0, 1) == 1);
  CHECK(l.at(1, 0) == 2);
  CHECK(l.at(1, 1) == 1);

  std::vector<ModularMatrix> gens;
  for (const IntegerMatrix& g : church_putman_set(Int(3), 1)) gens.push_back(reduce_mod(g, 9));
  Rng rng(kDefaultSeed, "symp-log");
  for (int t = 0; t < 60; ++t) {
    ModularMatrix x = gens[rng.below(gens.size())];
    ModularMatrix y = gens[rng.below(gens.size())];
    ModularMatrix expect = log_map(x, 3, 3) + log_map(y, 3, 3);
    CHECK(log_map(x * y, 3, 3) == expect);
    CHECK(lie_check(log_map(x, 3, 3), 1));
  }
}

TEST_CASE("annihilator membership over Z/2") {
  ModularMatrix h(2, 2);
  h.set(0, 0, 1);
  h.set(0, 1, 1);
  h.set(1, 0, 0);
  h.set(1, 1, 0);
  IntVector u{Int(1), Int(1)};
  CHECK(ann_check(h, u));  // rows (1,1),(0,0) kill (1,1) mod 2
  IntVector e1{Int(1), Int(0)};
  CHECK(!ann_check(h, e1));
}

TEST_CASE("basis change takes the chain form to the standard form") {
  for (int dim : {2, 4, 6}) {
    AlternatingForm e = tridiagonal_form(dim);
    IntegerMatrix p = symplectic_basis_change(e);
    Int d = p.det();
    CHECK((d == 1 || d == -1));
    CHECK(p.transposed() * e.gram() * p == standard_J(dim / 2).gram());
  }
}

TEST_CASE("modular isometry and fixed vector checks") {
  AlternatingForm e = tridiagonal_form(4);
  IntVector v{Int(1), Int(0), Int(1), Int(0)};
  IntegerMatrix t = transvection(v, e, Int(2));
  for (std::uint32_t m : {2u, 3u, 6u}) CHECK(is_isometry(reduce_mod(t, m), e));
  CHECK(fixes_vector(IntegerMatrix::identity(4), v));
  // A transvection fixes its own vector exactly; with even power it is I mod 2.
  CHECK(fixes_vector(t, v));
  CHECK(reduce_mod(t, 2).is_identity());
  CHECK(!fixes_vector(t, IntVector{Int(0), Int(0), Int(0), Int(1)}));
  CHECK(!fixes_vector(reduce_mod(t, 3), IntVector{Int(0), Int(0), Int(0), Int(1)}));
}
