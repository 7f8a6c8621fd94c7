#include <doctest.h>

#include "braidcong/matrix.hpp"
#include "braidcong/rng.hpp"
#include "braidcong/symplectic.hpp"

#include <string>
#include <vector>

using namespace braidcong;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

IntegerMatrix random_matrix(Rng& rng, int dim, long bound) {
  IntegerMatrix m(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = rng.range(-bound, bound);
  return m;
}

// Product of elementary row operations: unimodular by construction.
IntegerMatrix random_unimodular(Rng& rng, int dim, int ops) {
  IntegerMatrix m = IntegerMatrix::identity(dim);
  for (int t = 0; t < ops; ++t) {
    int i = static_cast<int>(rng.below(dim));
    int j = static_cast<int>(rng.below(dim));
    if (i == j) continue;
    IntegerMatrix e = IntegerMatrix::identity(dim);
    e.at(i, j) = rng.range(-3, 3);
    m = m * e;
  }
  return m;
}

}  // namespace

TEST_CASE("integer matrix ring laws") {
  Rng rng(kDefaultSeed, "matrix-ring");
  IntegerMatrix i3 = IntegerMatrix::identity(3);
  for (int t = 0; t < 50; ++t) {
    IntegerMatrix a = random_matrix(rng, 3, 6);
    IntegerMatrix b = random_matrix(rng, 3, 6);
    IntegerMatrix c = random_matrix(rng, 3, 6);
    CHECK(a * i3 == a);
    CHECK(i3 * a == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
  }
}

TEST_CASE("apply acts as matrix times column vector") {
  IntegerMatrix a = from_rows({{1, 2}, {3, 4}});
  IntVector v{Int(5), Int(-1)};
  IntVector got = a.apply(v);
  CHECK(got[0] == 3);
  CHECK(got[1] == 11);
}

TEST_CASE("determinant: known values and multiplicativity") {
  CHECK(from_rows({{3, 7}, {1, 4}}).det() == 5);
  CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).det() == 0);
  CHECK(from_rows({{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 7}}).det() == 210);
  Rng rng(kDefaultSeed, "matrix-det");
  for (int t = 0; t < 30; ++t) {
    IntegerMatrix a = random_matrix(rng, 4, 4);
    IntegerMatrix b = random_matrix(rng, 4, 4);
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("adjugate identity A adj(A) = det(A) I") {
  Rng rng(kDefaultSeed, "matrix-adj");
  for (int t = 0; t < 30; ++t) {
    IntegerMatrix a = random_matrix(rng, 3, 5);
    IntegerMatrix prod = a * a.adjugate();
    Int d = a.det();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(prod.at(r, c) == (r == c ? d : Int(0)));
  }
}

TEST_CASE("unimodular inverse and integer powers") {
  Rng rng(kDefaultSeed, "matrix-inv");
  for (int t = 0; t < 25; ++t) {
    IntegerMatrix a = random_unimodular(rng, 3, 6);
    CHECK(a * a.inverse_unimodular() == IntegerMatrix::identity(3));
    CHECK(a.inverse_unimodular() * a == IntegerMatrix::identity(3));
    CHECK(a.pow(0) == IntegerMatrix::identity(3));
    CHECK(a.pow(4) == a * a * a * a);
    CHECK(a.pow(-3) == a.inverse_unimodular().pow(3));
  }
  CHECK_THROWS(from_rows({{2, 0}, {0, 1}}).inverse_unimodular());
}

TEST_CASE("integer matrix json round trip keeps huge entries exact") {
  IntegerMatrix a = from_rows({{2, 1}, {1, 1}}).pow(120);
  nlohmann::json j = to_json(a);
  CHECK(j["mod"].is_null());
  CHECK(j["rows"][0][0].is_string());
  IntegerMatrix back = integer_matrix_from_json(j);
  CHECK(back == a);
  CHECK(a.at(0, 0) > Int("100000000000000000000000000000000000000"));
}

TEST_CASE("modular matrix arithmetic matches reduced integer arithmetic") {
  Rng rng(kDefaultSeed, "matrix-mod");
  for (std::uint32_t m : {2u, 3u, 6u, 30u, 97u}) {
    for (int t = 0; t < 20; ++t) {
      IntegerMatrix a = random_matrix(rng, 3, 50);
      IntegerMatrix b = random_matrix(rng, 3, 50);
      ModularMatrix am = reduce_mod(a, m);
      ModularMatrix bm = reduce_mod(b, m);
      CHECK(am * bm == reduce_mod(a * b, m));
      CHECK(am + bm == reduce_mod(a + b, m));
      CHECK(am - bm == reduce_mod(a - b, m));
      CHECK(am.transposed() == reduce_mod(a.transposed(), m));
      CHECK(am.pow(5) == reduce_mod(a.pow(5), m));
    }
  }
}

TEST_CASE("modular inverse, scaling and vector action") {
  Rng rng(kDefaultSeed, "matrix-mod-inv");
  for (std::uint32_t m : {3u, 5u, 30u}) {
    for (int t = 0; t < 20; ++t) {
      ModularMatrix a = reduce_mod(random_unimodular(rng, 3, 4), m);
      CHECK(a * a.inverse() == ModularMatrix::identity(3, m));
      CHECK(a.inverse() * a == ModularMatrix::identity(3, m));
    }
  }
  ModularMatrix s = ModularMatrix::identity(2, 7).scaled(3);
  CHECK(s.at(0, 0) == 3);
  CHECK(s.at(0, 1) == 0);
  std::vector<std::uint32_t> v{1, 2};
  ModularMatrix a(2, 7);
  a.set(0, 0, 1);
  a.set(0, 1, 3);
  a.set(1, 0, 2);
  a.set(1, 1, 1);
  std::vector<std::uint32_t> got = a.apply(v);
  CHECK(got[0] == 0);  // 1 + 6 = 7 = 0 mod 7
  CHECK(got[1] == 4);
}

TEST_CASE("modular matrix keys separate distinct elements") {
  Rng rng(kDefaultSeed, "matrix-key");
  std::vector<ModularMatrix> seen;
  for (int t = 0; t < 40; ++t) seen.push_back(reduce_mod(random_matrix(rng, 2, 40), 7));
  for (size_t x = 0; x < seen.size(); ++x) {
    for (size_t y = 0; y < seen.size(); ++y) {
      CHECK((seen[x].key() == seen[y].key()) == (seen[x] == seen[y]));
    }
  }
}

TEST_CASE("modular matrix json round trip") {
  ModularMatrix a(2, 6);
  a.set(0, 0, 1);
  a.set(0, 1, 5);
  a.set(1, 0, 4);
  a.set(1, 1, 1);
  nlohmann::json j = to_json(a);
  CHECK(j["mod"] == 6);
  CHECK(modular_matrix_from_json(j) == a);
}

TEST_CASE("mod_inverse on units, failure on non-units") {
  for (std::uint32_t m : {5u, 6u, 30u, 97u}) {
    for (std::uint32_t a = 1; a < m; ++a) {
      std::uint32_t g = a, h = m;
      while (h != 0) {
        std::uint32_t r = g % h;
        g = h;
        h = r;
      }
      if (g == 1) {
        CHECK(std::uint64_t(a) * mod_inverse(a, m) % m == 1);
      } else {
        CHECK_THROWS(mod_inverse(a, m));
      }
    }
  }
}

TEST_CASE("alternating form validation and skew pairing") {
  CHECK_THROWS(AlternatingForm(from_rows({{0, 1}, {1, 0}})));
  CHECK_THROWS(AlternatingForm(from_rows({{1, 1}, {-1, 0}})));
  AlternatingForm e(from_rows({{0, -1}, {1, 0}}));
  Rng rng(kDefaultSeed, "matrix-form");
  for (int t = 0; t < 30; ++t) {
    IntVector x{Int(rng.range(-9, 9)), Int(rng.range(-9, 9))};
    IntVector y{Int(rng.range(-9, 9)), Int(rng.range(-9, 9))};
    CHECK(e.pairing(x, x) == 0);
    CHECK(e.pairing(x, y) == -e.pairing(y, x));
  }
  CHECK(e.pairing({Int(1), Int(0)}, {Int(0), Int(1)}) == -1);
}
