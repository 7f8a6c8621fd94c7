#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidcong {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

// Dense square matrix over Z with exact arithmetic.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
  static IntegerMatrix identity(int dim);

  int dim() const { return dim_; }
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  IntVector apply(const IntVector& v) const;  // matrix * column vector
  IntegerMatrix transposed() const;
  Int det() const;                 // fraction-free (Bareiss)
  IntegerMatrix adjugate() const;  // cofactor matrix, transposed
  IntegerMatrix inverse_unimodular() const;  // requires det = +-1
  IntegerMatrix pow(long e) const;           // negative e requires det = +-1

  bool is_identity() const;
  bool is_zero() const;
  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntegerMatrix& x, const IntegerMatrix& y) { return !(x == y); }

private:
  int dim_ = 0;
  std::vector<Int> a_;
};

// Dense square matrix over Z/m, entries stored reduced to [0, m).
class ModularMatrix {
public:
  ModularMatrix() = default;
  ModularMatrix(int dim, std::uint32_t mod);
  static ModularMatrix identity(int dim, std::uint32_t mod);

  int dim() const { return dim_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
  void set(int r, int c, std::uint64_t v) { a_[static_cast<size_t>(r) * dim_ + c] = static_cast<std::uint32_t>(v % mod_); }

  ModularMatrix operator*(const ModularMatrix& rhs) const;
  ModularMatrix operator+(const ModularMatrix& rhs) const;
  ModularMatrix operator-(const ModularMatrix& rhs) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  ModularMatrix transposed() const;
  ModularMatrix scaled(std::uint64_t c) const;
  ModularMatrix inverse() const;  // requires det to be a unit mod m
  ModularMatrix pow(std::uint64_t e) const;

  bool is_identity() const;
  bool is_zero() const;
  // Canonical byte encoding of (dim, mod, entries); injective per fixed dim/mod.
  std::string key() const;
  friend bool operator==(const ModularMatrix& x, const ModularMatrix& y) {
    return x.dim_ == y.dim_ && x.mod_ == y.mod_ && x.a_ == y.a_;
  }
  friend bool operator!=(const ModularMatrix& x, const ModularMatrix& y) { return !(x == y); }

private:
  int dim_ = 0;
  std::uint32_t mod_ = 0;
  std::vector<std::uint32_t> a_;
};

// Nondegenerate alternating bilinear form given by its Gram matrix E:
// pairing(x, y) = x^T E y.  E must be skew-symmetric with zero diagonal.
class AlternatingForm {
public:
  AlternatingForm() = default;
  explicit AlternatingForm(IntegerMatrix gram);
  int dim() const { return gram_.dim(); }
  const IntegerMatrix& gram() const { return gram_; }
  Int pairing(const IntVector& x, const IntVector& y) const;

private:
  IntegerMatrix gram_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t m);  // throws if gcd(a, m) != 1

// JSON wire format: {"dim": N, "mod": m-or-null, "rows": [[...], ...]}.
// Integer matrices carry entries as decimal strings, modular ones as numbers.
nlohmann::json to_json(const IntegerMatrix& m);
nlohmann::json to_json(const ModularMatrix& m);
IntegerMatrix integer_matrix_from_json(const nlohmann::json& j);
ModularMatrix modular_matrix_from_json(const nlohmann::json& j);

}  // namespace braidcong
