#include "braidcong/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace braidcong {

IntegerMatrix IntegerMatrix::identity(int dim) {
  IntegerMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntegerMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
  IntegerMatrix out(dim_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix difference: dimension mismatch");
  IntegerMatrix out(dim_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

IntVector IntegerMatrix::apply(const IntVector& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("matrix apply: dimension mismatch");
  IntVector out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int IntegerMatrix::det() const {
  if (dim_ == 0) return 1;
  IntegerMatrix w = *this;  // Bareiss fraction-free elimination
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < dim_; ++k) {
    if (w.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < dim_; ++r)
        if (w.at(r, k) != 0) { piv = r; break; }
      if (piv < 0) return 0;
      for (int c = 0; c < dim_; ++c) std::swap(w.at(k, c), w.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < dim_; ++i)
      for (int j = k + 1; j < dim_; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign * w.at(dim_ - 1, dim_ - 1);
}

IntegerMatrix IntegerMatrix::adjugate() const {
  IntegerMatrix out(dim_);
  if (dim_ == 0) return out;
  if (dim_ == 1) {
    out.at(0, 0) = 1;
    return out;
  }
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      IntegerMatrix minor(dim_ - 1);
      for (int i = 0, mi = 0; i < dim_; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < dim_; ++j) {
          if (j == c) continue;
          minor.at(mi, mj++) = at(i, j);
        }
        ++mi;
      }
      Int cof = minor.det();
      if ((r + c) % 2) cof = -cof;
      out.at(c, r) = cof;  // transpose of cofactor matrix
    }
  return out;
}

IntegerMatrix IntegerMatrix::inverse_unimodular() const {
  Int d = det();
  if (d != 1 && d != -1) throw std::domain_error("inverse_unimodular: determinant is not a unit");
  IntegerMatrix adj = adjugate();
  if (d == -1)
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) adj.at(i, j) = -adj.at(i, j);
  return adj;
}

IntegerMatrix IntegerMatrix::pow(long e) const {
  IntegerMatrix base = e < 0 ? inverse_unimodular() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  IntegerMatrix acc = identity(dim_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool IntegerMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

ModularMatrix::ModularMatrix(int dim, std::uint32_t mod)
    : dim_(dim), mod_(mod), a_(static_cast<size_t>(dim) * dim) {
  if (mod < 2) throw std::invalid_argument("modulus must be at least 2");
}

ModularMatrix ModularMatrix::identity(int dim, std::uint32_t mod) {
  ModularMatrix m(dim, mod);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1 % mod);
  return m;
}

ModularMatrix ModularMatrix::operator*(const ModularMatrix& rhs) const {
  if (dim_ != rhs.dim_ || mod_ != rhs.mod_) throw std::invalid_argument("modular product: shape or modulus mismatch");
  ModularMatrix out(dim_, mod_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < dim_; ++k) {
        acc += static_cast<std::uint64_t>(at(i, k)) * rhs.at(k, j);
        acc %= mod_;
      }
      out.set(i, j, acc);
    }
  return out;
}

ModularMatrix ModularMatrix::operator+(const ModularMatrix& rhs) const {
  if (dim_ != rhs.dim_ || mod_ != rhs.mod_) throw std::invalid_argument("modular sum: shape or modulus mismatch");
  ModularMatrix out(dim_, mod_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + static_cast<std::uint64_t>(rhs.a_[i])) % mod_;
  return out;
}

ModularMatrix ModularMatrix::operator-(const ModularMatrix& rhs) const {
  if (dim_ != rhs.dim_ || mod_ != rhs.mod_) throw std::invalid_argument("modular difference: shape or modulus mismatch");
  ModularMatrix out(dim_, mod_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + static_cast<std::uint64_t>(mod_) - rhs.a_[i]) % mod_;
  return out;
}

std::vector<std::uint32_t> ModularMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("modular apply: dimension mismatch");
  std::vector<std::uint32_t> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < dim_; ++j) {
      acc += static_cast<std::uint64_t>(at(i, j)) * (v[j] % mod_);
      acc %= mod_;
    }
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

ModularMatrix ModularMatrix::transposed() const {
  ModularMatrix out(dim_, mod_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.set(j, i, at(i, j));
  return out;
}

ModularMatrix ModularMatrix::scaled(std::uint64_t c) const {
  ModularMatrix out(dim_, mod_);
  c %= mod_;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = static_cast<std::uint32_t>((a_[i] * c) % mod_);
  return out;
}

ModularMatrix ModularMatrix::inverse() const {
  // Lift to Z, take the adjugate, and rescale by det^{-1} mod m.
  IntegerMatrix lift(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) lift.at(i, j) = at(i, j);
  Int d = lift.det() % mod_;
  if (d < 0) d += mod_;
  std::uint32_t dinv = mod_inverse(static_cast<std::uint32_t>(d), mod_);
  IntegerMatrix adj = lift.adjugate();
  ModularMatrix out(dim_, mod_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Int v = (adj.at(i, j) % mod_ + mod_) % mod_;
      out.set(i, j, static_cast<std::uint64_t>(v) * dinv);
    }
  return out;
}

ModularMatrix ModularMatrix::pow(std::uint64_t e) const {
  ModularMatrix acc = identity(dim_, mod_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool ModularMatrix::is_identity() const { return *this == identity(dim_, mod_); }

bool ModularMatrix::is_zero() const {
  for (std::uint32_t v : a_)
    if (v) return false;
  return true;
}

std::string ModularMatrix::key() const {
  std::string s;
  s.reserve(8 + a_.size() * 4);
  auto push32 = [&s](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  push32(static_cast<std::uint32_t>(dim_));
  push32(mod_);
  for (std::uint32_t v : a_) push32(v);
  return s;
}

AlternatingForm::AlternatingForm(IntegerMatrix gram) : gram_(std::move(gram)) {
  for (int i = 0; i < gram_.dim(); ++i) {
    if (gram_.at(i, i) != 0) throw std::invalid_argument("alternating form: nonzero diagonal");
    for (int j = 0; j < i; ++j)
      if (gram_.at(i, j) != -gram_.at(j, i)) throw std::invalid_argument("alternating form: not skew-symmetric");
  }
}

Int AlternatingForm::pairing(const IntVector& x, const IntVector& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("pairing: dimension mismatch");
  IntVector ey = gram_.apply(y);
  Int acc = 0;
  for (int i = 0; i < dim(); ++i) acc += x[i] * ey[i];
  return acc;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t m) {
  std::int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: value is not a unit");
  return static_cast<std::uint32_t>(((s0 % m) + m) % m);
}

nlohmann::json to_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"mod", nullptr}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const ModularMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"mod", m.modulus()}, {"rows", std::move(rows)}};
}

namespace {

void check_matrix_shape(const nlohmann::json& j, int dim) {
  if (!j.contains("rows") || !j["rows"].is_array() || static_cast<int>(j["rows"].size()) != dim)
    throw std::invalid_argument("matrix json: rows must be a dim-sized array");
  for (const auto& row : j["rows"])
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("matrix json: each row must have dim entries");
}

}  // namespace

IntegerMatrix integer_matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw std::invalid_argument("matrix json: missing dim");
  int dim = j["dim"].get<int>();
  if (dim < 0) throw std::invalid_argument("matrix json: negative dim");
  if (j.contains("mod") && !j["mod"].is_null()) throw std::invalid_argument("matrix json: expected mod null for an integer matrix");
  check_matrix_shape(j, dim);
  IntegerMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int c = 0; c < dim; ++c) {
      const auto& cell = j["rows"][i][c];
      if (cell.is_string())
        m.at(i, c) = Int(cell.get<std::string>());
      else if (cell.is_number_integer())
        m.at(i, c) = Int(cell.get<long long>());
      else
        throw std::invalid_argument("matrix json: entries must be decimal strings or integers");
    }
  return m;
}

ModularMatrix modular_matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw std::invalid_argument("matrix json: missing dim");
  int dim = j["dim"].get<int>();
  if (dim < 0) throw std::invalid_argument("matrix json: negative dim");
  if (!j.contains("mod") || !j["mod"].is_number_unsigned()) throw std::invalid_argument("matrix json: missing mod");
  std::uint32_t mod = j["mod"].get<std::uint32_t>();
  check_matrix_shape(j, dim);
  ModularMatrix m(dim, mod);
  for (int i = 0; i < dim; ++i)
    for (int c = 0; c < dim; ++c) {
      const auto& cell = j["rows"][i][c];
      long long v;
      if (cell.is_string())
        v = std::stoll(cell.get<std::string>());
      else if (cell.is_number_integer())
        v = cell.get<long long>();
      else
        throw std::invalid_argument("matrix json: entries must be integers");
      long long r = v % static_cast<long long>(mod);
      if (r < 0) r += mod;
      m.set(i, c, static_cast<std::uint64_t>(r));
    }
  return m;
}

}  // namespace braidcong
