#include "braidcong/symplectic.hpp"

#include <numeric>
#include <stdexcept>

namespace braidcong {

AlternatingForm standard_J(int half) {
  if (half < 1) throw std::invalid_argument("standard_J: need half >= 1");
  IntegerMatrix g(2 * half);
  for (int i = 0; i < half; ++i) {
    g.at(i, half + i) = 1;
    g.at(half + i, i) = -1;
  }
  return AlternatingForm(std::move(g));
}

// Degenerate for odd N (radical spanned by e1+e3+...+eN), unimodular for even N.
AlternatingForm tridiagonal_form(int N) {
  if (N < 2) throw std::invalid_argument("tridiagonal_form: need N >= 2");
  IntegerMatrix g(N);
  for (int i = 0; i + 1 < N; ++i) {
    g.at(i + 1, i) = 1;
    g.at(i, i + 1) = -1;
  }
  return AlternatingForm(std::move(g));
}

bool is_isometry(const IntegerMatrix& A, const AlternatingForm& E) {
  if (A.dim() != E.dim()) throw std::invalid_argument("is_isometry: dimension mismatch");
  return A.transposed() * E.gram() * A == E.gram();
}

bool is_isometry(const ModularMatrix& A, const AlternatingForm& E) {
  if (A.dim() != E.dim()) throw std::invalid_argument("is_isometry: dimension mismatch");
  ModularMatrix e = reduce_mod(E.gram(), A.modulus());
  return A.transposed() * e * A == e;
}

bool fixes_vector(const IntegerMatrix& A, const IntVector& u) { return A.apply(u) == u; }

bool fixes_vector(const ModularMatrix& A, const IntVector& u) {
  if (static_cast<int>(u.size()) != A.dim()) throw std::invalid_argument("fixes_vector: dimension mismatch");
  std::vector<std::uint32_t> v(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Int r = u[i] % A.modulus();
    if (r < 0) r += A.modulus();
    v[i] = static_cast<std::uint32_t>(r);
  }
  return A.apply(v) == v;
}

IntegerMatrix transvection(const IntVector& v, const AlternatingForm& E, const Int& power) {
  const int N = E.dim();
  if (static_cast<int>(v.size()) != N) throw std::invalid_argument("transvection: dimension mismatch");
  bool nonzero = false;
  for (const Int& c : v) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("transvection: zero vector");
  // x -> x + power * (x^T E v) * v, i.e. I + power * v * (E v)^T ... with the
  // row covector w^T = (column E v)^T read off coordinatewise:
  IntVector ev = E.gram().apply(v);
  IntegerMatrix out = IntegerMatrix::identity(N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) out.at(r, c) += power * v[r] * ev[c];
  return out;
}

namespace {

void put_block(IntegerMatrix& m, int row0, int col0, int i, int j, const Int& r) {
  m.at(row0 + i, col0 + j) += r;
}

}  // namespace

IntegerMatrix church_putman(CPKind kind, int i, int j, const Int& r, int half) {
  const int n = half;
  if (n < 1) throw std::invalid_argument("church_putman: need half >= 1");
  IntegerMatrix m = IntegerMatrix::identity(2 * n);
  auto in_range = [n](int x) { return 1 <= x && x <= n; };
  switch (kind) {
    case CPKind::X:
      if (!(in_range(i) && in_range(j) && i <= j)) throw std::invalid_argument("church_putman X: need 1 <= i <= j <= half");
      put_block(m, n, 0, i - 1, j - 1, r);
      if (i != j) put_block(m, n, 0, j - 1, i - 1, r);
      break;
    case CPKind::Y:
      if (!(in_range(i) && in_range(j) && i <= j)) throw std::invalid_argument("church_putman Y: need 1 <= i <= j <= half");
      put_block(m, 0, n, i - 1, j - 1, r);
      if (i != j) put_block(m, 0, n, j - 1, i - 1, r);
      break;
    case CPKind::Z:
      if (!(in_range(i) && in_range(j) && i != j)) throw std::invalid_argument("church_putman Z: need i != j in range");
      put_block(m, 0, 0, i - 1, j - 1, r);
      put_block(m, n, n, j - 1, i - 1, -r);
      break;
    case CPKind::W:
      if (!(1 <= i && i < n)) throw std::invalid_argument("church_putman W: need 1 <= i < half");
      // upper-left block I + b_i(r); lower-right block I - b_i(r)^T
      put_block(m, 0, 0, i - 1, i - 1, r);
      put_block(m, 0, 0, i - 1, i, r);
      put_block(m, 0, 0, i, i - 1, -r);
      put_block(m, 0, 0, i, i, -r);
      put_block(m, n, n, i - 1, i - 1, -r);
      put_block(m, n, n, i, i - 1, -r);
      put_block(m, n, n, i - 1, i, r);
      put_block(m, n, n, i, i, r);
      break;
    case CPKind::U:
      if (!(i == 1 && j == 1)) throw std::invalid_argument("church_putman U: only U_1 exists");
      put_block(m, 0, 0, 0, 0, r);
      put_block(m, 0, n, 0, 0, r);
      put_block(m, n, 0, 0, 0, -r);
      put_block(m, n, n, 0, 0, -r);
      break;
  }
  return m;
}

std::vector<IntegerMatrix> church_putman_set(const Int& p, int half) {
  if (half < 1) throw std::invalid_argument("church_putman_set: need half >= 1");
  std::vector<IntegerMatrix> out;
  for (int i = 1; i <= half; ++i)
    for (int j = i; j <= half; ++j) {
      out.push_back(church_putman(CPKind::X, i, j, p, half));
      out.push_back(church_putman(CPKind::Y, i, j, p, half));
    }
  for (int i = 1; i <= half; ++i)
    for (int j = 1; j <= half; ++j)
      if (i != j) out.push_back(church_putman(CPKind::Z, i, j, p, half));
  for (int i = 1; i < half; ++i) out.push_back(church_putman(CPKind::W, i, 0, p, half));
  out.push_back(church_putman(CPKind::U, 1, 1, p, half));
  return out;
}

ModularMatrix reduce_mod(const IntegerMatrix& A, std::uint32_t m) {
  ModularMatrix out(A.dim(), m);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Int r = A.at(i, j) % m;
      if (r < 0) r += m;
      out.set(i, j, static_cast<std::uint64_t>(r));
    }
  return out;
}

std::vector<std::uint32_t> prime_power_factors(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("prime_power_factors: need m >= 1");
  if (m == 1) return {};  // empty product
  std::vector<std::uint32_t> out;
  std::uint32_t rest = m;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= rest; ++p) {
    if (rest % p) continue;
    std::uint32_t q = 1;
    while (rest % p == 0) {
      q *= p;
      rest /= p;
    }
    out.push_back(q);
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

std::vector<ModularMatrix> crt_split(const ModularMatrix& A, const std::vector<std::uint32_t>& factors) {
  std::uint64_t prod = 1;
  for (std::uint32_t f : factors) prod *= f;
  if (prod != A.modulus()) throw std::invalid_argument("crt_split: factors do not multiply to the modulus");
  for (size_t x = 0; x < factors.size(); ++x)
    for (size_t y = x + 1; y < factors.size(); ++y)
      if (std::gcd(factors[x], factors[y]) != 1) throw std::invalid_argument("crt_split: factors are not coprime");
  std::vector<ModularMatrix> out;
  out.reserve(factors.size());
  for (std::uint32_t f : factors) {
    ModularMatrix part(A.dim(), f);
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) part.set(i, j, A.at(i, j));
    out.push_back(std::move(part));
  }
  return out;
}

std::vector<ModularMatrix> crt_split(const ModularMatrix& A) { return crt_split(A, prime_power_factors(A.modulus())); }

ModularMatrix crt_join(const std::vector<ModularMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("crt_join: no parts");
  const int dim = parts[0].dim();
  std::uint64_t mod = 1;
  for (const ModularMatrix& p : parts) {
    if (p.dim() != dim) throw std::invalid_argument("crt_join: dimension mismatch");
    mod *= p.modulus();
  }
  if (mod > 0xffff'ffffULL) throw std::invalid_argument("crt_join: joined modulus too large");
  for (size_t x = 0; x < parts.size(); ++x)
    for (size_t y = x + 1; y < parts.size(); ++y)
      if (std::gcd(parts[x].modulus(), parts[y].modulus()) != 1)
        throw std::invalid_argument("crt_join: moduli are not coprime");
  ModularMatrix out(dim, static_cast<std::uint32_t>(mod));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      // Incremental CRT across the parts.
      std::uint64_t value = 0, acc_mod = 1;
      for (const ModularMatrix& p : parts) {
        std::uint64_t target = p.at(i, j) % p.modulus();
        std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(acc_mod % p.modulus()), p.modulus());
        std::uint64_t diff = (target + p.modulus() - value % p.modulus()) % p.modulus();
        value += acc_mod * ((diff * inv) % p.modulus());
        acc_mod *= p.modulus();
      }
      out.set(i, j, value);
    }
  return out;
}

bool in_principal_congruence(const IntegerMatrix& A, std::uint32_t m) {
  if (A.dim() % 2) return false;
  IntegerMatrix diff = A - IntegerMatrix::identity(A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      if (diff.at(i, j) % m != 0) return false;
  return is_isometry(A, standard_J(A.dim() / 2));
}

bool lie_check(const ModularMatrix& A, int half) {
  if (A.dim() != 2 * half) throw std::invalid_argument("lie_check: dimension mismatch");
  ModularMatrix j = reduce_mod(standard_J(half).gram(), A.modulus());
  return (A.transposed() * j + j * A).is_zero();
}

ModularMatrix log_map(const ModularMatrix& K, std::uint32_t m, std::uint32_t l) {
  if (K.modulus() != m * l) throw std::invalid_argument("log_map: K must live mod m*l");
  ModularMatrix out(K.dim(), l);
  for (int i = 0; i < K.dim(); ++i)
    for (int j = 0; j < K.dim(); ++j) {
      std::uint32_t v = K.at(i, j);
      if (i == j) v = (v + K.modulus() - 1) % K.modulus();
      if (v % m) throw std::domain_error("log_map: K is not congruent to I mod m");
      out.set(i, j, v / m);
    }
  return out;
}

bool ann_check(const ModularMatrix& h, const IntVector& u) {
  if (h.modulus() != 2) throw std::invalid_argument("ann_check: h must be mod 2");
  if (static_cast<int>(u.size()) != h.dim()) throw std::invalid_argument("ann_check: dimension mismatch");
  std::vector<std::uint32_t> v(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Int r = u[i] % 2;
    if (r < 0) r += 2;
    v[i] = static_cast<std::uint32_t>(r);
  }
  for (std::uint32_t c : h.apply(v))
    if (c) return false;
  return true;
}

Int sp_order(int g, std::uint32_t p) {
  if (g < 1) throw std::invalid_argument("sp_order: need g >= 1");
  Int order = 1;
  Int pp(p);
  for (int i = 0; i < g * g; ++i) order *= pp;
  Int pow = 1;
  for (int i = 1; i <= g; ++i) {
    pow *= pp * pp;
    order *= pow - 1;
  }
  return order;
}

Int sp_lie_order(int g, std::uint32_t p) {
  if (g < 1) throw std::invalid_argument("sp_lie_order: need g >= 1");
  Int order = 1;
  for (int i = 0; i < g * (2 * g + 1); ++i) order *= p;
  return order;
}

IntegerMatrix symplectic_basis_change(const AlternatingForm& E) {
  const int N = E.dim();
  if (N % 2) throw std::invalid_argument("symplectic_basis_change: odd dimension");
  Int d = E.gram().det();
  if (d != 1 && d != -1) throw std::invalid_argument("symplectic_basis_change: form is not unimodular");
  const int half = N / 2;

  // Integral symplectic Gram-Schmidt.  Invariant: the working basis extends
  // the chosen hyperbolic pairs and pairs trivially with them.
  std::vector<IntVector> basis(N, IntVector(N));
  for (int i = 0; i < N; ++i) basis[i][i] = 1;
  std::vector<IntVector> a_vecs, b_vecs;
  auto pairing = [&E](const IntVector& x, const IntVector& y) { return E.pairing(x, y); };

  while (!basis.empty()) {
    // Find a pair with pairing +-1; must exist for a unimodular form
    // restricted to the orthogonal complement of a hyperbolic sublattice.
    int pi = -1, pj = -1;
    for (size_t x = 0; x < basis.size() && pi < 0; ++x)
      for (size_t y = x + 1; y < basis.size(); ++y) {
        Int v = pairing(basis[x], basis[y]);
        if (v == 1 || v == -1) {
          pi = static_cast<int>(x);
          pj = static_cast<int>(y);
          break;
        }
      }
    if (pi < 0) throw std::domain_error("symplectic_basis_change: no unimodular pairing found");
    IntVector a = basis[pi], b = basis[pj];
    if (pairing(a, b) == -1) std::swap(a, b);
    basis.erase(basis.begin() + pj);
    basis.erase(basis.begin() + pi);
    // Project the rest onto the orthogonal complement of span(a, b).
    for (IntVector& v : basis) {
      Int ca = pairing(v, b);   // coefficient along a
      Int cb = pairing(a, v);   // coefficient along b
      for (int t = 0; t < N; ++t) v[t] = v[t] - ca * a[t] - cb * b[t];
    }
    a_vecs.push_back(std::move(a));
    b_vecs.push_back(std::move(b));
  }

  IntegerMatrix p(N);
  for (int c = 0; c < half; ++c)
    for (int r = 0; r < N; ++r) {
      p.at(r, c) = a_vecs[c][r];
      p.at(r, half + c) = b_vecs[c][r];
    }
  if (!(p.transposed() * E.gram() * p == standard_J(half).gram()))
    throw std::domain_error("symplectic_basis_change: construction failed");
  return p;
}

}  // namespace braidcong
