#pragma once

#include "braidcong/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace braidcong {

// Gram matrix [[0, I],[-I, 0]] on Z^{2*half}.
AlternatingForm standard_J(int half);

// Chain form on Z^N: E[i+1][i] = 1, E[i][i+1] = -1, zero elsewhere.
// Unimodular for even N; for odd N the radical is spanned by e1+e3+...+eN.
AlternatingForm tridiagonal_form(int N);

bool is_isometry(const IntegerMatrix& A, const AlternatingForm& E);
// Modular variant: A^T E A == E after reduction mod A.modulus().
bool is_isometry(const ModularMatrix& A, const AlternatingForm& E);
bool fixes_vector(const IntegerMatrix& A, const IntVector& u);
bool fixes_vector(const ModularMatrix& A, const IntVector& u);

// Matrix of x -> x + power * (x^T E v) * v; an isometry of E for every power.
IntegerMatrix transvection(const IntVector& v, const AlternatingForm& E, const Int& power);

enum class CPKind { X, Y, Z, W, U };

// Elementary symplectic congruence generators (dimension 2*half, form standard_J):
//   X_{i,j}(r) = I + [[0, 0], [se_{i,j}(r), 0]]          1 <= i <= j <= half
//   Y_{i,j}(r) = I + [[0, se_{i,j}(r)], [0, 0]]          1 <= i <= j <= half
//   Z_{i,j}(r) = I + [[e_{i,j}(r), 0], [0, -e_{j,i}(r)]] 1 <= i,j <= half, i != j
//   W_i(r)     = I + [[b_i(r), 0], [0, -b_i(r)^T]]       1 <= i < half
//   U_1(r)     = I + [[e_{1,1}(r), e_{1,1}(r)], [-e_{1,1}(r), -e_{1,1}(r)]]
// where se_{i,j} is symmetric, e_{i,j} a matrix unit, and b_i(r) has rows i, i+1
// equal to (r, r) and (-r, -r) on columns i, i+1.  The lower-right blocks of Z
// and W are the inverse-transpose completions, which is what makes each matrix
// an isometry of standard_J.
IntegerMatrix church_putman(CPKind kind, int i, int j, const Int& r, int half);
// All admissible X, Y, Z, W, U at parameter p; generates the principal level-p
// congruence subgroup of the symplectic group.
std::vector<IntegerMatrix> church_putman_set(const Int& p, int half);

ModularMatrix reduce_mod(const IntegerMatrix& A, std::uint32_t m);

// Prime-power factorization of m, as the list p_i^{k_i} in increasing order.
std::vector<std::uint32_t> prime_power_factors(std::uint32_t m);
std::vector<ModularMatrix> crt_split(const ModularMatrix& A, const std::vector<std::uint32_t>& factors);
std::vector<ModularMatrix> crt_split(const ModularMatrix& A);
ModularMatrix crt_join(const std::vector<ModularMatrix>& parts);

// A == I mod m entrywise and A is an isometry of standard_J.
bool in_principal_congruence(const IntegerMatrix& A, std::uint32_t m);

// A^T J + J A == 0 mod A.modulus(), J = standard_J(half): the defining relation
// of the symplectic Lie algebra over Z/l.
bool lie_check(const ModularMatrix& A, int half);
// For K == I mod m over Z/(m*l): (K - I)/m reduced mod l.  On the kernel of
// reduction mod m inside Sp(Z/ml) this is an additive isomorphism onto the Lie
// algebra when l | m.
ModularMatrix log_map(const ModularMatrix& K, std::uint32_t m, std::uint32_t l);
// h(u) == 0 for h over Z/2: membership in the annihilator of u.
bool ann_check(const ModularMatrix& h, const IntVector& u);

// |Sp_{2g}(Z/p)| = p^{g^2} * prod_{i=1..g} (p^{2i} - 1).
Int sp_order(int g, std::uint32_t p);
// |sp_{2g}(Z/p)| = p^{g(2g+1)}.
Int sp_lie_order(int g, std::uint32_t p);

// Integral P with P^T E P = standard_J (E unimodular of even dimension).
IntegerMatrix symplectic_basis_change(const AlternatingForm& E);

}  // namespace braidcong
