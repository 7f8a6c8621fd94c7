#pragma once

#include "braidcong/braid.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/report.hpp"
#include "braidcong/rng.hpp"
#include "braidcong/symplectic.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace braidcong {

// Homological target space of the representation of B_n:
//   n odd:  dimension n-1, unimodular chain form; the classical symplectic model.
//   n even: dimension n, chain form extended to be unimodular, with the fixed
//           vector u = e1 + e3 + ... + e_{n-1} spanning the radical of the
//           (n-1)-dimensional chain form.
// rho(sigma_i) is the transvection along chain[i-1] = e_i.
struct RepSpace {
  int strands = 3;
  int dim = 2;
  AlternatingForm form;
  std::vector<IntVector> chain;  // chain[i] = e_{i+1}, 0 <= i <= strands-2
  bool has_fixed_vector = false;
  IntVector fixed_vector;  // set iff strands is even
  std::vector<IntegerMatrix> sigma;      // sigma[i] = rho(sigma_{i+1})
  std::vector<IntegerMatrix> sigma_inv;  // exact inverses
};

RepSpace rep_space(int n);

IntegerMatrix rho(const RepSpace& space, const BraidWord& w);
IntegerMatrix rho(const BraidWord& w);
ModularMatrix rho_mod(const RepSpace& space, const BraidWord& w, std::uint32_t m);
ModularMatrix rho_mod(const BraidWord& w, std::uint32_t m);

// Membership in the level-m congruence subgroup B_n[m] = ker(rho_mod), and in
// the integral kernel (braid Torelli).
bool in_congruence(const BraidWord& w, std::uint32_t m);
bool in_torelli(const BraidWord& w);

enum class Family { PPower, SeparatingChain, Involution, Center, B33, Cor54 };

// A braid word carrying a verified congruence membership claim: on
// construction, in_congruence(word, level) (or in_torelli when level == 0)
// is checked and construction fails if the claim does not hold.
struct CongruenceElement {
  BraidWord word;
  Family family = Family::PPower;
  std::uint32_t level = 0;  // 0 means: integral kernel
  bool flagged = false;     // built outside the stated side conditions
};

// (sigma_1 ... sigma_{2k})^{4k+2}: the twist about a separating curve enclosing
// a genus-k subsurface; lies in the integral kernel.  Requires 2k <= n-1.
CongruenceElement separating_chain_element(int k, int n);

// For odd k: rho((sigma_1...sigma_k)^{k+1}) equals the square of the
// transvection along e1+e3+...+ek, exactly over Z.
bool odd_chain_square_check(int k, int n);

// (sigma_1^{(p+1)/2} sigma_2^4)^2 * ((sigma_1 sigma_2)^3)^{-1}: acts as the
// hyperelliptic involution mod p on span(e1, e2); lies in B_n[p].  Stated for
// p > 3; p = 3 is allowed but flagged.
CongruenceElement involution_element(std::uint32_t p, int n);

// A_1 = empty; A_k = s_{k+1} s_k^2 s_{k+1} s_{k-1}^{(p-1)/2} s_k^{-1} s_{k-1} A_{k-2}.
BraidWord a_k_word(int k, std::uint32_t p, int n);
// (sigma_1...sigma_k)^{k+1} A_k sigma_1^{-2} A_k^{-1} in B_n[p].
CongruenceElement center_element(int k, std::uint32_t p, int n);
// Checks rho_p(A_k) e1 == e1+e3+...+ek and rho_p(A_k sigma_1 A_k^{-1}) ==
// transvection(e1+e3+...+ek) mod p.
bool a_k_action_check(int k, std::uint32_t p, int n);

// Relator words of the quotient presentation of the mod-p symplectic group on
// twist generators: the p-th power relator, the separating-twist relator
// (p > 3), the involution relator (p > 3), and the center relator (n > 4).
// The braid relations themselves live in braid_relators().  Every emitted word
// lies in B_n[p].  include_filtered additionally emits the p = 3 cases of the
// filtered relators.
std::vector<BraidWord> wajnryb_relators(int n, std::uint32_t p, bool include_filtered = false);

// Relator words of the pure-braid-generator presentation of the same group:
// the a_{i,j}-side braid relator, p-th powers, the double-twist relator
// (p > 3), the band-expansion relator, the C relator, and the B relator
// (n >= 5), all expanded into Artin generators.  Every emitted word lies in
// B_n[p].
std::vector<BraidWord> sypre_relators(int n, std::uint32_t p);

// The six families of normal generators of B_n[2p], over all admissible
// indices at n strands.
std::vector<CongruenceElement> cor54_generators(int n, std::uint32_t p);

// The four-element generating set of B_3[3]: {s1^3, s2^3, s2 s1^3 s2^-1,
// s2^2 s1^3 s2^-2}.
std::vector<CongruenceElement> b33_generators();
// Every word identity used in the three steps of the generation proof, as
// (lhs, rhs) pairs; each holds in B_3 (verified via words_equal on construction).
std::vector<std::pair<BraidWord, BraidWord>> b33_proof_identities();
// The alternate-generating-set rewriting s2^2 s1^3 s2^-2 =
// s2^3 (s2^-1 s1^3 s2) s2^-3, checked by free reduction alone.
bool b33_alternate_set_check();

// Quotient-by-permutation checks at level 2p:
//  (a) permutation(sigma_i^p) is the transposition (i, i+1) for every i;
//  (b) on random words, in_congruence(w, 2p) iff in_congruence(w, 2) and
//      in_congruence(w, p), cross-validated entrywise via crt_split;
//  (c) on random level-p kernel words built from relator conjugates,
//      in_congruence(w, 2p) iff permutation(w) is trivial.
Report symmetric_quotient_check(int n, std::uint32_t p, int samples, std::uint64_t seed = kDefaultSeed);

}  // namespace braidcong
