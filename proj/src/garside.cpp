#include "braidcong/garside.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace braidcong {

namespace {

// Descent set of pi: bit i set iff pi(i) > pi(i+1).  The starting set of a
// permutation braid P is the descent set of its permutation; the finishing
// set is the descent set of the inverse.
std::uint64_t descents(const Permutation& p) {
  std::uint64_t mask = 0;
  for (int i = 0; i + 1 < p.degree(); ++i)
    if (p.of(i) > p.of(i + 1)) mask |= (1ULL << i);
  return mask;
}

std::uint64_t starting_set(const Permutation& p) { return descents(p); }
std::uint64_t finishing_set(const Permutation& p) { return descents(p.inverse()); }

// Conjugation by the half twist: tau(P) = Delta^{-1} P Delta as a permutation.
Permutation tau(const Permutation& p, const Permutation& delta) { return delta.then(p).then(delta); }

// Left-weight the pair (a, b): repeatedly move a letter that starts b but does
// not finish a across the boundary.  Terminates because each move adds an
// inversion to a.  Returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b, int degree) {
  bool changed = false;
  for (;;) {
    std::uint64_t movable = starting_set(b) & ~finishing_set(a);
    if (!movable) return changed;
    int i = std::countr_zero(movable);
    Permutation t = Permutation::transposition(degree, i);
    a = a.then(t);
    b = t.then(b);
    changed = true;
  }
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands;
  if (n > 64) throw std::invalid_argument("normal_form: strand count above 64 unsupported");
  const Permutation delta = Permutation::half_twist(n);

  // Rewrite w as Delta^{-negs} * (permutation braid factors): each positive
  // letter contributes its transposition; each sigma_i^{-1} contributes one
  // global Delta^{-1} and the complementary permutation braid Delta^{-1}*sigma_i
  // (as a permutation: x -> t_i(delta(x))).  Pushing the Delta^{-1} to the
  // front conjugates every factor to its left once per negative letter after it.
  std::vector<Permutation> factors;
  std::vector<int> negs_before;  // negative letters seen before this factor
  int negs = 0;
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= n) throw std::invalid_argument("normal_form: letter out of range");
    if (letter > 0) {
      factors.push_back(Permutation::transposition(n, i));
      negs_before.push_back(negs);
    } else {
      Permutation complement = delta.then(Permutation::transposition(n, i));
      ++negs;
      factors.push_back(std::move(complement));
      negs_before.push_back(negs);
    }
  }
  for (size_t j = 0; j < factors.size(); ++j)
    if ((negs - negs_before[j]) % 2) factors[j] = tau(factors[j], delta);

  long infimum = -negs;

  // Local sweeps until globally left-weighted with no identity factors.
  bool changed = true;
  while (changed) {
    changed = false;
    size_t keep = 0;
    for (size_t j = 0; j < factors.size(); ++j) {
      if (factors[j].is_identity()) {
        changed = true;
        continue;
      }
      factors[keep++] = factors[j];
    }
    factors.resize(keep);
    for (size_t j = 0; j + 1 < factors.size(); ++j)
      if (make_left_weighted(factors[j], factors[j + 1], n)) changed = true;
  }

  // Delta factors can only survive as a prefix; absorb them into the infimum.
  size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  if (lead) {
    infimum += static_cast<long>(lead);
    factors.erase(factors.begin(), factors.begin() + static_cast<long>(lead));
  }

  GarsideNormalForm nf;
  nf.strands = n;
  nf.infimum = infimum;
  nf.factors = std::move(factors);
  return nf;
}

bool is_trivial(const BraidWord& w) {
  GarsideNormalForm nf = normal_form(w);
  return nf.infimum == 0 && nf.factors.empty();
}

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands) throw std::invalid_argument("words_equal: strand count mismatch");
  return is_trivial(compose(w1, inverse(w2)));
}

}  // namespace braidcong
