#pragma once

#include "braidcong/braid.hpp"

namespace braidcong {

// Garside left normal form: w = Delta^infimum * P_1 * ... * P_k with each P_i a
// nontrivial, non-Delta permutation braid and every adjacent pair left-weighted.
// Two words are equal in B_n iff their normal forms coincide.
struct GarsideNormalForm {
  int strands = 2;
  long infimum = 0;
  std::vector<Permutation> factors;

  long canonical_length() const { return static_cast<long>(factors.size()); }
  friend bool operator==(const GarsideNormalForm& x, const GarsideNormalForm& y) {
    return x.strands == y.strands && x.infimum == y.infimum && x.factors == y.factors;
  }
  friend bool operator!=(const GarsideNormalForm& x, const GarsideNormalForm& y) { return !(x == y); }
};

GarsideNormalForm normal_form(const BraidWord& w);
bool is_trivial(const BraidWord& w);
bool words_equal(const BraidWord& w1, const BraidWord& w2);

}  // namespace braidcong
