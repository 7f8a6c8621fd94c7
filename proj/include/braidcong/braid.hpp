#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidcong {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter k > 0 means sigma_k, k < 0 means sigma_{|k|}^{-1}; 1 <= |k| <= strands-1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  friend bool operator==(const BraidWord& x, const BraidWord& y) {
    return x.strands == y.strands && x.letters == y.letters;
  }
};

// Permutation of {0, ..., degree-1}.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  static Permutation transposition(int degree, int i);  // swaps i and i+1
  static Permutation half_twist(int degree);            // x -> degree-1-x

  int degree() const { return static_cast<int>(img_.size()); }
  int of(int x) const { return img_[x]; }
  Permutation then(const Permutation& next) const;  // apply *this first, then next
  Permutation inverse() const;
  bool is_identity() const;
  friend bool operator==(const Permutation& x, const Permutation& y) { return x.img_ == y.img_; }
  friend bool operator!=(const Permutation& x, const Permutation& y) { return !(x == y); }
  std::vector<int> one_indexed() const;  // images of 1..degree

private:
  std::vector<int> img_;
};

BraidWord parse_word(std::string_view text, int strands);
std::string format_word(const BraidWord& w);

// Word file/argument format: optional "n=<int>;" header, then letters.
struct WordText {
  std::optional<int> strands;
  std::vector<int> letters;
};
WordText parse_word_text(std::string_view text);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord conjugate(const BraidWord& w, const BraidWord& g);  // g w g^{-1}
BraidWord power(const BraidWord& w, int e);
BraidWord free_reduce(const BraidWord& w);

// Band generator a_{i,j} of the pure braid group, 1 <= i < j <= n:
// sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}.
BraidWord pure_generator(int i, int j, int n);

// Image under the homomorphism to the symmetric group (sigma_k -> (k k+1)).
Permutation permutation(const BraidWord& w);

// Defining relators of the braid group: far commutation + braid relations.
std::vector<BraidWord> braid_relators(int n);
// Relators of the pure braid group presentation on the a_{i,j}.
std::vector<BraidWord> pure_braid_relators(int n);

}  // namespace braidcong
