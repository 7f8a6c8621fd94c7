#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidcong {

// Finite presentation: `generators` abstract generators x_1..x_k; relators and
// subgroup generator words over signed indices (+i for x_i, -i for x_i^{-1}).
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
  std::vector<std::vector<int>> subgroup;  // empty = trivial subgroup
};

// Quotient presentation of the mod-p symplectic group on twist generators
// x_1..x_{n-1}: braid relations, x_1^p, and — per the side conditions —
// (x_1 x_2)^6 (p > 3), the involution relation (p > 3), and the center
// relation (n > 4).
Presentation presentation_G(int n, std::uint32_t p);
// Same group presented on the pure-braid generators a_{i,j} (one abstract
// generator per pair i < j).
Presentation presentation_H(int n, std::uint32_t p);
// Coxeter presentation of the symmetric group on n letters.
Presentation presentation_S(int n);

std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

struct CosetTable {
  enum class Status { Complete, LimitExceeded };
  Status status = Status::LimitExceeded;
  size_t live_cosets = 0;
  // Complete tables only: action[c][2*g] = c * x_{g+1}, action[c][2*g+1] = c * x_{g+1}^{-1},
  // cosets renumbered 0..live_cosets-1 in breadth-first order.
  std::vector<std::vector<size_t>> action;

  bool complete() const { return status == Status::Complete; }
};

inline constexpr size_t kDefaultMaxCosets = 500'000;

// HLT-style coset enumeration over the subgroup generated by P.subgroup (the
// trivial subgroup when empty, so live_cosets is then the group order).
CosetTable coset_enumerate(const Presentation& p, size_t max_cosets = kDefaultMaxCosets);

}  // namespace braidcong
