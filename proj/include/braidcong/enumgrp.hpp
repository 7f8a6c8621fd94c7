#pragma once

#include "braidcong/matrix.hpp"
#include "braidcong/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidcong {

struct EnumLimitExceeded : std::runtime_error {
  explicit EnumLimitExceeded(size_t limit)
      : std::runtime_error("enumeration limit of " + std::to_string(limit) + " elements exceeded") {}
};

inline constexpr size_t kDefaultEnumLimit = 200'000;

// A finite group of modular matrices, materialized by breadth-first closure of
// its generating set.  For a finite group, closing under multiplication alone
// suffices (inverses are positive powers), so the BFS multiplies the frontier
// by the generators only; the element set is generator-order independent.
class FiniteMatrixGroup {
public:
  // Closes the generating set; stops early with complete() == false once more
  // than `limit` elements appear.
  static FiniteMatrixGroup generate(const std::vector<ModularMatrix>& gens, size_t limit = kDefaultEnumLimit);

  bool complete() const { return complete_; }
  size_t size() const { return elements_.size(); }  // elements found so far
  size_t order() const;                             // requires complete()
  int dim() const { return dim_; }
  std::uint32_t modulus() const { return mod_; }
  const std::vector<ModularMatrix>& elements() const { return elements_; }
  const std::vector<ModularMatrix>& generators() const { return gens_; }

  bool contains(const ModularMatrix& a) const;
  bool is_abelian() const;          // generator pairs commute
  std::uint64_t exponent() const;   // lcm of element orders; requires complete()
  bool same_group(const FiniteMatrixGroup& other) const;

  std::vector<std::vector<std::uint32_t>> orbit(const std::vector<std::uint32_t>& u) const;
  std::uint64_t stabilizer_order(const std::vector<std::uint32_t>& u) const;

private:
  std::uint32_t mod_ = 0;
  int dim_ = 0;
  bool complete_ = false;
  std::vector<ModularMatrix> gens_;
  std::vector<ModularMatrix> elements_;  // BFS order
  std::unordered_map<std::string, size_t> index_;
};

// Throwing wrapper: full closure or EnumLimitExceeded.
FiniteMatrixGroup bfs_generate(const std::vector<ModularMatrix>& gens, size_t limit = kDefaultEnumLimit);

// True iff |G| = n! and some generator tuple (t_1..t_{n-1}) of G satisfies the
// Coxeter presentation of the symmetric group (t_i^2 = 1, braid relations,
// far commutation) and generates G; found by backtracking over involutions.
bool recognize_symmetric(const FiniteMatrixGroup& g, int n);

// Reduction mod b of the level-a congruence generator set generates the full
// mod-b symplectic group: BFS order equals sp_order(half, b).  Cross-checked
// against the mod-b transvection images: for odd b the two closures coincide;
// for even b the transvection image is only the symmetric group on the
// strands, so the check is containment plus its factorial order.
Report verify_exact_sequence_32(std::uint32_t a, std::uint32_t b, int half, size_t limit = kDefaultEnumLimit);

// Mod-p^2 shadow of level-p generation: BFS of the level-p generator set
// reduced mod p^2 equals the full kernel of Sp(Z/p^2) -> Sp(Z/p), of order
// sp_lie_order(half, p), abelian of exponent p, with every element passing
// lie_check after log_map.
Report verify_cp_kernel_generation(std::uint32_t p, int half, size_t limit = kDefaultEnumLimit);

// BFS order of the mod-m image of the pure braid group (generated by the
// rho_m(a_{i,j})) against the closed-form product over the prime-power parts
// of m.
Report verify_theorem_b(int n, std::uint32_t m, size_t limit = kDefaultEnumLimit);

}  // namespace braidcong
