#include "braidcong/enumgrp.hpp"

#include "braidcong/rep.hpp"
#include "braidcong/symplectic.hpp"

#include <cstring>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace braidcong {

namespace {

std::string vector_key(const std::vector<std::uint32_t>& v) {
  std::string out(v.size() * 4, '\0');
  for (size_t i = 0; i < v.size(); ++i) std::memcpy(out.data() + 4 * i, &v[i], 4);
  return out;
}

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::generate(const std::vector<ModularMatrix>& gens, size_t limit) {
  if (gens.empty()) throw std::invalid_argument("FiniteMatrixGroup: need at least one generator");
  FiniteMatrixGroup g;
  g.mod_ = gens[0].modulus();
  g.dim_ = gens[0].dim();
  for (const ModularMatrix& m : gens)
    if (m.modulus() != g.mod_ || m.dim() != g.dim_)
      throw std::invalid_argument("FiniteMatrixGroup: generators have mixed shapes");
  g.gens_ = gens;
  g.complete_ = true;
  ModularMatrix id = ModularMatrix::identity(g.dim_, g.mod_);
  g.index_.emplace(id.key(), 0);
  g.elements_.push_back(std::move(id));
  for (size_t head = 0; head < g.elements_.size(); ++head) {
    for (const ModularMatrix& gen : g.gens_) {
      ModularMatrix next = g.elements_[head] * gen;
      std::string key = next.key();
      if (g.index_.count(key)) continue;
      if (g.elements_.size() >= limit) {
        g.complete_ = false;
        return g;
      }
      g.index_.emplace(std::move(key), g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

size_t FiniteMatrixGroup::order() const {
  if (!complete_) throw std::logic_error("order: enumeration stopped at the element limit");
  return elements_.size();
}

bool FiniteMatrixGroup::contains(const ModularMatrix& a) const {
  if (a.modulus() != mod_ || a.dim() != dim_) return false;
  return index_.count(a.key()) > 0;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

std::uint64_t FiniteMatrixGroup::exponent() const {
  std::uint64_t bound = order();  // throws when incomplete
  std::uint64_t result = 1;
  for (const ModularMatrix& e : elements_) {
    ModularMatrix power = e;
    std::uint64_t ord = 1;
    while (!power.is_identity()) {
      power = power * e;
      if (++ord > bound) throw std::logic_error("exponent: element order exceeds group order");
    }
    result = std::lcm(result, ord);
  }
  return result;
}

bool FiniteMatrixGroup::same_group(const FiniteMatrixGroup& other) const {
  if (!complete_ || !other.complete_) throw std::logic_error("same_group: both enumerations must be complete");
  if (mod_ != other.mod_ || dim_ != other.dim_ || order() != other.order()) return false;
  for (const ModularMatrix& gen : other.gens_)
    if (!contains(gen)) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> FiniteMatrixGroup::orbit(const std::vector<std::uint32_t>& u) const {
  if (static_cast<int>(u.size()) != dim_) throw std::invalid_argument("orbit: vector dimension mismatch");
  std::vector<std::uint32_t> start(u);
  for (std::uint32_t& x : start) x %= mod_;
  std::vector<std::vector<std::uint32_t>> out{start};
  std::unordered_set<std::string> seen{vector_key(start)};
  for (size_t head = 0; head < out.size(); ++head) {
    for (const ModularMatrix& gen : gens_) {
      std::vector<std::uint32_t> next = gen.apply(out[head]);
      if (seen.insert(vector_key(next)).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::uint64_t FiniteMatrixGroup::stabilizer_order(const std::vector<std::uint32_t>& u) const {
  std::uint64_t total = order();
  std::uint64_t orb = orbit(u).size();
  if (total % orb != 0) throw std::logic_error("stabilizer_order: orbit size does not divide group order");
  return total / orb;
}

FiniteMatrixGroup bfs_generate(const std::vector<ModularMatrix>& gens, size_t limit) {
  FiniteMatrixGroup g = FiniteMatrixGroup::generate(gens, limit);
  if (!g.complete()) throw EnumLimitExceeded(limit);
  return g;
}

bool recognize_symmetric(const FiniteMatrixGroup& g, int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("recognize_symmetric: n out of range");
  if (!g.complete()) return false;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
  if (g.order() != factorial) return false;
  if (n == 1) return true;

  // Candidate images of the Coxeter generators: the involutions of g.  A tuple
  // satisfying t_i^2 = (t_i t_{i+1})^3 = (t_i t_j)^2 = 1 defines a homomorphism
  // from the symmetric group on n letters; if the tuple also generates g and
  // |g| = n!, that homomorphism is an isomorphism.  Duplicate or adjacent-equal
  // entries force a proper quotient, so they are pruned.
  std::vector<ModularMatrix> involutions;
  for (const ModularMatrix& e : g.elements())
    if (!e.is_identity() && (e * e).is_identity()) involutions.push_back(e);

  std::vector<const ModularMatrix*> chosen;
  std::function<bool()> extend = [&]() {
    if (static_cast<int>(chosen.size()) == n - 1) {
      std::vector<ModularMatrix> tuple;
      for (const ModularMatrix* t : chosen) tuple.push_back(*t);
      FiniteMatrixGroup sub = FiniteMatrixGroup::generate(tuple, g.order());
      return sub.complete() && sub.order() == g.order();
    }
    for (const ModularMatrix& cand : involutions) {
      bool ok = true;
      for (size_t j = 0; ok && j < chosen.size(); ++j) {
        const ModularMatrix& prev = *chosen[j];
        if (prev == cand) {
          ok = false;
        } else if (j + 1 == chosen.size()) {
          ModularMatrix q = prev * cand;
          ok = (q * q * q).is_identity();
        } else {
          ok = prev * cand == cand * prev;
        }
      }
      if (!ok) continue;
      chosen.push_back(&cand);
      if (extend()) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend();
}

Report verify_exact_sequence_32(std::uint32_t a, std::uint32_t b, int half, size_t limit) {
  if (std::gcd(a, b) != 1) throw std::invalid_argument("verify_exact_sequence_32: levels must be coprime");
  if (a < 2 || b < 2 || half < 1) throw std::invalid_argument("verify_exact_sequence_32: bad parameters");
  Report report;
  report.suite = "exact-sequence-32";
  report.params = {{"a", a}, {"b", b}, {"half", half}, {"limit", limit}};

  std::vector<ModularMatrix> congruence_gens;
  for (const IntegerMatrix& m : church_putman_set(Int(a), half)) congruence_gens.push_back(reduce_mod(m, b));
  FiniteMatrixGroup image = FiniteMatrixGroup::generate(congruence_gens, limit);
  report.add("closure-complete", image.complete(), "complete", image.complete() ? "complete" : "limit hit");
  if (!image.complete()) return report;

  Int expected = sp_order(half, b);
  report.add("full-symplectic-order", Int(image.order()) == expected, expected.str(), std::to_string(image.order()));

  // The same group must arise from transvections: conjugate the braid-group
  // image into the standard-form basis and close it mod b.
  RepSpace space = rep_space(2 * half + 1);
  IntegerMatrix p_mat = symplectic_basis_change(space.form);
  IntegerMatrix p_inv = p_mat.inverse_unimodular();
  std::vector<ModularMatrix> transvection_gens;
  for (const IntegerMatrix& s : space.sigma) transvection_gens.push_back(reduce_mod(p_inv * s * p_mat, b));
  FiniteMatrixGroup transvection_image = FiniteMatrixGroup::generate(transvection_gens, limit);
  bool tv_complete = transvection_image.complete();
  report.add("transvection-closure-complete", tv_complete, "complete", tv_complete ? "complete" : "limit hit");
  if (tv_complete) {
    if (b % 2 == 1) {
      // Odd modulus: the transvection image is the full symplectic group, so
      // the two closures must coincide.
      report.check("matches-transvection-image", image.same_group(transvection_image));
    } else {
      // Even modulus: the transvection image is only the symmetric group on
      // the strands (order (2*half+1)!), a proper subgroup; check containment
      // and that its order is exactly the factorial.
      bool contained = true;
      for (const ModularMatrix& g : transvection_image.generators()) contained &= image.contains(g);
      report.check("contains-transvection-image", contained);
      std::uint64_t factorial = 1;
      for (int t = 2; t <= 2 * half + 1; ++t) factorial *= static_cast<std::uint64_t>(t);
      report.add("transvection-image-is-symmetric", transvection_image.order() == factorial,
                 std::to_string(factorial), std::to_string(transvection_image.order()));
    }
  }
  return report;
}

Report verify_cp_kernel_generation(std::uint32_t p, int half, size_t limit) {
  if (p < 2 || half < 1) throw std::invalid_argument("verify_cp_kernel_generation: bad parameters");
  Report report;
  report.suite = "cp-kernel";
  report.params = {{"p", p}, {"half", half}, {"limit", limit}};

  const std::uint32_t p2 = p * p;
  std::vector<ModularMatrix> gens;
  for (const IntegerMatrix& m : church_putman_set(Int(p), half)) gens.push_back(reduce_mod(m, p2));
  FiniteMatrixGroup kernel = FiniteMatrixGroup::generate(gens, limit);
  report.add("closure-complete", kernel.complete(), "complete", kernel.complete() ? "complete" : "limit hit");
  if (!kernel.complete()) return report;

  Int expected = sp_lie_order(half, p);
  report.add("kernel-order", Int(kernel.order()) == expected, expected.str(), std::to_string(kernel.order()));
  report.check("abelian", kernel.is_abelian());
  std::uint64_t exp = kernel.exponent();
  report.add("exponent", exp == p, std::to_string(p), std::to_string(exp));

  bool all_trivial_mod_p = true;
  bool all_lie = true;
  std::unordered_set<std::string> log_images;
  for (const ModularMatrix& k : kernel.elements()) {
    for (int r = 0; all_trivial_mod_p && r < k.dim(); ++r)
      for (int c = 0; c < k.dim(); ++c) {
        std::uint32_t want = (r == c) ? 1u : 0u;
        if ((k.at(r, c) + p2 - want) % p != 0) {
          all_trivial_mod_p = false;
          break;
        }
      }
    if (!all_trivial_mod_p) break;
    ModularMatrix logged = log_map(k, p, p);
    if (!lie_check(logged, half)) all_lie = false;
    log_images.insert(logged.key());
  }
  report.check("elements-trivial-mod-p", all_trivial_mod_p);
  if (all_trivial_mod_p) {
    report.check("log-images-in-lie-algebra", all_lie);
    report.add("log-images-distinct", log_images.size() == kernel.order(), std::to_string(kernel.order()),
               std::to_string(log_images.size()));

    // Small cases: compare against a full scan of the Lie algebra.
    const int dim = 2 * half;
    if (static_cast<std::uint64_t>(dim) * dim <= 16 && p == 2) {
      size_t lie_count = 0;
      bool all_found = true;
      for (std::uint32_t mask = 0; mask < (1u << (dim * dim)); ++mask) {
        ModularMatrix a(dim, p);
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c)
            if (mask & (1u << (r * dim + c))) a.set(r, c, 1);
        if (!lie_check(a, half)) continue;
        ++lie_count;
        if (!log_images.count(a.key())) all_found = false;
      }
      report.add("lie-algebra-scan-count", Int(lie_count) == expected, expected.str(), std::to_string(lie_count));
      report.check("log-image-is-whole-lie-algebra", all_found);
    }
  }
  return report;
}

Report verify_theorem_b(int n, std::uint32_t m, size_t limit) {
  if (n < 3) throw std::invalid_argument("verify_theorem_b: need n >= 3");
  if (m < 2) throw std::invalid_argument("verify_theorem_b: need m >= 2");
  Report report;
  report.suite = "theorem-b";
  report.params = {{"n", n}, {"m", m}, {"limit", limit}};

  RepSpace space = rep_space(n);
  std::vector<ModularMatrix> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(rho_mod(space, pure_generator(i, j, n), m));
  FiniteMatrixGroup image = FiniteMatrixGroup::generate(gens, limit);
  report.add("closure-complete", image.complete(), "complete", image.complete() ? "complete" : "limit hit");
  if (!image.complete()) return report;

  // Closed-form expected order, one factor per prime power of m.  The level-2
  // factor is trivial (each generator maps to a squared transvection) and the
  // level-4 factor is the Lie-algebra kernel, restricted to the annihilator of
  // the invariant vector when n is even.
  Int expected = 1;
  for (std::uint32_t q : prime_power_factors(m)) {
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    std::uint32_t e = 0;
    for (std::uint32_t t = q; t > 1; t /= p) ++e;

    if (p % 2 == 1) {
      if (e != 1) throw std::invalid_argument("verify_theorem_b: odd part of m must be squarefree");
      if (n % 2 == 1) {
        expected *= sp_order((n - 1) / 2, p);
      } else {
        RepSpace ambient = rep_space(n + 1);  // dimension n, same form, no invariant vector
        std::vector<ModularMatrix> full_gens;
        for (const IntegerMatrix& s : ambient.sigma) full_gens.push_back(reduce_mod(s, p));
        FiniteMatrixGroup full = FiniteMatrixGroup::generate(full_gens, limit);
        if (!full.complete()) {
          report.add("ambient-closure-complete-" + std::to_string(p), false, "complete", "limit hit");
          return report;
        }
        Int full_expected = sp_order(n / 2, p);
        report.add("ambient-order-" + std::to_string(p), Int(full.order()) == full_expected, full_expected.str(),
                   std::to_string(full.order()));
        std::vector<std::uint32_t> u(space.fixed_vector.size());
        for (size_t i = 0; i < u.size(); ++i) u[i] = static_cast<std::uint32_t>(space.fixed_vector[i]);
        expected *= Int(full.stabilizer_order(u));
      }
    } else {
      if (e == 1) continue;  // generators are trivial mod 2
      if (e != 2) throw std::invalid_argument("verify_theorem_b: the 2-part of m must be 2 or 4");
      if (n % 2 == 1) {
        expected *= sp_lie_order((n - 1) / 2, 2);
      } else {
        // Count mod-2 Lie-algebra elements annihilating the invariant vector.
        if (n * n > 25) throw std::invalid_argument("verify_theorem_b: level-4 scan too large for even n here");
        const AlternatingForm& form = space.form;
        size_t count = 0;
        for (std::uint64_t mask = 0; mask < (1ull << (n * n)); ++mask) {
          ModularMatrix a(n, 2);
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
              if (mask & (1ull << (r * n + c))) a.set(r, c, 1);
          // a^T E + E a == 0 mod 2 over the chain form, and a u == 0.
          bool good = true;
          for (int r = 0; good && r < n; ++r)
            for (int c = 0; c < n; ++c) {
              Int s = 0;
              for (int k = 0; k < n; ++k)
                s += Int(a.at(k, r)) * form.gram().at(k, c) + form.gram().at(r, k) * Int(a.at(k, c));
              if (s % 2 != 0) {
                good = false;
                break;
              }
            }
          if (!good) continue;
          std::vector<std::uint32_t> u(space.fixed_vector.size());
          for (size_t i = 0; i < u.size(); ++i) u[i] = static_cast<std::uint32_t>(space.fixed_vector[i]);
          std::vector<std::uint32_t> au = a.apply(u);
          for (std::uint32_t x : au)
            if (x != 0) good = false;
          if (good) ++count;
        }
        expected *= Int(count);
      }
    }
  }
  report.add("image-order", Int(image.order()) == expected, expected.str(), std::to_string(image.order()));
  return report;
}

}  // namespace braidcong
