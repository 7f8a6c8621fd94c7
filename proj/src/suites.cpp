#include "braidcong/suites.hpp"

#include "braidcong/braid.hpp"
#include "braidcong/enumgrp.hpp"
#include "braidcong/garside.hpp"
#include "braidcong/rep.hpp"
#include "braidcong/symplectic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace braidcong {

namespace {

void merge_report(Report& into, const Report& sub, const std::string& prefix) {
  for (const CaseResult& c : sub.cases) into.add(prefix + c.name, c.pass, c.expected, c.actual);
}

template <typename F>
void expect_case(Report& r, const std::string& name, const std::string& expected, F&& fn) {
  try {
    std::string actual = fn();
    r.add(name, true, expected, actual);
  } catch (const std::exception& e) {
    r.add(name, false, expected, e.what());
  }
}

std::string tag(int n, std::uint32_t p) { return "n" + std::to_string(n) + "-p" + std::to_string(p) + "-"; }

// |Sp_{2g}(Z/p^e)|: each reduction Sp(Z/p^{i+1}) -> Sp(Z/p^i) has kernel of
// Lie-algebra size.
Int sp_order_prime_power(int g, std::uint32_t p, std::uint32_t e) {
  Int out = sp_order(g, p);
  for (std::uint32_t i = 1; i < e; ++i) out *= sp_lie_order(g, p);
  return out;
}

std::vector<std::uint32_t> powers_mod_factored(std::uint32_t m, std::vector<std::pair<std::uint32_t, std::uint32_t>>& pe) {
  std::vector<std::uint32_t> factors = prime_power_factors(m);
  pe.clear();
  for (std::uint32_t q : factors) {
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    std::uint32_t e = 0;
    for (std::uint32_t t = q; t > 1; t /= p) ++e;
    pe.emplace_back(p, e);
  }
  return factors;
}

Report suite_braid_relators(const SuiteConfig& cfg) {
  Report r;
  r.suite = "braid-relators";
  std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4, 5, 6} : cfg.ns;
  r.params = {{"ns", ns}};
  for (int n : ns) {
    const std::string prefix = "n" + std::to_string(n) + "-";
    bool artin = true;
    for (const BraidWord& w : braid_relators(n)) artin = artin && is_trivial(w) && rho(w).is_identity();
    r.check(prefix + "artin-relators-trivial", artin);
    bool pure = true;
    for (const BraidWord& w : pure_braid_relators(n)) pure = pure && is_trivial(w);
    r.check(prefix + "pure-relators-trivial", pure);
    bool perms = true;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) perms = perms && permutation(pure_generator(i, j, n)).is_identity();
    r.check(prefix + "band-generators-are-pure", perms);
  }
  return r;
}

Report suite_wajnryb(const SuiteConfig& cfg) {
  Report r;
  r.suite = "wajnryb";
  std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4, 5, 6} : cfg.ns;
  std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5, 7} : cfg.ps;
  r.params = {{"ns", ns}, {"ps", ps}};
  for (int n : ns)
    for (std::uint32_t p : ps) {
      bool braid_ok = true;
      for (const BraidWord& w : braid_relators(n)) braid_ok = braid_ok && in_congruence(w, p);
      r.check(tag(n, p) + "braid-relations-in-kernel", braid_ok);
      std::vector<BraidWord> relators = wajnryb_relators(n, p);
      for (size_t i = 0; i < relators.size(); ++i)
        r.check(tag(n, p) + "relator-" + std::to_string(i) + "-in-kernel", in_congruence(relators[i], p));
    }
  return r;
}

Report suite_sypre(const SuiteConfig& cfg) {
  Report r;
  r.suite = "sypre";
  std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 5} : cfg.ns;
  std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5} : cfg.ps;
  r.params = {{"ns", ns}, {"ps", ps}};
  for (int n : ns)
    for (std::uint32_t p : ps) {
      bool pure_ok = true;
      for (const BraidWord& w : pure_braid_relators(n)) pure_ok = pure_ok && in_congruence(w, p);
      r.check(tag(n, p) + "band-relations-in-kernel", pure_ok);
      std::vector<BraidWord> relators = sypre_relators(n, p);
      for (size_t i = 0; i < relators.size(); ++i)
        r.check(tag(n, p) + "relator-" + std::to_string(i) + "-in-kernel", in_congruence(relators[i], p));
    }
  return r;
}

Report suite_cor54(const SuiteConfig& cfg) {
  Report r;
  r.suite = "cor54";
  std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4, 5} : cfg.ns;
  std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5} : cfg.ps;
  r.params = {{"ns", ns}, {"ps", ps}};
  for (int n : ns)
    for (std::uint32_t p : ps) {
      expect_case(r, tag(n, p) + "generators-in-level-" + std::to_string(2 * p), "all families verified", [&] {
        std::vector<CongruenceElement> gens = cor54_generators(n, p);
        return std::to_string(gens.size()) + " elements verified";
      });
      BraidWord single{n, {1}};
      r.check(tag(n, p) + "single-twist-not-member", !in_congruence(single, 2 * p));
    }
  return r;
}

Report suite_b33(const SuiteConfig& cfg) {
  Report r;
  r.suite = "b33";
  r.params = {{"limit", cfg.limit}};
  expect_case(r, "generators-in-level-3", "4 elements verified", [&] {
    std::vector<CongruenceElement> gens = b33_generators();
    return std::to_string(gens.size()) + " elements verified";
  });
  expect_case(r, "proof-identities-hold", "14 identities verified", [&] {
    std::vector<std::pair<BraidWord, BraidWord>> ids = b33_proof_identities();
    return std::to_string(ids.size()) + " identities verified";
  });
  r.check("alternate-set-free-reduction", b33_alternate_set_check());

  // Mod-6 images of the four generators, against the closed forms.
  std::vector<CongruenceElement> gens = b33_generators();
  ModularMatrix g0 = rho_mod(gens[0].word, 6);
  ModularMatrix g1 = rho_mod(gens[1].word, 6);
  ModularMatrix g2 = rho_mod(gens[2].word, 6);
  ModularMatrix g3 = rho_mod(gens[3].word, 6);
  ModularMatrix e0(2, 6), e1(2, 6), e2(2, 6);
  e0.set(0, 0, 1), e0.set(0, 1, 3), e0.set(1, 1, 1);
  e1.set(0, 0, 1), e1.set(1, 0, 3), e1.set(1, 1, 1);
  e2.set(0, 0, 4), e2.set(0, 1, 3), e2.set(1, 0, 3), e2.set(1, 1, 4);
  r.check("image-cube-first", g0 == e0);
  r.check("image-cube-second", g1 == e1);
  r.check("image-conjugate", g2 == e2);
  r.check("image-double-conjugate-collapses", g3 == g0);

  FiniteMatrixGroup image = FiniteMatrixGroup::generate({g0, g1, g2, g3}, cfg.limit);
  r.check("quotient-image-complete", image.complete());
  if (image.complete()) {
    r.add("quotient-image-order", image.order() == 6, "6", std::to_string(image.order()));
    r.check("quotient-image-symmetric", recognize_symmetric(image, 3));
  }
  return r;
}

Report suite_lemma42(const SuiteConfig& cfg) {
  Report r;
  r.suite = "lemma42";
  std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{5, 7, 11} : cfg.ps;
  r.params = {{"ps", ps}};
  for (std::uint32_t p : ps) {
    const std::string prefix = "p" + std::to_string(p) + "-";
    IntegerMatrix half_turn = rho(power(BraidWord{3, {1, 2}}, 3));
    r.check(prefix + "full-twist-is-minus-identity", (half_turn + IntegerMatrix::identity(2)).is_zero());

    expect_case(r, prefix + "involution-element-in-kernel", "constructed", [&] {
      CongruenceElement e = involution_element(p, 3);
      return e.flagged ? std::string("constructed flagged") : std::string("constructed");
    });

    BraidWord lhs_word{3, {}};
    for (std::uint32_t t = 0; t < (p + 1) / 2; ++t) lhs_word.letters.push_back(1);
    for (int t = 0; t < 4; ++t) lhs_word.letters.push_back(2);
    IntegerMatrix lhs = rho(power(lhs_word, 2));

    const Int big = Int(4) * p * p + 2 * p - 1;
    const Int mid = Int(p) * (p + 1);
    const Int small = Int(2) * p + 1;
    Int a = lhs.at(0, 0), b = lhs.at(1, 0), c = lhs.at(0, 1), d = lhs.at(1, 1);
    bool e1_coeffs = (abs(a) == big && abs(b) == Int(8) * p);
    bool e1_mod = ((a + 1) % p == 0 && b % p == 0);
    r.add(prefix + "e1-image-coefficients", e1_coeffs && e1_mod,
          "|" + big.str() + "| and |" + (Int(8) * p).str() + "|, congruent to -e1",
          a.str() + ", " + b.str());
    bool e2_coeffs = (abs(c) == mid && abs(d) == small);
    bool e2_mod = (c % p == 0 && (d + 1) % p == 0);
    r.add(prefix + "e2-image-coefficients", e2_coeffs && e2_mod,
          "|" + mid.str() + "| and |" + small.str() + "|, congruent to -e2", c.str() + ", " + d.str());
  }
  return r;
}

Report suite_lemma43(const SuiteConfig& cfg) {
  Report r;
  r.suite = "lemma43";
  std::vector<std::array<int, 3>> cases;  // {k, p, n}
  if (cfg.ns.empty() && cfg.ps.empty()) {
    cases = {{3, 3, 5}, {3, 5, 5}, {5, 3, 7}};
  } else {
    std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{5, 7} : cfg.ns;
    std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5} : cfg.ps;
    for (int n : ns)
      for (std::uint32_t p : ps) {
        if (n < 5 || n % 2 == 0) continue;
        cases.push_back({n - 2, static_cast<int>(p), n});
      }
  }
  nlohmann::json jcases = nlohmann::json::array();
  for (const auto& c : cases) jcases.push_back({{"k", c[0]}, {"p", c[1]}, {"n", c[2]}});
  r.params = {{"cases", jcases}};
  for (const auto& c : cases) {
    const int k = c[0], n = c[2];
    const std::uint32_t p = static_cast<std::uint32_t>(c[1]);
    const std::string prefix = "k" + std::to_string(k) + "-p" + std::to_string(p) + "-n" + std::to_string(n) + "-";
    r.check(prefix + "conjugator-action", a_k_action_check(k, p, n));
    expect_case(r, prefix + "center-element-in-kernel", "constructed",
                [&] { return (center_element(k, p, n), std::string("constructed")); });
  }
  return r;
}

Report suite_chain(const SuiteConfig& cfg) {
  Report r;
  r.suite = "chain";
  r.params = nlohmann::json::object();
  const std::vector<std::pair<int, int>> separating = {{1, 3}, {1, 5}, {2, 5}, {2, 6}};
  for (auto [k, n] : separating) {
    const std::string name =
        "separating-k" + std::to_string(k) + "-n" + std::to_string(n) + "-integral-kernel";
    expect_case(r, name, "constructed", [&, k = k, n = n] {
      return (separating_chain_element(k, n), std::string("constructed"));
    });
  }
  for (int k : {1, 3, 5}) {
    const int n = k + 2;
    r.check("odd-square-k" + std::to_string(k) + "-n" + std::to_string(n), odd_chain_square_check(k, n));
  }
  (void)cfg;
  return r;
}

Report suite_acampo(const SuiteConfig& cfg) {
  Report r;
  r.suite = "acampo";
  std::vector<std::pair<int, std::uint32_t>> cases;
  if (cfg.ns.empty() && cfg.ps.empty()) {
    cases = {{3, 3}, {3, 5}, {5, 3}, {4, 3}};
  } else {
    std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4, 5} : cfg.ns;
    std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5} : cfg.ps;
    for (int n : ns)
      for (std::uint32_t p : ps) cases.emplace_back(n, p);
  }
  nlohmann::json jcases = nlohmann::json::array();
  for (auto [n, p] : cases) jcases.push_back({{"n", n}, {"p", p}});
  r.params = {{"cases", jcases}, {"limit", cfg.limit}};
  for (auto [n, p] : cases) {
    RepSpace space = rep_space(n);
    std::vector<ModularMatrix> gens;
    for (const IntegerMatrix& s : space.sigma) gens.push_back(reduce_mod(s, p));
    FiniteMatrixGroup image = FiniteMatrixGroup::generate(gens, cfg.limit);
    r.check(tag(n, p) + "closure-complete", image.complete());
    if (!image.complete()) continue;
    if (n % 2 == 1) {
      Int expected = sp_order((n - 1) / 2, p);
      r.add(tag(n, p) + "image-order", Int(image.order()) == expected, expected.str(),
            std::to_string(image.order()));
    } else {
      RepSpace ambient = rep_space(n + 1);
      std::vector<ModularMatrix> ambient_gens;
      for (const IntegerMatrix& s : ambient.sigma) ambient_gens.push_back(reduce_mod(s, p));
      FiniteMatrixGroup full = FiniteMatrixGroup::generate(ambient_gens, cfg.limit);
      r.check(tag(n, p) + "ambient-closure-complete", full.complete());
      if (!full.complete()) continue;
      Int ambient_expected = sp_order(n / 2, p);
      r.add(tag(n, p) + "ambient-order", Int(full.order()) == ambient_expected, ambient_expected.str(),
            std::to_string(full.order()));
      std::vector<std::uint32_t> u(space.fixed_vector.size());
      for (size_t i = 0; i < u.size(); ++i) u[i] = static_cast<std::uint32_t>(space.fixed_vector[i]);
      size_t orbit_size = full.orbit(u).size();
      Int vectors = 1;
      for (int i = 0; i < space.dim; ++i) vectors *= p;
      r.add(tag(n, p) + "orbit-is-nonzero-vectors", Int(orbit_size) == vectors - 1,
            Int(vectors - 1).str(), std::to_string(orbit_size));
      std::uint64_t stab = full.stabilizer_order(u);
      r.add(tag(n, p) + "image-order", image.order() == stab, std::to_string(stab),
            std::to_string(image.order()));
      bool fixes = true;
      for (const ModularMatrix& g : gens) fixes = fixes && fixes_vector(g, space.fixed_vector);
      r.check(tag(n, p) + "generators-fix-vector", fixes);
    }
  }
  return r;
}

Report suite_theorem_b(const SuiteConfig& cfg) {
  Report r;
  r.suite = "theorem-b";
  std::vector<std::pair<int, std::uint32_t>> cases;
  if (cfg.ns.empty() && cfg.ms.empty()) {
    cases = {{3, 6}, {3, 30}, {3, 12}, {4, 6}};
  } else {
    std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4} : cfg.ns;
    std::vector<std::uint32_t> ms = cfg.ms.empty() ? std::vector<std::uint32_t>{6, 12} : cfg.ms;
    for (int n : ns)
      for (std::uint32_t m : ms) cases.emplace_back(n, m);
  }
  nlohmann::json jcases = nlohmann::json::array();
  for (auto [n, m] : cases) jcases.push_back({{"n", n}, {"m", m}});
  r.params = {{"cases", jcases}, {"limit", cfg.limit}};
  for (auto [n, m] : cases)
    merge_report(r, verify_theorem_b(n, m, cfg.limit), "n" + std::to_string(n) + "-m" + std::to_string(m) + "-");
  return r;
}

Report suite_newman_smart(const SuiteConfig& cfg) {
  Report r;
  r.suite = "newman-smart";
  std::vector<std::uint32_t> ms = cfg.ms.empty() ? std::vector<std::uint32_t>{6, 12, 15, 30} : cfg.ms;
  const int samples = cfg.samples.value_or(1000);
  r.params = {{"ms", ms}, {"samples", samples}, {"seed", cfg.seed}, {"limit", cfg.limit}};

  RepSpace space = rep_space(3);
  for (std::uint32_t m : ms) {
    const std::string prefix = "m" + std::to_string(m) + "-";
    std::vector<ModularMatrix> gens;
    for (const IntegerMatrix& s : space.sigma) gens.push_back(reduce_mod(s, m));
    FiniteMatrixGroup image = FiniteMatrixGroup::generate(gens, cfg.limit);
    r.check(prefix + "closure-complete", image.complete());
    if (image.complete()) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pe;
      powers_mod_factored(m, pe);
      Int expected = 1;
      for (auto [p, e] : pe) expected *= sp_order_prime_power(1, p, e);
      r.add(prefix + "order-is-prime-power-product", Int(image.order()) == expected, expected.str(),
            std::to_string(image.order()));
    }

    Rng rng(cfg.seed, "newman-smart-m" + std::to_string(m));
    int split_failures = 0, isometry_failures = 0, kernel_failures = 0;
    for (int s = 0; s < samples; ++s) {
      BraidWord w = rng.word(3, static_cast<int>(rng.below(41)));
      ModularMatrix whole = rho_mod(space, w, m);
      std::vector<ModularMatrix> parts = crt_split(whole);
      if (!(crt_join(parts) == whole)) ++split_failures;
      bool parts_identity = true;
      for (const ModularMatrix& part : parts) {
        if (!is_isometry(part, space.form)) ++isometry_failures;
        parts_identity = parts_identity && part.is_identity();
      }
      if (parts_identity != whole.is_identity()) ++kernel_failures;
    }
    r.add(prefix + "crt-round-trip", split_failures == 0, "0 failures", std::to_string(split_failures) + " failures");
    r.add(prefix + "crt-parts-isometries", isometry_failures == 0, "0 failures",
          std::to_string(isometry_failures) + " failures");
    r.add(prefix + "crt-kernel-agreement", kernel_failures == 0, "0 failures",
          std::to_string(kernel_failures) + " failures");
  }
  return r;
}

Report suite_prop34(const SuiteConfig& cfg) {
  Report r;
  r.suite = "prop34";
  std::vector<std::pair<std::uint32_t, int>> cases;  // {p, half}
  if (cfg.ps.empty()) {
    cases = {{3, 1}, {5, 1}, {2, 2}};
  } else {
    for (std::uint32_t p : cfg.ps) cases.emplace_back(p, 1);
  }
  const int samples = cfg.samples.value_or(200);
  nlohmann::json jcases = nlohmann::json::array();
  for (auto [p, half] : cases) jcases.push_back({{"p", p}, {"half", half}});
  r.params = {{"cases", jcases}, {"samples", samples}, {"seed", cfg.seed}, {"limit", cfg.limit}};

  for (auto [p, half] : cases) {
    const std::string prefix = "p" + std::to_string(p) + "-h" + std::to_string(half) + "-";
    const std::uint32_t p2 = p * p;
    std::vector<ModularMatrix> gens;
    for (const IntegerMatrix& m : church_putman_set(Int(p), half)) gens.push_back(reduce_mod(m, p2));
    FiniteMatrixGroup kernel = FiniteMatrixGroup::generate(gens, cfg.limit);
    r.check(prefix + "closure-complete", kernel.complete());
    if (!kernel.complete()) continue;

    ModularMatrix id = ModularMatrix::identity(2 * half, p2);
    r.check(prefix + "log-of-identity-is-zero", log_map(id, p, p).is_zero());

    Rng rng(cfg.seed, "prop34-p" + std::to_string(p));
    int additive_failures = 0, lie_failures = 0;
    for (int s = 0; s < samples; ++s) {
      const ModularMatrix& a = kernel.elements()[rng.below(kernel.order())];
      const ModularMatrix& b = kernel.elements()[rng.below(kernel.order())];
      ModularMatrix la = log_map(a, p, p), lb = log_map(b, p, p);
      if (!(log_map(a * b, p, p) == la + lb)) ++additive_failures;
      if (!lie_check(la, half) || !lie_check(lb, half)) ++lie_failures;
    }
    r.add(prefix + "log-additive", additive_failures == 0, "0 failures",
          std::to_string(additive_failures) + " failures");
    r.add(prefix + "log-in-lie-algebra", lie_failures == 0, "0 failures", std::to_string(lie_failures) + " failures");
  }
  return r;
}

Report suite_lemma32(const SuiteConfig& cfg) {
  Report r;
  r.suite = "lemma32";
  r.params = {{"limit", cfg.limit}};
  merge_report(r, verify_exact_sequence_32(2, 3, 2, cfg.limit), "a2-b3-h2-");
  merge_report(r, verify_exact_sequence_32(3, 2, 2, cfg.limit), "a3-b2-h2-");
  return r;
}

Report suite_cp_kernel(const SuiteConfig& cfg) {
  Report r;
  r.suite = "cp-kernel";
  r.params = {{"limit", cfg.limit}};
  merge_report(r, verify_cp_kernel_generation(3, 1, cfg.limit), "p3-h1-");
  merge_report(r, verify_cp_kernel_generation(3, 2, cfg.limit), "p3-h2-");
  merge_report(r, verify_cp_kernel_generation(2, 2, cfg.limit), "p2-h2-");
  return r;
}

Report suite_symmetric_quotient(const SuiteConfig& cfg) {
  Report r;
  r.suite = "symmetric-quotient";
  std::vector<int> ns = cfg.ns.empty() ? std::vector<int>{3, 4} : cfg.ns;
  std::vector<std::uint32_t> ps = cfg.ps.empty() ? std::vector<std::uint32_t>{3, 5} : cfg.ps;
  const int samples = cfg.samples.value_or(1000);
  r.params = {{"ns", ns}, {"ps", ps}, {"samples", samples}, {"seed", cfg.seed}, {"limit", cfg.limit}};
  for (int n : ns)
    for (std::uint32_t p : ps) {
      merge_report(r, symmetric_quotient_check(n, p, samples, cfg.seed), tag(n, p));

      std::vector<ModularMatrix> gens;
      for (int i = 1; i <= n - 1; ++i) {
        BraidWord w{n, {}};
        for (std::uint32_t t = 0; t < p; ++t) w.letters.push_back(i);
        gens.push_back(rho_mod(w, 2 * p));
      }
      FiniteMatrixGroup image = FiniteMatrixGroup::generate(gens, cfg.limit);
      r.check(tag(n, p) + "image-complete", image.complete());
      if (!image.complete()) continue;
      std::uint64_t factorial = 1;
      for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
      r.add(tag(n, p) + "image-order-factorial", image.order() == factorial, std::to_string(factorial),
            std::to_string(image.order()));
      r.check(tag(n, p) + "image-recognized-symmetric", recognize_symmetric(image, n));
    }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "acampo",     "b33",       "braid-relators", "chain",
      "cor54",      "cp-kernel", "lemma32",        "lemma42",
      "lemma43",    "newman-smart", "prop34",      "sypre",
      "symmetric-quotient",      "theorem-b",      "wajnryb"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const std::vector<std::string>& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "acampo") return suite_acampo(config);
  if (name == "b33") return suite_b33(config);
  if (name == "braid-relators") return suite_braid_relators(config);
  if (name == "chain") return suite_chain(config);
  if (name == "cor54") return suite_cor54(config);
  if (name == "cp-kernel") return suite_cp_kernel(config);
  if (name == "lemma32") return suite_lemma32(config);
  if (name == "lemma42") return suite_lemma42(config);
  if (name == "lemma43") return suite_lemma43(config);
  if (name == "newman-smart") return suite_newman_smart(config);
  if (name == "prop34") return suite_prop34(config);
  if (name == "sypre") return suite_sypre(config);
  if (name == "symmetric-quotient") return suite_symmetric_quotient(config);
  if (name == "theorem-b") return suite_theorem_b(config);
  if (name == "wajnryb") return suite_wajnryb(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace braidcong
