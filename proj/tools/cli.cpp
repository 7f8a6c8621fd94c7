#include "braidcong/braid.hpp"
#include "braidcong/enumgrp.hpp"
#include "braidcong/garside.hpp"
#include "braidcong/rep.hpp"
#include "braidcong/suites.hpp"
#include "braidcong/symplectic.hpp"
#include "braidcong/tc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using braidcong::BraidWord;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const nlohmann::json& payload, const std::string& out_path) {
  std::string text = payload.dump(2);
  text.push_back('\n');
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
  }
}

BraidWord load_word(int strands_flag, const std::string& word_text, const std::string& word_file) {
  if (word_text.empty() == word_file.empty())
    throw std::invalid_argument("give exactly one of --word or --word-file");
  std::string text = word_file.empty() ? word_text : read_file(word_file);
  braidcong::WordText parsed = braidcong::parse_word_text(text);
  int strands = strands_flag;
  if (parsed.strands) {
    if (strands_flag > 0 && strands_flag != *parsed.strands)
      throw std::invalid_argument("--n disagrees with the word's n= header");
    strands = *parsed.strands;
  }
  if (strands < 2) throw std::invalid_argument("strand count missing: pass --n or an 'n=<k>;' header");
  BraidWord w{strands, parsed.letters};
  for (int k : w.letters)
    if (k == 0 || std::abs(k) > strands - 1)
      throw std::invalid_argument("letter " + std::to_string(k) + " out of range for n=" + std::to_string(strands));
  return w;
}

// "key=value,key=value" specs for enum generator sources.
std::map<std::string, long> parse_kv(const std::string& spec) {
  std::map<std::string, long> out;
  std::istringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad generator spec item '" + item + "'");
    std::string key = item.substr(0, eq);
    out[key] = std::stol(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for braid group congruence subgroups"};
  app.require_subcommand(1);

  // --- eval ---
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a braid word under the homological representation");
  int eval_n = 0;
  std::string eval_word, eval_word_file, eval_out;
  std::uint32_t eval_mod = 0;
  eval->add_option("--n", eval_n, "Number of strands");
  eval->add_option("--word", eval_word, "Braid word, e.g. \"1 2 -1\"");
  eval->add_option("--word-file", eval_word_file, "File with an optional n=<k>; header and letters");
  eval->add_option("--m", eval_mod, "Reduce the matrix mod m (0 = exact integers)");
  eval->add_option("--out", eval_out, "Also write the JSON result to this file");

  // --- member ---
  CLI::App* member = app.add_subcommand("member", "Test membership in a congruence subgroup");
  int member_n = 0;
  std::string member_word, member_word_file, member_out;
  std::uint32_t member_mod = 0;
  member->add_option("--n", member_n, "Number of strands");
  member->add_option("--word", member_word, "Braid word, e.g. \"1 2 -1\"");
  member->add_option("--word-file", member_word_file, "File with an optional n=<k>; header and letters");
  member->add_option("--m", member_mod, "Congruence level (0 = integral kernel)");
  member->add_option("--out", member_out, "Also write the JSON result to this file");

  // --- verify ---
  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string verify_suite, verify_out;
  std::vector<int> verify_ns;
  std::vector<std::uint32_t> verify_ps, verify_ms;
  int verify_samples = -1;
  size_t verify_limit = braidcong::kDefaultEnumLimit;
  std::uint64_t verify_seed = braidcong::kDefaultSeed;
  verify->add_option("--suite", verify_suite, "Suite name (see --list)")->required(false);
  bool verify_list = false;
  verify->add_flag("--list", verify_list, "List available suite names");
  verify->add_option("--n", verify_ns, "Strand counts to use instead of the suite defaults");
  verify->add_option("--p", verify_ps, "Odd primes to use instead of the suite defaults");
  verify->add_option("--m", verify_ms, "Composite levels to use instead of the suite defaults");
  verify->add_option("--samples", verify_samples, "Randomized-case sample count");
  verify->add_option("--limit", verify_limit, "Element cap for group closures");
  verify->add_option("--seed", verify_seed, "Seed for randomized cases");
  verify->add_option("--out", verify_out, "Also write the JSON report to this file");

  // --- enum ---
  CLI::App* enumerate = app.add_subcommand("enum", "Close a finite matrix group under multiplication");
  std::string enum_rep, enum_pure, enum_cp, enum_out;
  std::uint32_t enum_mod = 0;
  size_t enum_limit = braidcong::kDefaultEnumLimit;
  bool enum_allow_partial = false;
  enumerate->add_option("--rep", enum_rep, "Twist-generator images, e.g. n=3");
  enumerate->add_option("--pure", enum_pure, "Band-generator images, e.g. n=3");
  enumerate->add_option("--cp", enum_cp, "Congruence generators, e.g. p=3,half=2");
  enumerate->add_option("--mod", enum_mod, "Matrix modulus")->required();
  enumerate->add_option("--limit", enum_limit, "Element cap");
  enumerate->add_flag("--allow-partial", enum_allow_partial, "Exit 0 even when the cap is hit");
  enumerate->add_option("--out", enum_out, "Also write the JSON result to this file");

  // --- cosets ---
  CLI::App* cosets = app.add_subcommand("cosets", "Enumerate cosets of a finitely presented group");
  std::string cosets_preset, cosets_file, cosets_out;
  int cosets_n = 0;
  std::uint32_t cosets_p = 0;
  size_t cosets_max = braidcong::kDefaultMaxCosets;
  cosets->add_option("--preset", cosets_preset, "Built-in presentation: twist | band | symmetric");
  cosets->add_option("--file", cosets_file, "Presentation file (gens: header plus relator lines)");
  cosets->add_option("--n", cosets_n, "Strand count for presets");
  cosets->add_option("--p", cosets_p, "Odd prime level for presets");
  cosets->add_option("--max-cosets", cosets_max, "Coset cap");
  cosets->add_option("--out", cosets_out, "Also write the JSON result to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval)) {
      BraidWord w = load_word(eval_n, eval_word, eval_word_file);
      nlohmann::json payload{{"schema", 1},
                             {"n", w.strands},
                             {"letters", w.letters},
                             {"permutation", braidcong::permutation(w).one_indexed()},
                             {"trivial", braidcong::is_trivial(w)}};
      if (eval_mod == 0)
        payload["matrix"] = braidcong::to_json(braidcong::rho(w));
      else
        payload["matrix"] = braidcong::to_json(braidcong::rho_mod(w, eval_mod));
      emit(payload, eval_out);
      return 0;
    }

    if (app.got_subcommand(member)) {
      BraidWord w = load_word(member_n, member_word, member_word_file);
      bool is_member =
          member_mod == 0 ? braidcong::in_torelli(w) : braidcong::in_congruence(w, member_mod);
      nlohmann::json payload{{"schema", 1},
                             {"n", w.strands},
                             {"m", member_mod},
                             {"letters", w.letters},
                             {"member", is_member}};
      emit(payload, member_out);
      return is_member ? 0 : 1;
    }

    if (app.got_subcommand(verify)) {
      if (verify_list) {
        nlohmann::json payload{{"schema", 1}, {"suites", braidcong::suite_names()}};
        emit(payload, verify_out);
        return 0;
      }
      if (verify_suite.empty()) throw std::invalid_argument("pass --suite <name> or --list");
      if (!braidcong::is_suite_name(verify_suite))
        throw std::invalid_argument("unknown suite '" + verify_suite + "'");
      braidcong::SuiteConfig config;
      config.ns = verify_ns;
      config.ps = verify_ps;
      config.ms = verify_ms;
      if (verify_samples >= 0) config.samples = verify_samples;
      config.limit = verify_limit;
      config.seed = verify_seed;
      braidcong::Report report = braidcong::run_suite(verify_suite, config);
      emit(report.to_json(), verify_out);
      return report.all_pass() ? 0 : 1;
    }

    if (app.got_subcommand(enumerate)) {
      int sources = (!enum_rep.empty()) + (!enum_pure.empty()) + (!enum_cp.empty());
      if (sources != 1) throw std::invalid_argument("give exactly one of --rep, --pure, --cp");
      std::vector<braidcong::ModularMatrix> gens;
      if (!enum_rep.empty()) {
        auto kv = parse_kv(enum_rep);
        if (!kv.count("n")) throw std::invalid_argument("--rep needs n=<strands>");
        braidcong::RepSpace space = braidcong::rep_space(static_cast<int>(kv.at("n")));
        for (const braidcong::IntegerMatrix& s : space.sigma) gens.push_back(braidcong::reduce_mod(s, enum_mod));
      } else if (!enum_pure.empty()) {
        auto kv = parse_kv(enum_pure);
        if (!kv.count("n")) throw std::invalid_argument("--pure needs n=<strands>");
        int n = static_cast<int>(kv.at("n"));
        braidcong::RepSpace space = braidcong::rep_space(n);
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            gens.push_back(braidcong::rho_mod(space, braidcong::pure_generator(i, j, n), enum_mod));
      } else {
        auto kv = parse_kv(enum_cp);
        if (!kv.count("p") || !kv.count("half")) throw std::invalid_argument("--cp needs p=<prime>,half=<g>");
        for (const braidcong::IntegerMatrix& m :
             braidcong::church_putman_set(braidcong::Int(kv.at("p")), static_cast<int>(kv.at("half"))))
          gens.push_back(braidcong::reduce_mod(m, enum_mod));
      }
      braidcong::FiniteMatrixGroup group = braidcong::FiniteMatrixGroup::generate(gens, enum_limit);
      nlohmann::json payload{{"schema", 1},
                             {"generators", gens.size()},
                             {"mod", enum_mod},
                             {"order", group.size()},
                             {"abelian", group.is_abelian()},
                             {"limit_hit", !group.complete()}};
      payload["exponent"] = group.complete() ? nlohmann::json(group.exponent()) : nlohmann::json(nullptr);
      emit(payload, enum_out);
      if (!group.complete()) return enum_allow_partial ? 0 : 1;
      return 0;
    }

    if (app.got_subcommand(cosets)) {
      if (cosets_preset.empty() == cosets_file.empty())
        throw std::invalid_argument("give exactly one of --preset or --file");
      braidcong::Presentation pres;
      if (!cosets_file.empty()) {
        pres = braidcong::parse_presentation(read_file(cosets_file));
      } else if (cosets_preset == "twist") {
        pres = braidcong::presentation_G(cosets_n, cosets_p);
      } else if (cosets_preset == "band") {
        pres = braidcong::presentation_H(cosets_n, cosets_p);
      } else if (cosets_preset == "symmetric") {
        pres = braidcong::presentation_S(cosets_n);
      } else {
        throw std::invalid_argument("unknown preset '" + cosets_preset + "' (twist | band | symmetric)");
      }
      braidcong::CosetTable table = braidcong::coset_enumerate(pres, cosets_max);
      nlohmann::json payload{{"schema", 1},
                             {"generators", pres.generators},
                             {"relators", pres.relators.size()},
                             {"status", table.complete() ? "complete" : "limit"},
                             {"cosets", table.live_cosets}};
      emit(payload, cosets_out);
      return table.complete() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
