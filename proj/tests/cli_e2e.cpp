#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary_path() {
  const char* bin = std::getenv("BRAIDCONG_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "BRAIDCONG_BIN must point at the command line binary");
  return bin;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = "\"" + binary_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

nlohmann::json parse_json(const std::string& text) {
  return nlohmann::json::parse(text);
}

std::string temp_file(const std::string& stem, const std::string& contents) {
  std::string path = "/tmp/" + stem + "-" + std::to_string(getpid()) + ".txt";
  std::ofstream f(path);
  f << contents;
  f.close();
  return path;
}

}  // namespace

TEST_CASE("eval prints the integral matrix and permutation") {
  RunResult r = run_cli("eval --n 3 --word \"1 2 -1\"");
  REQUIRE(r.code == 0);
  nlohmann::json j = parse_json(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 3);
  CHECK(j["letters"] == nlohmann::json::array({1, 2, -1}));
  CHECK(j["matrix"]["dim"] == 2);
  CHECK(j["matrix"]["mod"].is_null());
  CHECK(j["permutation"].size() == 3);
  CHECK(j["trivial"] == false);
}

TEST_CASE("eval reduces mod m on request") {
  RunResult r = run_cli("eval --n 3 --word \"1 1 1\" --m 3");
  REQUIRE(r.code == 0);
  nlohmann::json j = parse_json(r.out);
  CHECK(j["matrix"]["mod"] == 3);
  CHECK(j["matrix"]["rows"] == nlohmann::json::array({{1, 0}, {0, 1}}));
  CHECK(j["trivial"] == false);  // the word itself is nontrivial in the braid group
}

TEST_CASE("eval detects trivial words") {
  RunResult r = run_cli("eval --n 3 --word \"1 2 -2 -1\"");
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["trivial"] == true);
}

TEST_CASE("member exit codes distinguish membership") {
  CHECK(run_cli("member --n 3 --word \"1 1 1\" --m 3").code == 0);
  CHECK(run_cli("member --n 3 --word \"1\" --m 3").code == 1);
  // Integral kernel membership via m = 0.
  CHECK(run_cli("member --n 3 --word \"1 2 1 2 1 2 1 2 1 2 1 2\" --m 0").code == 0);
  CHECK(run_cli("member --n 3 --word \"1 1 1\" --m 0").code == 1);
  nlohmann::json j = parse_json(run_cli("member --n 3 --word \"1 1 1\" --m 3").out);
  CHECK(j["member"] == true);
  CHECK(j["m"] == 3);
}

TEST_CASE("word files carry their own strand count") {
  std::string path = temp_file("word-ok", "n=3; 1 1 1\n");
  CHECK(run_cli("member --word-file " + path + " --m 3").code == 0);
  CHECK(run_cli("member --n 4 --word-file " + path + " --m 3").code == 2);
  std::remove(path.c_str());
  std::string bare = temp_file("word-bare", "1 1 1\n");
  CHECK(run_cli("member --n 3 --word-file " + bare + " --m 3").code == 0);
  CHECK(run_cli("member --word-file " + bare + " --m 3").code == 2);  // no strand count anywhere
  std::remove(bare.c_str());
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(run_cli("eval --n 3 --word \"5\"").code == 2);
  CHECK(run_cli("eval --n 3 --word \"0\"").code == 2);
  CHECK(run_cli("eval --n 3 --word \"1 x\"").code == 2);
  CHECK(run_cli("eval --n 3").code == 2);                              // no word at all
  CHECK(run_cli("eval --n 3 --word \"1\" --word-file /nope").code == 2);
  CHECK(run_cli("member --n 3 --word \"1\"").code == 1);  // --m defaults to the integral kernel
  CHECK(run_cli("bogus-subcommand").code == 2);
}

TEST_CASE("verify lists suites and runs them") {
  RunResult list = run_cli("verify --list");
  REQUIRE(list.code == 0);
  CHECK(list.out.find("wajnryb") != std::string::npos);
  CHECK(list.out.find("theorem-b") != std::string::npos);
  CHECK(list.out.find("symmetric-quotient") != std::string::npos);

  RunResult b33 = run_cli("verify --suite b33");
  REQUIRE(b33.code == 0);
  nlohmann::json j = parse_json(b33.out);
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "b33");
  REQUIRE(!j["cases"].empty());
  for (const auto& c : j["cases"]) CHECK(c["status"] == "pass");

  CHECK(run_cli("verify --suite lemma42 --p 5").code == 0);
  CHECK(run_cli("verify --suite no-such-suite").code == 2);
}

TEST_CASE("seeded verification output is byte stable") {
  std::string args = "verify --suite prop34 --p 3 --samples 40 --seed 7";
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  RunResult other_seed = run_cli("verify --suite prop34 --p 3 --samples 40 --seed 8");
  CHECK(other_seed.code == 0);  // different seed still passes, params differ
}

TEST_CASE("enum reports image orders") {
  RunResult r = run_cli("enum --rep n=3 --mod 3");
  REQUIRE(r.code == 0);
  nlohmann::json j = parse_json(r.out);
  CHECK(j["order"] == 24);
  CHECK(j["limit_hit"] == false);
  CHECK(j["mod"] == 3);

  nlohmann::json pure = parse_json(run_cli("enum --pure n=3 --mod 3").out);
  CHECK(pure["order"] == 24);

  nlohmann::json cp = parse_json(run_cli("enum --cp p=3,half=1 --mod 9").out);
  CHECK(cp["order"] == 27);
  CHECK(cp["abelian"] == true);
}

TEST_CASE("enum limit handling") {
  RunResult cut = run_cli("enum --rep n=3 --mod 3 --limit 10");
  CHECK(cut.code == 1);
  nlohmann::json j = parse_json(cut.out);
  CHECK(j["limit_hit"] == true);
  CHECK(j["exponent"].is_null());
  CHECK(run_cli("enum --rep n=3 --mod 3 --limit 10 --allow-partial").code == 0);
  CHECK(run_cli("enum --rep n=3").code == 2);                 // --mod required
  CHECK(run_cli("enum --mod 3").code == 2);                   // no generator spec
  CHECK(run_cli("enum --rep n=3 --cp p=3,half=1 --mod 3").code == 2);
}

TEST_CASE("cosets presets and files") {
  nlohmann::json sym = parse_json(run_cli("cosets --preset symmetric --n 3").out);
  CHECK(sym["cosets"] == 6);
  CHECK(sym["status"] == "complete");
  nlohmann::json tw = parse_json(run_cli("cosets --preset twist --n 3 --p 3").out);
  CHECK(tw["cosets"] == 24);
  nlohmann::json band = parse_json(run_cli("cosets --preset band --n 3 --p 3").out);
  CHECK(band["cosets"] == 24);

  std::string path = temp_file("presentation", "gens: 1\n1 1 1 1 1\n");
  nlohmann::json c5 = parse_json(run_cli("cosets --file " + path).out);
  CHECK(c5["cosets"] == 5);
  std::remove(path.c_str());

  RunResult capped = run_cli("cosets --preset twist --n 3 --p 5 --max-cosets 10");
  CHECK(capped.code == 1);
  CHECK(parse_json(capped.out)["status"] == "limit");

  std::string bad = temp_file("presentation-bad", "1 1\n");
  CHECK(run_cli("cosets --file " + bad).code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("reports can be written to a file") {
  std::string path = "/tmp/braidcong-out-" + std::to_string(getpid()) + ".json";
  RunResult r = run_cli("verify --suite b33 --out " + path);
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content == r.out);
  std::remove(path.c_str());
}
