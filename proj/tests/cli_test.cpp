#include "indeperm/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"indeperm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      indeperm::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> counts_of(const Json& report) {
  std::vector<std::string> out;
  for (const auto& row : report.at("results")) out.push_back(row.at("count"));
  return out;
}

const char* kFixtures = INDEPERM_FIXTURE_DIR;

}  // namespace

TEST_CASE("seq reports counts as json") {
  const auto result = run({"seq", "--pattern", "2-4-3-1", "--indecomposable", "--max-n", "8"});
  REQUIRE(result.code == 0);
  const Json report = Json::parse(result.out);
  CHECK(report.at("command") == "seq");
  CHECK(report.at("status") == "ok");
  CHECK(report.at("parameters").at("pattern") == "2-4-3-1");
  CHECK(report.at("parameters").at("indecomposable") == true);
  CHECK(counts_of(report) ==
        std::vector<std::string>{"1", "1", "3", "12", "56", "288", "1584", "9152"});
  // the report round-trips through parse
  CHECK(Json::parse(report.dump()) == report);
}

TEST_CASE("seq handles the pattern nothing avoids") {
  const auto result = run({"seq", "--pattern", "1", "--max-n", "3"});
  REQUIRE(result.code == 0);
  CHECK(counts_of(Json::parse(result.out)) == std::vector<std::string>{"0", "0", "0"});
}

TEST_CASE("seq csv output") {
  const auto result = run({"seq", "--pattern", "1-2-3", "--max-n", "4", "--format", "csv"});
  REQUIRE(result.code == 0);
  CHECK(result.out == "n,count\n1,1\n2,2\n3,5\n4,14\n");
}

TEST_CASE("seq by descents") {
  const auto result =
      run({"seq", "--pattern", "1-2-3", "--max-n", "3", "--by-descents", "--format", "csv"});
  REQUIRE(result.code == 0);
  CHECK(result.out == "n,descents,count\n1,0,1\n2,0,1\n2,1,1\n3,0,0\n3,1,4\n3,2,1\n");

  const auto json_result = run({"seq", "--pattern", "1-2-3", "--max-n", "3", "--by-descents"});
  const Json report = Json::parse(json_result.out);
  CHECK(report.at("results")[0] == Json({{"n", 1}, {"i", 0}, {"count", "1"}}));
}

TEST_CASE("formula and brute force sources agree where both exist") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"seq", "--pattern", "1-2-3", "--indecomposable", "--max-n", "7"},
           {"seq", "--pattern", "2-4-3-1", "--indecomposable", "--max-n", "7"},
           {"seq", "--pattern", "1-23", "--max-n", "7"},
           {"seq", "--pattern", "1-32", "--indecomposable", "--max-n", "7"},
       }) {
    auto brute_args = args;
    brute_args.push_back("--source");
    brute_args.push_back("brute");
    auto formula_args = args;
    formula_args.push_back("--source");
    formula_args.push_back("formula");
    const auto brute = run(brute_args);
    const auto formula = run(formula_args);
    REQUIRE(brute.code == 0);
    REQUIRE(formula.code == 0);
    CHECK(counts_of(Json::parse(brute.out)) == counts_of(Json::parse(formula.out)));
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"seq", "--max-n", "3"}).code == 2);                                // missing pattern
  CHECK(run({"seq", "--pattern", "1-22", "--max-n", "3"}).code == 2);           // bad pattern
  CHECK(run({"seq", "--pattern", "1-2-3", "--max-n", "0"}).code == 2);
  CHECK(run({"seq", "--pattern", "1-2-3", "--max-n", "3", "--wat"}).code == 2); // unknown flag
  CHECK(run({"seq", "--pattern", "1-2-3", "--max-n", "3", "--source", "formula",
             "--by-descents"})
            .code == 2);
  CHECK(run({"seq", "--pattern", "1-3-2-4", "--max-n", "3", "--source", "formula"}).code == 2);
  CHECK(run({"seq", "--pattern", "1-2-3", "--max-n", "99"}).code == 2);         // beyond the cap
  CHECK(run({"verify", "--max-n", "4"}).code == 2);                             // nothing to do
  CHECK(run({"verify", "--identity", "eq:nope", "--max-n", "4"}).code == 2);
  CHECK(run({"bij", "--n", "1"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("verify single identity and lemma") {
  const auto identity = run({"verify", "--identity", "eq:123", "--max-n", "6"});
  REQUIRE(identity.code == 0);
  const Json report = Json::parse(identity.out);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("results")[0].at("id") == "eq:123");

  const auto lemma = run({"verify", "--lemma", "132", "--max-n", "5"});
  REQUIRE(lemma.code == 0);
  const Json lemma_report = Json::parse(lemma.out);
  CHECK(lemma_report.at("status") == "pass");
  CHECK(lemma_report.at("results").size() == 4);  // n = 2..5
}

TEST_CASE("verify --all runs the whole catalog") {
  const auto result = run({"verify", "--all", "--max-n", "5"});
  REQUIRE(result.code == 0);
  const Json report = Json::parse(result.out);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("notes").size() == 2);
  CHECK(report.at("results").size() >= 35);  // identities + wilf + lemmas
}

TEST_CASE("bij tabulates the correspondence") {
  const auto result = run({"bij", "--n", "3"});
  REQUIRE(result.code == 0);
  const Json report = Json::parse(result.out);
  CHECK(report.at("results") ==
        Json::parse(R"([{"source":"231","image":"123"},
                        {"source":"312","image":"312"},
                        {"source":"321","image":"213"}])"));

  const auto csv = run({"bij", "--n", "3", "--format", "csv"});
  CHECK(csv.out == "source,image\n231,123\n312,312\n321,213\n");
}

TEST_CASE("oeis-check against cached fixtures") {
  const auto pass = run({"oeis-check", "--pattern", "2-4-3-1", "--indecomposable", "--oeis",
                         "A000257", "--max-n", "7", "--cache-dir", kFixtures, "--offline"});
  REQUIRE(pass.code == 0);
  const Json report = Json::parse(pass.out);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("results").at("shift") == -1);
  CHECK(report.at("results").at("match_length") == 7);

  const auto fail = run({"oeis-check", "--pattern", "1-2-3", "--oeis", "A000257", "--max-n", "6",
                         "--cache-dir", kFixtures, "--offline"});
  CHECK(fail.code == 1);
  CHECK(Json::parse(fail.out).at("status") == "fail");

  const auto missing = run({"oeis-check", "--pattern", "1-2-3", "--oeis", "A999999", "--max-n",
                            "5", "--cache-dir", kFixtures, "--offline"});
  CHECK(missing.code == 3);

  const auto malformed = run({"oeis-check", "--pattern", "1-2-3", "--oeis", "X17", "--max-n", "5",
                              "--cache-dir", kFixtures, "--offline"});
  CHECK(malformed.code == 2);
}

TEST_CASE("oeis-check applies the manifest alignment") {
  const auto result = run({"oeis-check", "--pattern", "1-32", "--indecomposable", "--oeis",
                           "A005493", "--max-n", "8", "--cache-dir", kFixtures, "--offline"});
  REQUIRE(result.code == 0);
  const Json report = Json::parse(result.out);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("parameters").at("min_n") == 2);
  CHECK(report.at("results").at("shift") == -2);
}

TEST_CASE("oeis-check aligns ids outside the manifest empirically") {
  // Serve the Catalan b-file under an id the manifest knows nothing about;
  // the shift has to be recovered by scanning.
  namespace fs = std::filesystem;
  const fs::path cache = fs::temp_directory_path() / "indeperm-cli-auto";
  fs::create_directories(cache);
  fs::copy_file(fs::path(kFixtures) / "b000108.txt", cache / "b999108.txt",
                fs::copy_options::overwrite_existing);

  const auto result = run({"oeis-check", "--pattern", "1-2-3", "--oeis", "A999108", "--max-n",
                           "8", "--cache-dir", cache.string(), "--offline"});
  REQUIRE(result.code == 0);
  const Json report = Json::parse(result.out);
  CHECK(report.at("status") == "pass");
  CHECK(report.at("parameters").at("alignment") == "auto");
  CHECK(report.at("results").at("shift") == 0);
  fs::remove_all(cache);
}
