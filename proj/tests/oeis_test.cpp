#include "indeperm/oeis.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "indeperm/closed_forms.hpp"
#include "indeperm/errors.hpp"

using namespace indeperm;

namespace {

const std::filesystem::path kFixtures = INDEPERM_FIXTURE_DIR;

SequenceRecord make_record(std::string name, int lo, std::vector<long long> values) {
  SequenceRecord record;
  record.name = std::move(name);
  for (std::size_t i = 0; i < values.size(); ++i) {
    record.values.emplace_back(lo + static_cast<int>(i), Int(values[i]));
  }
  return record;
}

}  // namespace

TEST_CASE("b-file parsing") {
  std::istringstream in("# comment line\n0 1\n1 1\n2 2\n\n3 5\n");
  const auto record = parse_bfile(in, "A000108");
  CHECK(record.values.size() == 4);
  CHECK(record.values[3] == std::pair<int, Int>{3, Int(5)});
  CHECK(record.provenance == Provenance::Oeis);

  std::istringstream bad("0 1\nx 2\n");
  CHECK_THROWS_AS(parse_bfile(bad, "A000000"), DataError);
  std::istringstream unordered("2 1\n1 1\n");
  CHECK_THROWS_AS(parse_bfile(unordered, "A000000"), DataError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_bfile(empty, "A000000"), DataError);
}

TEST_CASE("cached fetch") {
  const auto record = fetch_bfile("A000108", kFixtures, /*offline=*/true);
  REQUIRE(record.values.size() >= 6);
  CHECK(record.values[0] == std::pair<int, Int>{0, Int(1)});
  CHECK(record.values[2] == std::pair<int, Int>{2, Int(2)});
  CHECK(record.values[3] == std::pair<int, Int>{3, Int(5)});

  CHECK_THROWS_AS(fetch_bfile("A999999", kFixtures, /*offline=*/true), NetworkError);
  CHECK_THROWS_AS(fetch_bfile("A1", kFixtures, true), std::invalid_argument);
  CHECK_THROWS_AS(fetch_bfile("000108", kFixtures, true), std::invalid_argument);
}

TEST_CASE("fetch over a local server writes the cache verbatim") {
  httplib::Server server;
  const std::string body = "# test sequence\n0 7\n1 9\n2 11\n";
  server.Get("/A999001/b999001.txt", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content(body, "text/plain");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) return;  // no sockets available in this environment
  std::thread worker([&] { server.listen_after_bind(); });

  const auto cache = std::filesystem::temp_directory_path() / "indeperm-oeis-test";
  std::filesystem::remove_all(cache);
  const std::string base_url = "http://127.0.0.1:" + std::to_string(port);
  const auto record = fetch_bfile("A999001", cache, /*offline=*/false, base_url);
  CHECK(record.values == std::vector<std::pair<int, Int>>{{0, 7}, {1, 9}, {2, 11}});

  std::ifstream cached(cache / "b999001.txt");
  std::stringstream contents;
  contents << cached.rdbuf();
  CHECK(contents.str() == body);

  // second fetch is served from the cache even in offline mode
  const auto again = fetch_bfile("A999001", cache, /*offline=*/true, base_url);
  CHECK(again.values == record.values);

  server.stop();
  worker.join();
  std::filesystem::remove_all(cache);
}

TEST_CASE("fetch failure surfaces as a network error") {
  const auto cache = std::filesystem::temp_directory_path() / "indeperm-oeis-miss";
  std::filesystem::remove_all(cache);
  CHECK_THROWS_AS(
      fetch_bfile("A999002", cache, /*offline=*/false, "http://127.0.0.1:1", /*timeout=*/1),
      NetworkError);
}

TEST_CASE("sequence comparison") {
  const auto a = make_record("ours", 1, {1, 1, 3, 12, 56});
  CHECK(compare(a, a, 0).full_match);

  const auto reference = fetch_bfile("A000257", kFixtures, true);
  const auto report = compare(a, reference, -1);
  CHECK(report.full_match);
  CHECK(report.overlap_lo == 1);
  CHECK(report.overlap_hi == 5);
  CHECK(report.match_length == 5);

  auto wrong = a;
  wrong.values[3].second = 13;
  const auto mismatch = compare(wrong, reference, -1);
  CHECK_FALSE(mismatch.full_match);
  REQUIRE(mismatch.first_mismatch.has_value());
  CHECK(mismatch.first_mismatch->n == 4);
  CHECK(mismatch.first_mismatch->ours == 13);
  CHECK(mismatch.first_mismatch->reference == 12);

  CHECK_THROWS_AS(compare(a, reference, 100), std::invalid_argument);
}

TEST_CASE("auto alignment recovers the manifest shifts") {
  std::vector<long long> v132;  // indecomposable 1-32 counts from n = 2
  for (int n = 2; n <= 9; ++n) {
    v132.push_back(static_cast<long long>(bell(n) - bell(n - 1)));
  }
  const auto ours = make_record("1-32 indecomposable", 2, std::move(v132));
  const auto reference = fetch_bfile("A005493", kFixtures, true);
  const auto shift = auto_align(ours, reference);
  REQUIRE(shift.has_value());
  CHECK(*shift == -2);
  CHECK(*shift == manifest_lookup("A005493")->shift.value());
}

TEST_CASE("manifest") {
  REQUIRE(manifest_lookup("A000245") != nullptr);
  CHECK(manifest_lookup("A000245")->shift == -1);
  CHECK(manifest_lookup("A000245")->min_n == 2);
  CHECK(manifest_lookup("A138378") != nullptr);
  CHECK_FALSE(manifest_lookup("A138378")->shift.has_value());
  CHECK(manifest_lookup("A999999") == nullptr);
}

TEST_CASE("default cache directory honours the environment") {
  ::setenv("INDEPERM_OEIS_CACHE", "/tmp/indeperm-cache-env", 1);
  CHECK(default_cache_dir() == std::filesystem::path("/tmp/indeperm-cache-env"));
  ::unsetenv("INDEPERM_OEIS_CACHE");
  CHECK(default_cache_dir() == std::filesystem::path(".oeis-cache"));
}
