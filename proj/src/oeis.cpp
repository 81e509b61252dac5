#include "indeperm/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "indeperm/errors.hpp"

namespace indeperm {

namespace {

bool valid_oeis_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  }
  return true;
}

bool valid_integer_token(const std::string& token) {
  if (token.empty()) return false;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Int> SequenceRecord::at(int n) const {
  for (const auto& [idx, v] : values) {
    if (idx == n) return v;
  }
  return std::nullopt;
}

SequenceRecord parse_bfile(std::istream& in, const std::string& oeis_id) {
  SequenceRecord record;
  record.name = oeis_id;
  record.provenance = Provenance::Oeis;
  record.oeis_id = oeis_id;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first[0] == '#') continue;
    std::string second;
    if (!(ls >> second) || !valid_integer_token(first) || !valid_integer_token(second)) {
      throw DataError(oeis_id + ": malformed b-file line " + std::to_string(line_no) + ": " + line);
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#') {
      throw DataError(oeis_id + ": trailing content on b-file line " + std::to_string(line_no));
    }
    const int n = std::stoi(first);
    if (!record.values.empty() && n <= record.values.back().first) {
      throw DataError(oeis_id + ": indices not strictly increasing at line " +
                      std::to_string(line_no));
    }
    record.values.emplace_back(n, Int(second));
  }
  if (record.values.empty()) throw DataError(oeis_id + ": b-file contains no data");
  return record;
}

SequenceRecord fetch_bfile(const std::string& oeis_id, const std::filesystem::path& cache_dir,
                           bool offline, const std::string& base_url, int timeout_seconds) {
  if (!valid_oeis_id(oeis_id)) {
    throw std::invalid_argument("malformed OEIS id (expected A followed by 6 digits): " + oeis_id);
  }
  const std::string bfile_name = "b" + oeis_id.substr(1) + ".txt";
  const std::filesystem::path cache_file = cache_dir / bfile_name;

  if (!std::filesystem::exists(cache_file)) {
    if (offline) {
      throw NetworkError(oeis_id + ": not cached and offline mode is set");
    }
    httplib::Client client(base_url);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_seconds);
    client.set_read_timeout(timeout_seconds);
    const std::string path = "/" + oeis_id + "/" + bfile_name;
    auto response = client.Get(path);
    if (!response || response->status != 200) {
      throw NetworkError(oeis_id + ": fetch failed (" +
                         (response ? "HTTP " + std::to_string(response->status)
                                   : httplib::to_string(response.error())) +
                         ")");
    }
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(cache_file, std::ios::binary);
    out << response->body;
    if (!out) throw DataError(oeis_id + ": failed to write cache file");
  }

  std::ifstream in(cache_file);
  if (!in) throw DataError(oeis_id + ": cannot read cache file " + cache_file.string());
  return parse_bfile(in, oeis_id);
}

CompareReport compare(const SequenceRecord& ours, const SequenceRecord& reference,
                      int offset_shift) {
  CompareReport report;
  report.shift = offset_shift;
  bool any = false;
  for (const auto& [n, v] : ours.values) {
    const auto ref = reference.at(n + offset_shift);
    if (!ref) continue;
    if (!any) {
      report.overlap_lo = n;
      any = true;
    }
    report.overlap_hi = n;
    if (v == *ref) {
      if (!report.first_mismatch) ++report.match_length;
    } else if (!report.first_mismatch) {
      report.first_mismatch = SequenceMismatch{n, v, *ref};
    }
  }
  if (!any) throw std::invalid_argument("sequences do not overlap under shift " +
                                        std::to_string(offset_shift));
  report.full_match = !report.first_mismatch.has_value();
  return report;
}

const std::vector<ManifestEntry>& oeis_manifest() {
  static const std::vector<ManifestEntry> manifest = {
      {"A003319", 0, 1, "indecomposable permutations"},
      {"A000108", 0, 1, "Catalan numbers; total avoiders of any length-3 classical pattern"},
      {"A000110", 0, 1, "Bell numbers; total avoiders of 1-23, 1-32, 3-12, 3-21"},
      {"A005802", 0, 1, "total avoiders of the 1234 length-4 class"},
      {"A022558", 0, 1, "total avoiders of the 1342 length-4 class"},
      {"A061552", 0, 1, "total 1324 avoiders"},
      {"A000257", -1, 1, "indecomposable avoiders of the 2431 class"},
      {"A000245", -1, 2, "indecomposable 132/213 avoiders; diverges at n=1 (1 vs 0)"},
      {"A074664", 0, 1, "indecomposable 3-12/3-21 avoiders"},
      {"A005493", -2, 2, "indecomposable 1-32 avoiders from n=2"},
      {"A138378", std::nullopt, 2, "related to indecomposable 1-32 avoiders; aligned empirically"},
  };
  return manifest;
}

const ManifestEntry* manifest_lookup(const std::string& oeis_id) {
  for (const auto& entry : oeis_manifest()) {
    if (entry.oeis_id == oeis_id) return &entry;
  }
  return nullptr;
}

std::optional<int> auto_align(const SequenceRecord& ours, const SequenceRecord& reference) {
  for (int shift = -4; shift <= 4; ++shift) {
    try {
      const CompareReport report = compare(ours, reference, shift);
      if (report.full_match && report.match_length >= 3) return shift;
    } catch (const std::invalid_argument&) {
      // empty overlap at this shift
    }
  }
  return std::nullopt;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("INDEPERM_OEIS_CACHE"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".oeis-cache";
}

}  // namespace indeperm
