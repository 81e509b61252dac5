#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indeperm/numeric.hpp"

namespace indeperm {

enum class Provenance { BruteForce, ClosedForm, Oeis };

/// A named integer sequence: strictly increasing indices with exact values.
struct SequenceRecord {
  std::string name;
  std::vector<std::pair<int, Int>> values;
  Provenance provenance = Provenance::BruteForce;
  std::optional<std::string> oeis_id;

  std::optional<Int> at(int n) const;
};

/// Parses b-file format: lines of "n a(n)" separated by whitespace, lines
/// starting with '#' ignored. Throws DataError on malformed content.
SequenceRecord parse_bfile(std::istream& in, const std::string& oeis_id);

/// Loads the b-file for `oeis_id` (format "A" + 6 digits) from `cache_dir`,
/// fetching it from `<base_url>/<id>/b<digits>.txt` on a cache miss unless
/// offline. The cache file is the verbatim b-file. Throws std::invalid_argument
/// on a malformed id, NetworkError when the data cannot be obtained, DataError
/// when it cannot be parsed.
SequenceRecord fetch_bfile(const std::string& oeis_id, const std::filesystem::path& cache_dir,
                           bool offline, const std::string& base_url = "https://oeis.org",
                           int timeout_seconds = 10);

struct SequenceMismatch {
  int n = 0;
  Int ours;
  Int reference;
};

struct CompareReport {
  int shift = 0;         // reference index = our n + shift
  int overlap_lo = 0;    // in our indexing
  int overlap_hi = 0;
  int match_length = 0;
  std::optional<SequenceMismatch> first_mismatch;
  bool full_match = false;
};

/// Compares over the overlapping index range after applying `offset_shift`.
/// Throws std::invalid_argument when the overlap is empty.
CompareReport compare(const SequenceRecord& ours, const SequenceRecord& reference,
                      int offset_shift);

/// Built-in alignment manifest for the sequences this suite knows about.
/// `shift` is absent when the alignment has to be determined empirically.
struct ManifestEntry {
  std::string oeis_id;
  std::optional<int> shift;
  int min_n = 1;  // first index of ours that is expected to participate
  std::string note;
};

const std::vector<ManifestEntry>& oeis_manifest();
const ManifestEntry* manifest_lookup(const std::string& oeis_id);

/// Scans small shifts and returns one giving a full match over a nonempty
/// overlap, if any.
std::optional<int> auto_align(const SequenceRecord& ours, const SequenceRecord& reference);

/// INDEPERM_OEIS_CACHE when set, ".oeis-cache" otherwise.
std::filesystem::path default_cache_dir();

}  // namespace indeperm
