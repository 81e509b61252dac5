#include "indeperm/cli.hpp"

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indeperm/bijection132.hpp"
#include "indeperm/brute_force.hpp"
#include "indeperm/closed_forms.hpp"
#include "indeperm/errors.hpp"
#include "indeperm/identities.hpp"
#include "indeperm/oeis.hpp"

namespace indeperm {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNetwork = 3;

struct SeqOptions {
  std::string pattern;
  bool indecomposable = false;
  bool by_descents = false;
  int max_n = 0;
  std::string source = "brute";
  std::string format = "json";
};

struct VerifyOptions {
  std::string identity;
  std::string lemma;
  bool all = false;
  int max_n = 0;
};

struct BijOptions {
  int n = 0;
  std::string format = "json";
};

struct OeisOptions {
  std::string pattern;
  bool indecomposable = false;
  std::string oeis_id;
  int max_n = 0;
  std::string cache_dir;
  bool offline = false;
};

// Closed-form total avoider count where one exists for the pattern's class.
Int formula_total(const VincularPattern& p, int n) {
  switch (classify_pattern(p)) {
    case PatternClass::Catalan3:
    case PatternClass::P123:
    case PatternClass::P132_213:
    case PatternClass::V213:
    case PatternClass::V231:
      return catalan(n);
    case PatternClass::Class4321:
    case PatternClass::P1234:
    case PatternClass::P2143:
    case PatternClass::P2134:
    case PatternClass::P3214:
      return avoiders_1234(n);
    case PatternClass::Class2431:
    case PatternClass::P2314_3124:
      return avoiders_1342(n);
    case PatternClass::V123:
    case PatternClass::V132:
    case PatternClass::V312_321:
      return bell(n);
    case PatternClass::P1324:
    case PatternClass::P4231:
      break;
  }
  throw std::invalid_argument("no closed form is known for total " + p.to_string() + " avoiders");
}

int run_seq(const SeqOptions& opt, std::ostream& out) {
  const VincularPattern pattern = VincularPattern::parse(opt.pattern);
  if (opt.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
  if (opt.source == "formula" && opt.by_descents) {
    throw std::invalid_argument("--by-descents requires --source brute");
  }
  const Restrict restrict =
      opt.indecomposable ? Restrict::IndecomposableOnly : Restrict::All;

  Json results = Json::array();
  std::vector<std::string> csv_rows;
  for (int n = 1; n <= opt.max_n; ++n) {
    if (opt.by_descents) {
      const auto dist = descent_distribution(pattern, n, restrict);
      for (std::size_t i = 0; i < dist.size(); ++i) {
        results.push_back({{"n", n}, {"i", i}, {"count", dist[i].str()}});
        csv_rows.push_back(std::to_string(n) + "," + std::to_string(i) + "," + dist[i].str());
      }
    } else {
      const Int count = opt.source == "formula"
                            ? (opt.indecomposable ? indecomposable_count(pattern, n)
                                                  : formula_total(pattern, n))
                            : count_avoiders(pattern, n, restrict);
      results.push_back({{"n", n}, {"count", count.str()}});
      csv_rows.push_back(std::to_string(n) + "," + count.str());
    }
  }

  if (opt.format == "csv") {
    out << (opt.by_descents ? "n,descents,count" : "n,count") << "\n";
    for (const auto& row : csv_rows) out << row << "\n";
    return kExitPass;
  }
  Json report;
  report["command"] = "seq";
  report["parameters"] = {{"pattern", opt.pattern},
                          {"indecomposable", opt.indecomposable},
                          {"by_descents", opt.by_descents},
                          {"max_n", opt.max_n},
                          {"source", opt.source},
                          {"format", opt.format}};
  report["results"] = std::move(results);
  report["status"] = "ok";
  out << report.dump(2) << "\n";
  return kExitPass;
}

Json identity_to_json(const IdentityRecord& r) {
  Json j{{"kind", "identity"},
         {"id", r.id},
         {"description", r.description},
         {"bivariate", r.bivariate},
         {"order", r.order},
         {"status", r.status == IdentityRecord::Status::Pass ? "pass" : "fail"},
         {"seconds", r.seconds}};
  if (r.witness) {
    j["witness"] = {{"n", r.witness->n},
                    {"i", r.witness->i},
                    {"lhs", r.witness->lhs.str()},
                    {"rhs", r.witness->rhs.str()}};
  }
  return j;
}

Json lemma_to_json(const LemmaReport& r) {
  Json j{{"kind", "lemma"}, {"id", r.lemma_id}, {"n", r.n}, {"status", r.pass ? "pass" : "fail"}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  if (opt.max_n < 2) throw std::invalid_argument("--max-n must be at least 2");
  if (!opt.all && opt.identity.empty() && opt.lemma.empty()) {
    throw std::invalid_argument("nothing to verify: give --identity, --lemma, or --all");
  }

  Json results = Json::array();
  Json notes = Json::array();
  bool pass = true;

  if (opt.all) {
    const SuiteReport suite = run_all(opt.max_n);
    for (const auto& r : suite.identities) results.push_back(identity_to_json(r));
    results.push_back(Json{{"kind", "wilf"},
                           {"max_n", suite.wilf.max_n},
                           {"profiles_distinct", suite.wilf.profiles_distinct},
                           {"status", suite.wilf.pass ? "pass" : "fail"},
                           {"detail", suite.wilf.detail}});
    for (const auto& note : suite.notes) notes.push_back(note);
    pass = suite.all_pass();
    for (const auto& lemma : structure_lemma_catalog()) {
      for (int n = 2; n <= opt.max_n; ++n) {
        const LemmaReport r = check_structure_lemma(lemma, n);
        pass = pass && r.pass;
        results.push_back(lemma_to_json(r));
      }
    }
  }
  if (!opt.identity.empty()) {
    const IdentityRecord r = verify_identity(opt.identity, opt.max_n, /*track_descents=*/true);
    pass = pass && r.status == IdentityRecord::Status::Pass;
    results.push_back(identity_to_json(r));
  }
  if (!opt.lemma.empty()) {
    for (int n = 2; n <= opt.max_n; ++n) {
      const LemmaReport r = check_structure_lemma(opt.lemma, n);
      pass = pass && r.pass;
      results.push_back(lemma_to_json(r));
    }
  }

  Json report;
  report["command"] = "verify";
  report["parameters"] = {{"identity", opt.identity},
                          {"lemma", opt.lemma},
                          {"all", opt.all},
                          {"max_n", opt.max_n}};
  report["results"] = std::move(results);
  if (!notes.empty()) report["notes"] = std::move(notes);
  report["status"] = pass ? "pass" : "fail";
  out << report.dump(2) << "\n";
  return pass ? kExitPass : kExitMismatch;
}

int run_bij(const BijOptions& opt, std::ostream& out) {
  if (opt.n < 2) throw std::invalid_argument("--n must be at least 2");
  const auto domain = collect_avoiders(VincularPattern::parse("1-32"), opt.n,
                                       Restrict::IndecomposableOnly);
  Json results = Json::array();
  std::vector<std::string> csv_rows;
  for (const auto& p : domain) {
    const Permutation image = bij::forward(p);
    results.push_back({{"source", p.to_string()}, {"image", image.to_string()}});
    csv_rows.push_back(p.to_string() + "," + image.to_string());
  }
  if (opt.format == "csv") {
    out << "source,image\n";
    for (const auto& row : csv_rows) out << row << "\n";
    return kExitPass;
  }
  Json report;
  report["command"] = "bij";
  report["parameters"] = {{"n", opt.n}, {"format", opt.format}};
  report["results"] = std::move(results);
  report["status"] = "ok";
  out << report.dump(2) << "\n";
  return kExitPass;
}

int run_oeis_check(const OeisOptions& opt, std::ostream& out) {
  const VincularPattern pattern = VincularPattern::parse(opt.pattern);
  if (opt.max_n < 1) throw std::invalid_argument("--max-n must be at least 1");

  SequenceRecord ours;
  ours.name = opt.pattern + (opt.indecomposable ? " indecomposable avoiders" : " avoiders");
  ours.provenance = Provenance::BruteForce;
  const Restrict restrict =
      opt.indecomposable ? Restrict::IndecomposableOnly : Restrict::All;
  for (int n = 1; n <= opt.max_n; ++n) {
    ours.values.emplace_back(n, count_avoiders(pattern, n, restrict));
  }

  const std::filesystem::path cache_dir =
      opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir);
  const SequenceRecord reference = fetch_bfile(opt.oeis_id, cache_dir, opt.offline);

  const ManifestEntry* entry = manifest_lookup(opt.oeis_id);
  const int min_n = entry ? entry->min_n : 1;
  SequenceRecord trimmed;
  trimmed.name = ours.name;
  trimmed.provenance = ours.provenance;
  for (const auto& [n, v] : ours.values) {
    if (n >= min_n) trimmed.values.emplace_back(n, v);
  }

  std::optional<int> shift;
  std::string alignment = "manifest";
  if (entry != nullptr && entry->shift.has_value()) {
    shift = *entry->shift;
  } else {
    shift = auto_align(trimmed, reference);
    alignment = "auto";
  }

  Json report;
  report["command"] = "oeis-check";
  report["parameters"] = {{"pattern", opt.pattern},
                          {"indecomposable", opt.indecomposable},
                          {"oeis", opt.oeis_id},
                          {"max_n", opt.max_n},
                          {"offline", opt.offline},
                          {"min_n", min_n},
                          {"alignment", alignment}};
  Json values = Json::array();
  for (const auto& [n, v] : trimmed.values) values.push_back({{"n", n}, {"count", v.str()}});

  bool pass = false;
  Json results;
  if (shift.has_value()) {
    const CompareReport cmp = compare(trimmed, reference, shift.value());
    results = {{"values", std::move(values)},
               {"shift", cmp.shift},
               {"overlap", Json::array({cmp.overlap_lo, cmp.overlap_hi})},
               {"match_length", cmp.match_length}};
    if (cmp.first_mismatch) {
      results["first_mismatch"] = {{"n", cmp.first_mismatch->n},
                                   {"ours", cmp.first_mismatch->ours.str()},
                                   {"oeis", cmp.first_mismatch->reference.str()}};
    }
    pass = cmp.full_match;
  } else {
    results = {{"values", std::move(values)},
               {"error", "no alignment with a full match found for shifts in [-4, 4]"}};
  }
  report["results"] = std::move(results);
  report["status"] = pass ? "pass" : "fail";
  out << report.dump(2) << "\n";
  return pass ? kExitPass : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and verification for pattern-avoiding indecomposable "
               "permutations"};
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print avoider counts for a pattern");
  seq_cmd->add_option("--pattern", seq.pattern, "Pattern in dash notation, e.g. 1-32")->required();
  seq_cmd->add_flag("--indecomposable", seq.indecomposable, "Count indecomposable avoiders only");
  seq_cmd->add_flag("--by-descents", seq.by_descents, "Refine counts by descent number");
  seq_cmd->add_option("--max-n", seq.max_n, "Largest length to compute")->required();
  seq_cmd->add_option("--source", seq.source, "Value source (default brute)")
      ->check(CLI::IsMember({"brute", "formula"}));
  seq_cmd->add_option("--format", seq.format, "Output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity and lemma checks");
  auto* identity_opt = verify_cmd->add_option("--identity", verify.identity, "One identity id");
  verify_cmd->add_option("--lemma", verify.lemma, "One structure lemma id");
  verify_cmd->add_flag("--all", verify.all, "Run the whole catalog")->excludes(identity_opt);
  verify_cmd->add_option("--max-n", verify.max_n, "Verification order")->required();

  BijOptions bij_opt;
  auto* bij_cmd = app.add_subcommand("bij", "Tabulate the 1-32 rise correspondence");
  bij_cmd->add_option("--n", bij_opt.n, "Permutation length")->required();
  bij_cmd->add_option("--format", bij_opt.format, "Output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  OeisOptions oeis;
  auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare a computed sequence with a b-file");
  oeis_cmd->add_option("--pattern", oeis.pattern, "Pattern in dash notation")->required();
  oeis_cmd->add_flag("--indecomposable", oeis.indecomposable, "Use indecomposable counts");
  oeis_cmd->add_option("--oeis", oeis.oeis_id, "Sequence id, e.g. A000108")->required();
  oeis_cmd->add_option("--max-n", oeis.max_n, "Largest length to compute")->required();
  oeis_cmd->add_option("--cache-dir", oeis.cache_dir, "b-file cache directory");
  oeis_cmd->add_flag("--offline", oeis.offline, "Never touch the network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (seq_cmd->parsed()) return run_seq(seq, out);
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (bij_cmd->parsed()) return run_bij(bij_opt, out);
    if (oeis_cmd->parsed()) return run_oeis_check(oeis, out);
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace indeperm
