// Command-line front end: enumeration, analysis, certification, censuses,
// representability searches, and identity checks over finite operation
// tables, with an on-disk cache for the expensive censuses.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dissoc/boolean_nand.hpp"
#include "dissoc/dissociativity.hpp"
#include "dissoc/evaluation.hpp"
#include "dissoc/formal_product.hpp"
#include "dissoc/groupoid.hpp"
#include "dissoc/representability.hpp"
#include "dissoc/separation.hpp"
#include "dissoc/yield.hpp"
#include "paper_checks.hpp"

namespace {

using nlohmann::json;
using namespace dissoc;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

constexpr const char* kCacheVersion = "dissoc-cache/1";

// ---------------------------------------------------------------------------
// Table references: named tables, "CI3_a", "n:j" codes, or JSON files.

GroupoidTable parse_table_ref(const std::string& ref) {
  if (ref == "B" || ref == "D" || ref == "E") return named_table(ref);
  if (ref.rfind("CI3_", 0) == 0) {
    return ci3_decode(static_cast<unsigned>(std::stoul(ref.substr(4))));
  }
  auto colon = ref.find(':');
  if (colon != std::string::npos &&
      ref.find_first_not_of("0123456789:") == std::string::npos) {
    unsigned n = static_cast<unsigned>(std::stoul(ref.substr(0, colon)));
    BigInt j(ref.substr(colon + 1));
    auto t = decode(n, j);
    t.set_name(ref);
    return t;
  }
  std::ifstream in(ref);
  if (!in) throw ParseError("cannot open table file '" + ref + "'");
  json doc = json::parse(in);
  std::vector<std::uint8_t> cells;
  for (auto v : doc.at("entries")) cells.push_back(v.get<std::uint8_t>());
  GroupoidTable t(doc.at("n").get<unsigned>(), std::move(cells));
  if (doc.contains("name")) t.set_name(doc["name"].get<std::string>());
  return t;
}

std::string table_label(const GroupoidTable& t) {
  if (!t.name().empty()) return t.name();
  return std::to_string(t.n()) + ":" + encode(t).j.str();
}

ElemSet parse_elem_list(const std::string& csv, unsigned n) {
  ElemSet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    unsigned e = static_cast<unsigned>(std::stoul(item));
    if (e >= n) throw ParseError("element " + item + " outside the universe");
    out.add(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cache: flat files keyed by a content hash of the job description.

std::optional<std::filesystem::path> cache_dir() {
  if (const char* dir = std::getenv("DISSOC_CACHE_DIR")) {
    if (*dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
  }
  if (const char* home = std::getenv("HOME")) {
    return std::filesystem::path(home) / ".cache" / "dissoc";
  }
  return std::nullopt;
}

std::optional<std::string> cache_load(const std::string& job) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::string key = std::string(kCacheVersion) + "|" + job;
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.out",
                static_cast<unsigned long long>(
                    detail::fnv1a64(key.data(), key.size())));
  std::ifstream in(*dir / name, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void cache_store(const std::string& job, const std::string& payload) {
  auto dir = cache_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;
  std::string key = std::string(kCacheVersion) + "|" + job;
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.out",
                static_cast<unsigned long long>(
                    detail::fnv1a64(key.data(), key.size())));
  std::ofstream out(*dir / name, std::ios::binary);
  out << payload;
}

// ---------------------------------------------------------------------------
// Subcommand implementations.  Each returns the exit code and writes its
// report to `out` so cached and fresh runs emit identical bytes.

int cmd_enumerate(unsigned k, const std::string& format, std::ostream& out) {
  auto all = enumerate_products(k);
  if (format == "json") {
    json rows = json::array();
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      rows.push_back({{"rank", r},
                      {"rpn", all[r].render()},
                      {"infix", all[r].to_infix()}});
    }
    out << json{{"schema", "dissoc.enumerate/1"},
                {"arity", k},
                {"count", all.size()},
                {"products", rows}}
            .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "rank,rpn,infix\n";
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      out << r << "," << all[r].render() << "," << all[r].to_infix() << "\n";
    }
  } else {
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      out << r << "\t" << all[r].render() << "\t" << all[r].to_infix() << "\n";
    }
  }
  return kExitOk;
}

int cmd_analyze(const GroupoidTable& t, unsigned k_max, unsigned degree_k_max,
                const std::string& format, std::ostream& out) {
  AgreementDP dp(t);
  std::vector<std::uint64_t> sat;
  for (unsigned k = 2; k <= k_max; ++k) sat.push_back(dp.class_count(k));
  std::optional<unsigned> threshold;
  for (unsigned k = 3; k <= k_max && !threshold; ++k) {
    if (BigInt(dp.class_count(k)) != product_count(k)) threshold = k;
  }
  std::vector<Sizing> sizings;
  for (unsigned k = 2; k <= k_max; ++k) {
    AgreementPartition p{k, {}};
    for (const auto& cls : dp.level(k)) {
      p.classes.push_back(AgreementClass{cls.vec, cls.size, cls.representative});
    }
    sizings.push_back(sizing_of(p));
  }
  std::vector<std::uint64_t> degrees;
  for (unsigned k = 3; k <= degree_k_max; ++k) {
    degrees.push_back(max_agreement(t, k));
  }

  if (format == "json") {
    json jsz = json::array();
    for (unsigned k = 2; k <= k_max; ++k) {
      json terms = json::array();
      for (auto [nu, card] : sizings[k - 2]) {
        terms.push_back({{"classes", nu}, {"cardinality", card}});
      }
      jsz.push_back({{"arity", k}, {"terms", terms}});
    }
    json doc{{"schema", "dissoc.analyze/1"},
             {"table", table_label(t)},
             {"n", t.n()},
             {"k_max", k_max},
             {"class_counts", sat},
             {"sizings", jsz}};
    doc["threshold"] = threshold ? json(*threshold) : json(nullptr);
    json jdeg = json::array();
    for (unsigned k = 3; k <= degree_k_max; ++k) {
      jdeg.push_back({{"arity", k}, {"max_agreement", degrees[k - 3]}});
    }
    doc["agreement_degrees"] = jdeg;
    out << doc.dump(2) << "\n";
  } else {
    out << "table " << table_label(t) << " (n=" << t.n() << ")\n";
    out << "class counts (k=2.." << k_max << "):";
    for (auto c : sat) out << " " << c;
    out << "\n";
    for (unsigned k = 2; k <= k_max; ++k) {
      out << "sizing k=" << k << ":";
      for (auto [nu, card] : sizings[k - 2]) {
        out << " <" << nu << "," << card << ">";
      }
      out << "\n";
    }
    if (threshold) {
      out << "first non-dissociative arity: " << *threshold << "\n";
    } else {
      out << "dissociative at every arity 3.." << k_max << "\n";
    }
    for (unsigned k = 3; k <= degree_k_max; ++k) {
      out << "max pairwise agreement at k=" << k << ": " << degrees[k - 3]
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_certify(const GroupoidTable& t, ElemSet T, unsigned K,
                std::uint64_t budget, const std::string& templates_file,
                const std::string& format, std::ostream& out) {
  std::vector<BlockPattern> extra;
  if (!templates_file.empty()) {
    std::ifstream in(templates_file);
    if (!in) throw ParseError("cannot open template file");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      extra.push_back(parse_pattern(line));
    }
  }
  auto rep = certify_separation(t, T, K, budget, extra);
  if (format == "json") {
    json pairs = json::array();
    for (const auto& p : rep.pairs) {
      pairs.push_back({{"x", p.x},
                       {"y", p.y},
                       {"left", {{"set", p.left.set.str()},
                                 {"evidence", p.left.evidence},
                                 {"all_length", p.left.all_length_valid}}},
                       {"right", {{"set", p.right.set.str()},
                                  {"evidence", p.right.evidence},
                                  {"all_length", p.right.all_length_valid}}}});
    }
    json splits = json::array();
    for (const auto& s : rep.splits) {
      std::string word;
      for (auto x : s.word) word += std::to_string(int(x));
      splits.push_back({{"i", s.i},
                        {"j", s.j},
                        {"k", s.k},
                        {"word", word},
                        {"values_at_i", s.values_at_i.str()},
                        {"values_at_j", s.values_at_j.str()}});
    }
    out << json{{"schema", "dissoc.certify/1"},
                {"table", table_label(t)},
                {"T", T.str()},
                {"K", K},
                {"verdict", rep.verdict()},
                {"pairs", pairs},
                {"splits", splits}}
            .dump(2)
        << "\n";
  } else {
    out << "table " << table_label(t) << ", T=" << T.str() << ", K=" << K
        << "\n";
    out << "verdict: " << rep.verdict() << "\n";
    for (const auto& p : rep.pairs) {
      out << "pair {" << int(p.x) << "," << int(p.y) << "}: left "
          << p.left.set.str() << " [" << p.left.evidence << "], right "
          << p.right.set.str() << " [" << p.right.evidence << "]\n";
    }
    if (!rep.splits.empty()) {
      const auto& s = rep.splits.front();
      std::string word;
      for (auto x : s.word) word += std::to_string(int(x));
      out << rep.splits.size() << " split obligations witnessed; first ("
          << s.i << "," << s.j << "," << s.k << ") via word " << word << " -> "
          << s.values_at_i.str() << " / " << s.values_at_j.str() << "\n";
    }
  }
  return rep.certified ? kExitOk : kExitPropertyFailed;
}

int cmd_census(unsigned n, unsigned k_max, const std::string& format,
               std::ostream& out) {
  auto codes = enumerate_tables(n);
  json rows = json::array();
  std::ostringstream csv;
  csv << "code,semigroup,threshold";
  for (unsigned k = 3; k <= k_max; ++k) csv << ",classes_k" << k;
  csv << "\n";
  for (const auto& code : codes) {
    GroupoidTable t = decode(code);
    AgreementDP dp(t);
    bool semi = is_semigroup(t);
    std::optional<unsigned> threshold;
    std::vector<std::uint64_t> counts;
    for (unsigned k = 3; k <= k_max; ++k) {
      counts.push_back(dp.class_count(k));
      if (!threshold && BigInt(counts.back()) != product_count(k)) {
        threshold = k;
      }
    }
    csv << code.j.str() << "," << (semi ? 1 : 0) << ","
        << (threshold ? std::to_string(*threshold) : "none");
    for (auto c : counts) csv << "," << c;
    csv << "\n";
    if (format == "json") {
      json row{{"code", code.j.str()},
               {"semigroup", semi},
               {"class_counts", counts}};
      row["threshold"] = threshold ? json(*threshold) : json(nullptr);
      rows.push_back(row);
    }
  }
  if (format == "json") {
    out << json{{"schema", "dissoc.census/1"},
                {"n", n},
                {"k_max", k_max},
                {"tables", rows}}
            .dump(2)
        << "\n";
  } else {
    out << csv.str();
  }
  return kExitOk;
}

int cmd_mnk(unsigned n, unsigned k, std::uint64_t samples, std::uint64_t seed,
            const std::string& format, std::ostream& out) {
  MinimalAssociativity res =
      samples > 0 ? minimal_k_associativity_sampled(n, k, samples, seed)
                  : minimal_k_associativity(n, k);
  if (format == "json") {
    out << json{{"schema", "dissoc.mnk/1"},
                {"n", n},
                {"k", k},
                {"m", res.m},
                {"witnesses", res.witnesses},
                {"sampled", res.sampled},
                {"tables_examined", res.tables_examined}}
            .dump(2)
        << "\n";
  } else {
    out << "least achievable max-agreement for n=" << n << ", k=" << k << ": "
        << res.m << (res.sampled ? " (sampled upper bound)" : "") << "\n";
    out << "witness codes:";
    for (auto w : res.witnesses) out << " " << w;
    out << "\n";
  }
  return kExitOk;
}

int cmd_represent(const std::string& target, unsigned n, unsigned k_hint,
                  const std::string& mode_name, std::ostream& out) {
  OpVector phi(1, 1);
  if (n == 2) {
    // Hex truth table, least significant bit = all-zero assignment.
    std::uint64_t bits = target.size() * 4;
    unsigned k = k_hint;
    if (k == 0) {
      while ((1ull << k) < bits) ++k;
      if ((1ull << k) != bits) {
        throw ParseError("hex target is not 2^k bits; pass --k");
      }
    } else if ((1ull << k) > bits) {
      throw ParseError("hex target shorter than 2^k bits");
    }
    phi = OpVector(2, k);
    for (std::uint64_t row = 0; row < phi.size(); ++row) {
      std::size_t nibble = row / 4;
      if (nibble >= target.size()) break;
      char c = target[target.size() - 1 - nibble];
      unsigned val = (c >= '0' && c <= '9')   ? unsigned(c - '0')
                     : (c >= 'a' && c <= 'f') ? unsigned(c - 'a' + 10)
                     : (c >= 'A' && c <= 'F') ? unsigned(c - 'A' + 10)
                                              : throw ParseError(
                                                    "bad hex digit in target");
      phi.set(row, (val >> (row & 3)) & 1u);
    }
  } else {
    unsigned k = k_hint;
    if (k == 0) {
      std::uint64_t len = 1;
      while (len < target.size()) {
        len *= n;
        ++k;
      }
      if (len != target.size()) {
        throw ParseError("target length is not a power of the universe size");
      }
    }
    phi = OpVector(n, k);
    for (std::uint64_t i = 0; i < phi.size(); ++i) {
      char c = target.at(i);
      if (c < '0' || c >= char('0' + int(n))) {
        throw ParseError("bad digit in target");
      }
      phi.set(i, static_cast<std::uint8_t>(c - '0'));
    }
  }

  SearchMode mode = mode_name == "propagate" ? SearchMode::Propagate
                                             : SearchMode::Exhaustive;
  auto res = search_representation(phi, mode);
  if (res.witness) {
    out << "representable: product " << res.witness->product.render() << "\n";
    for (std::size_t i = 0; i < res.witness->ops.size(); ++i) {
      out << "op" << i << " = " << table_label(res.witness->ops[i]) << "\n";
    }
    return kExitOk;
  }
  out << "unrepresentable (" << res.candidates_tried << " candidates";
  if (res.walls > 0) {
    out << ", " << res.walls << " contradictions; first: " << res.first_wall;
  }
  out << ")\n";
  return kExitPropertyFailed;
}

int cmd_identity(const std::string& text, const GroupoidTable& t,
                 std::ostream& out) {
  Identity id = parse_identity(text);
  auto check = identity_holds(id, t);
  if (check.holds) {
    out << "holds in " << table_label(t) << "\n";
    return kExitOk;
  }
  out << "fails in " << table_label(t) << " at (";
  for (std::size_t i = 0; i < check.countermodel.size(); ++i) {
    if (i) out << ",";
    out << check.countermodel[i].first << "=" << int(check.countermodel[i].second);
  }
  out << "): lhs=" << int(check.lhs_value) << " rhs=" << int(check.rhs_value)
      << "\n";
  return kExitPropertyFailed;
}

int cmd_nand_check(unsigned k_max, std::ostream& out) {
  bool ok = true;
  NormalFormula worked;
  worked.k = 3;
  worked.clauses = {Cube{0b011, 0b011}, Cube{0b011, 0b001}, Cube{0b100, 0b100},
                    Cube{0b111, 0b110}};
  worked.canonicalize();
  auto reduced = reduce_to_complete_sum(worked);
  bool worked_ok = reduced.str() == "x0 | x2" &&
                   reduced == complete_sum(worked.truth_table());
  ok = ok && worked_ok;
  out << (worked_ok ? "PASS" : "FAIL")
      << "  worked example reduces to x0 | x2\n";

  for (unsigned k = 2; k <= k_max; ++k) {
    bool all = true;
    for (const auto& u : enumerate_products(k)) {
      all = all && nand_depends_on_all(u) && nand_sum_decomposition(u) &&
            nand_two_linked_classes(u);
    }
    ok = ok && all;
    out << (all ? "PASS" : "FAIL") << "  structure claims at arity " << k
        << "\n";
  }
  for (unsigned k = 2; k <= std::min(k_max + 3, 10u); ++k) {
    bool inj = nand_injectivity(k).injective;
    ok = ok && inj;
    out << (inj ? "PASS" : "FAIL") << "  injectivity at arity " << k << "\n";
  }
  return ok ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of generalized associativity over finite binary "
      "operation tables"};
  app.require_subcommand(1);

  // enumerate
  auto* sc_enum = app.add_subcommand("enumerate", "List all formal k-products");
  unsigned enum_k = 1;
  std::string enum_format = "text";
  sc_enum->add_option("k", enum_k, "Product arity")->required();
  sc_enum->add_option("--format", enum_format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // analyze
  auto* sc_an = app.add_subcommand(
      "analyze", "Agreement classes, sizings, and thresholds for a table");
  std::string an_table;
  unsigned an_kmax = 0, an_degrees = 5;
  std::string an_format = "text";
  bool an_no_cache = false;
  sc_an->add_option("table", an_table, "Table: name, CI3_a, n:j, or file")
      ->required();
  sc_an->add_option("--kmax", an_kmax, "Largest arity (default 13 for n=2, 8 otherwise)");
  sc_an->add_option("--degrees-kmax", an_degrees,
                    "Largest arity for pairwise agreement degrees");
  sc_an->add_option("--format", an_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sc_an->add_flag("--no-cache", an_no_cache, "Bypass the on-disk cache");

  // certify
  auto* sc_cert = app.add_subcommand(
      "certify", "Certify the separation conditions up to arity K");
  std::string cert_table, cert_T, cert_templates, cert_format = "text";
  unsigned cert_K = 10;
  std::uint64_t cert_budget = kDefaultSearchBudget;
  sc_cert->add_option("table", cert_table, "Table reference")->required();
  sc_cert->add_option("--T", cert_T, "Comma-separated target elements");
  sc_cert->add_option("--K", cert_K, "Certification depth");
  sc_cert->add_option("--budget", cert_budget, "Search attempt budget");
  sc_cert->add_option("--templates", cert_templates,
                      "Extra split-template file (one pattern per line)");
  sc_cert->add_option("--format", cert_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // census
  auto* sc_census =
      app.add_subcommand("census", "Per-table metrics over all n-element tables");
  unsigned census_n = 2, census_kmax = 0;
  std::string census_format = "csv";
  bool census_no_cache = false;
  sc_census->add_option("n", census_n, "Universe size")->required();
  sc_census->add_option("--kmax", census_kmax,
                        "Largest arity (default 13 for n=2, 8 otherwise)");
  sc_census->add_option("--format", census_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sc_census->add_flag("--no-cache", census_no_cache, "Bypass the on-disk cache");

  // mnk
  auto* sc_mnk = app.add_subcommand(
      "mnk", "Least achievable pairwise agreement over all n-element tables");
  unsigned mnk_n = 2, mnk_k = 3;
  std::uint64_t mnk_samples = 0, mnk_seed = 1;
  std::string mnk_format = "text";
  bool mnk_no_cache = false;
  sc_mnk->add_option("n", mnk_n, "Universe size")->required();
  sc_mnk->add_option("k", mnk_k, "Product arity")->required();
  sc_mnk->add_option("--sample", mnk_samples,
                     "Sample this many random tables instead of a census");
  sc_mnk->add_option("--seed", mnk_seed, "Sampling seed");
  sc_mnk->add_option("--format", mnk_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sc_mnk->add_flag("--no-cache", mnk_no_cache, "Bypass the on-disk cache");

  // represent
  auto* sc_rep = app.add_subcommand(
      "represent", "Search for a product-and-tables representation");
  std::string rep_target, rep_mode = "exhaustive";
  unsigned rep_n = 2, rep_k = 0;
  sc_rep->add_option("target", rep_target,
                     "Hex truth table (n=2) or row-major digits")
      ->required();
  sc_rep->add_option("--n", rep_n, "Universe size");
  sc_rep->add_option("--k", rep_k, "Arity (inferred when omitted)");
  sc_rep->add_option("--mode", rep_mode, "exhaustive or propagate")
      ->check(CLI::IsMember({"exhaustive", "propagate"}));

  // identity
  auto* sc_id = app.add_subcommand("identity", "Check an identity on a table");
  std::string id_text, id_table;
  sc_id->add_option("identity", id_text, "e.g. \"(x*(y*z)) = ((x*y)*z)\"")
      ->required();
  sc_id->add_option("table", id_table, "Table reference")->required();

  // nand-check
  auto* sc_nand = app.add_subcommand(
      "nand-check", "Structure checks for the NAND interpretation");
  unsigned nand_kmax = 7;
  sc_nand->add_option("--kmax", nand_kmax, "Largest arity for the claims");

  // paper-check
  auto* sc_paper = app.add_subcommand(
      "paper-check", "Run the built-in reference verification suite");
  std::vector<int> paper_only;
  sc_paper->add_option("criteria", paper_only,
                       "Criterion ids to run (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sc_enum) {
      return cmd_enumerate(enum_k, enum_format, std::cout);
    }
    if (*sc_an) {
      auto t = parse_table_ref(an_table);
      unsigned kmax = an_kmax ? an_kmax : (t.n() == 2 ? 13 : 8);
      unsigned deg = std::min(an_degrees, kmax);
      // The label participates in the output, so it must key the cache too.
      std::string job = "analyze|" + std::to_string(t.n()) + ":" +
                        encode(t).j.str() + "|" + table_label(t) + "|" +
                        std::to_string(kmax) + "|" + std::to_string(deg) +
                        "|" + an_format;
      if (!an_no_cache) {
        if (auto hit = cache_load(job)) {
          std::cout << *hit;
          return kExitOk;
        }
      }
      std::ostringstream buf;
      int rc = cmd_analyze(t, kmax, deg, an_format, buf);
      std::cout << buf.str();
      if (!an_no_cache && rc == kExitOk) cache_store(job, buf.str());
      return rc;
    }
    if (*sc_cert) {
      auto t = parse_table_ref(cert_table);
      ElemSet T = cert_T.empty() ? ElemSet::universe(t.n())
                                 : parse_elem_list(cert_T, t.n());
      return cmd_certify(t, T, cert_K, cert_budget, cert_templates,
                         cert_format, std::cout);
    }
    if (*sc_census) {
      unsigned kmax = census_kmax ? census_kmax : (census_n == 2 ? 13 : 8);
      std::string job = "census|" + std::to_string(census_n) + "|" +
                        std::to_string(kmax) + "|" + census_format;
      if (!census_no_cache) {
        if (auto hit = cache_load(job)) {
          std::cout << *hit;
          return kExitOk;
        }
      }
      std::ostringstream buf;
      int rc = cmd_census(census_n, kmax, census_format, buf);
      std::cout << buf.str();
      if (!census_no_cache && rc == kExitOk) cache_store(job, buf.str());
      return rc;
    }
    if (*sc_mnk) {
      std::string job = "mnk|" + std::to_string(mnk_n) + "|" +
                        std::to_string(mnk_k) + "|" +
                        std::to_string(mnk_samples) + "|" +
                        std::to_string(mnk_seed) + "|" + mnk_format;
      if (!mnk_no_cache) {
        if (auto hit = cache_load(job)) {
          std::cout << *hit;
          return kExitOk;
        }
      }
      std::ostringstream buf;
      int rc = cmd_mnk(mnk_n, mnk_k, mnk_samples, mnk_seed, mnk_format, buf);
      std::cout << buf.str();
      if (!mnk_no_cache && rc == kExitOk) cache_store(job, buf.str());
      return rc;
    }
    if (*sc_rep) {
      return cmd_represent(rep_target, rep_n, rep_k, rep_mode, std::cout);
    }
    if (*sc_id) {
      return cmd_identity(id_text, parse_table_ref(id_table), std::cout);
    }
    if (*sc_nand) {
      return cmd_nand_check(nand_kmax, std::cout);
    }
    if (*sc_paper) {
      auto results = dissoc::checks::run_paper_checks(std::cout, paper_only);
      for (const auto& r : results) {
        if (!r.passed) return kExitPropertyFailed;
      }
      return kExitOk;
    }
  } catch (const ResourceLimit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return kExitResourceLimit;
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
