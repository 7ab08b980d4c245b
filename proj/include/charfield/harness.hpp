// Corpus management and the verification suites.  A corpus directory holds
//   tables/<name>.json, fusions/<source>-<target>.json,
//   expected_failures.json  [{"group", "charIndex", "check"}],
//   registry.json           [{"field", "table", "charIndex"}].
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/glq.hpp"
#include "charfield/groups.hpp"
#include "charfield/symchar.hpp"
#include "charfield/table_io.hpp"
#include "charfield/wreath.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#ifndef CHARFIELD_VERSION
#define CHARFIELD_VERSION "unknown"
#endif

namespace charfield {

inline const std::vector<std::string> kSuites{"conjecture-b", "divisor-bound", "pgroup", "alternating",
                                              "gl-gu",        "wreath",        "ext1",   "quadratic"};

struct GlParams {
  int n = 2;
  std::int64_t q = 2;
  int epsilon = 1;

  auto operator<=>(const GlParams&) const = default;
};

struct SuiteConfig {
  std::filesystem::path corpus_dir = "corpus";
  std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  int max_alt_n = 16;
  std::vector<GlParams> gl_set{{2, 2, 1}, {2, 2, -1}, {2, 3, 1}, {2, 3, -1}, {2, 4, 1}, {2, 4, -1},
                               {2, 5, 1}, {2, 5, -1}, {3, 2, 1}, {3, 2, -1}, {3, 3, 1}, {3, 3, -1}};
  std::int64_t enumeration_bound = 1000000;
  std::filesystem::path output_path;

  void validate() const {
    if (primes.empty()) throw std::invalid_argument("config: primes must be nonempty");
    for (std::int64_t p : primes)
      if (!is_prime(p)) throw std::invalid_argument("config: " + std::to_string(p) + " is not prime");
    if (max_alt_n < 1) throw std::invalid_argument("config: maxAltN must be positive");
    if (enumeration_bound < 1) throw std::invalid_argument("config: enumerationBound must be positive");
  }
};

inline Json config_to_json(const SuiteConfig& c) {
  Json gl = Json::array();
  for (const auto& g : c.gl_set) gl.push_back(Json::array({g.n, g.q, g.epsilon}));
  return Json{{"corpusDir", c.corpus_dir.generic_string()},
              {"primes", c.primes},
              {"maxAltN", c.max_alt_n},
              {"glSet", gl},
              {"enumerationBound", c.enumeration_bound},
              {"outputPath", c.output_path.generic_string()}};
}

/// Keys absent from `j` keep their values from `base`.
inline SuiteConfig config_from_json(const Json& j, SuiteConfig base = {}) {
  try {
    if (j.contains("corpusDir")) base.corpus_dir = j.at("corpusDir").get<std::string>();
    if (j.contains("primes")) base.primes = j.at("primes").get<std::vector<std::int64_t>>();
    if (j.contains("maxAltN")) base.max_alt_n = j.at("maxAltN").get<int>();
    if (j.contains("enumerationBound")) base.enumeration_bound = j.at("enumerationBound").get<std::int64_t>();
    if (j.contains("outputPath")) base.output_path = j.at("outputPath").get<std::string>();
    if (j.contains("glSet")) {
      base.gl_set.clear();
      for (const auto& g : j.at("glSet")) base.gl_set.push_back({g.at(0).get<int>(), g.at(1).get<std::int64_t>(), g.at(2).get<int>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  base.validate();
  return base;
}

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Corpus {
  std::map<std::string, CharacterTable> tables;
  std::vector<FusionMap> fusions;
  std::set<std::tuple<std::string, int, std::string>> expected_failures;
  std::vector<RegistryEntry> registry;

  const CharacterTable& table(const std::string& name) const {
    const auto it = tables.find(name);
    if (it == tables.end()) throw CorpusError("corpus has no table " + name);
    return it->second;
  }
};

namespace detail {

inline std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
auto with_file_context(const std::filesystem::path& file, F&& f) {
  try {
    return f();
  } catch (const TableError& e) {
    throw CorpusError(file.string() + ": " + e.what());
  } catch (const SchemaError& e) {
    throw CorpusError(file.string() + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(file.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CorpusError(file.string() + ": " + e.what());
  }
}

}  // namespace detail

/// Loads and fully validates every table, fusion and annotation.
inline Corpus ingest(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw CorpusError("corpus directory not found: " + dir.string());
  Corpus c;
  for (const auto& file : detail::json_files(dir / "tables")) {
    auto t = detail::with_file_context(file, [&] { return load_table(file); });
    if (c.tables.count(t.name)) throw CorpusError(file.string() + ": duplicate table " + t.name);
    c.tables.emplace(t.name, std::move(t));
  }
  if (c.tables.empty()) throw CorpusError("corpus has no tables: " + (dir / "tables").string());
  for (const auto& file : detail::json_files(dir / "fusions")) {
    auto f = detail::with_file_context(file, [&] { return fusion_from_json(read_json_file(file)); });
    detail::with_file_context(file, [&] {
      validate_fusion(c.table(f.source), c.table(f.target), f);
      return 0;
    });
    c.fusions.push_back(std::move(f));
  }
  if (const auto file = dir / "expected_failures.json"; std::filesystem::exists(file))
    detail::with_file_context(file, [&] {
      for (const auto& e : read_json_file(file))
        c.expected_failures.emplace(e.at("group").get<std::string>(), e.at("charIndex").get<int>(), e.at("check").get<std::string>());
      return 0;
    });
  if (const auto file = dir / "registry.json"; std::filesystem::exists(file))
    detail::with_file_context(file, [&] {
      for (const auto& e : read_json_file(file)) {
        RegistryEntry r{field_from_json(e.at("field")), e.at("table").get<std::string>(), e.at("charIndex").get<std::size_t>()};
        const auto& t = c.table(r.table);
        if (r.char_index >= t.num_characters() || character_field(t, r.char_index) != r.field)
          throw CorpusError("registry entry " + r.table + "[" + std::to_string(r.char_index) + "] does not have field " + r.field.to_string());
        c.registry.push_back(std::move(r));
      }
      return 0;
    });
  return c;
}

struct SuiteSummary {
  std::int64_t total = 0;
  std::int64_t pass = 0;
  std::int64_t vacuous = 0;
  std::int64_t fail = 0;
  std::int64_t expected_fail = 0;
  std::int64_t pass_unexpected = 0;

  std::int64_t unexpected() const { return fail + pass_unexpected; }
};

struct SuiteReport {
  std::vector<VerificationRecord> records;
  std::map<std::string, SuiteSummary> summaries;
  std::string tool_version = CHARFIELD_VERSION;
  Json config_echo;

  std::int64_t unexpected_failures() const {
    std::int64_t n = 0;
    for (const auto& [name, s] : summaries) n += s.unexpected();
    return n;
  }

  int exit_code() const { return unexpected_failures() == 0 ? 0 : 1; }
};

namespace detail {

inline void annotate(const Corpus& c, std::vector<VerificationRecord>& records) {
  for (auto& r : records) r.expected_failure = c.expected_failures.count({r.group, r.char_index, r.check}) > 0;
}

inline std::vector<VerificationRecord> suite_conjecture_b(const Corpus& c, const SuiteConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (const auto& [name, t] : c.tables)
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const AbelianField f = character_field(t, i);
      for (std::int64_t p : cfg.primes) out.push_back(check_conjecture_b(t.name, static_cast<int>(i), t.degree(i), f, p));
    }
  return out;
}

inline std::vector<VerificationRecord> suite_divisor_bound(const Corpus& c) {
  std::vector<VerificationRecord> out;
  for (const auto& [name, t] : c.tables)
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const AbelianField f = character_field(t, i);
      out.push_back(check_divisor_bound(t.name, static_cast<int>(i), t.degree(i), f, t.order));
      out.push_back(check_cram_not_degree(t.name, static_cast<int>(i), t.degree(i), f));
    }
  return out;
}

inline std::vector<VerificationRecord> suite_pgroup(const Corpus& c) {
  std::vector<VerificationRecord> out;
  for (const auto& [name, t] : c.tables) {
    const auto [p, k] = prime_power(t.order);
    if (p == 0) continue;
    for (auto& r : check_pgroup_lemma(t, p)) out.push_back(std::move(r));
  }
  return out;
}

/// Diagonal-hook scan, then formula fields against table fields for every
/// generated A_n with n <= min(8, maxAltN).
inline std::vector<VerificationRecord> suite_alternating(const SuiteConfig& cfg) {
  auto out = scan_alternating(cfg.max_alt_n, cfg.primes);
  for (int n = 3; n <= std::min(8, cfg.max_alt_n); ++n) {
    const auto t = alternating_table(n);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      std::string label = t.character_labels[i];
      if (label.back() != '+' && label.back() != '-') continue;
      label.pop_back();
      Partition lambda;
      for (std::size_t pos = 1; pos < label.size();) {
        const std::size_t end = label.find_first_of(",)", pos);
        lambda.push_back(std::stoi(label.substr(pos, end - pos)));
        pos = end + 1;
      }
      const AbelianField table_field = character_field(t, i);
      const AbelianField formula = alt_field_of_values(lambda);
      VerificationRecord r;
      r.group = t.name;
      r.char_index = static_cast<int>(i);
      r.conductor = table_field.conductor();
      r.degree = t.degree(i);
      r.check = "alternating-field";
      r.pass = table_field == formula;
      r.note = t.character_labels[i] + " table=" + table_field.to_string() + " formula=" + formula.to_string();
      out.push_back(std::move(r));
    }
  }
  return out;
}

/// One oracle record per group (charIndex -1, index = class count), then
/// Conjecture B for every prime dividing c(chi).
inline std::vector<VerificationRecord> suite_gl(const SuiteConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (const auto& g : cfg.gl_set) {
    auto scan = scan_gl(g.n, g.q, g.epsilon);
    VerificationRecord r;
    r.group = gl_group_name(g.n, g.q, g.epsilon);
    r.char_index = -1;
    r.index = scan.class_count.get_si();
    r.degree = scan.order;
    r.check = "gl-oracle";
    r.pass = scan.sum_squares_ok() && scan.class_count_ok();
    r.note = "classes=" + scan.class_count.get_str() + " classNumber=" + scan.expected_classes.get_str() +
             " sumSquares=" + scan.sum_squares.get_str() + " order=" + scan.order.get_str();
    out.push_back(std::move(r));
    for (auto& rec : scan.records) out.push_back(std::move(rec));
  }
  return out;
}

inline std::size_t row_with_field(const CharacterTable& t, const AbelianField& f) {
  for (std::size_t i = 0; i < t.num_characters(); ++i)
    if (character_field(t, i) == f) return i;
  throw CorpusError("table " + t.name + " has no character with field " + f.to_string());
}

inline VerificationRecord wreath_record(const CharacterTable& t, std::size_t i, const AbelianField& f, std::int64_t bound) {
  const auto w = make_wreath(t, i, f);
  VerificationRecord r;
  r.group = t.name;
  r.char_index = static_cast<int>(i);
  r.conductor = f.conductor();
  r.index = w.n();
  r.degree = w.degree;
  r.check = "wreath";
  try {
    const auto rep = verify_wreath(w, bound);
    r.pass = rep.ok();
    std::ostringstream note;
    note << "F=" << f.to_string() << " n=" << rep.n << " degreeOK=" << rep.degree_ok << " norm=" << rep.norm
         << " field=" << rep.field.to_string();
    r.note = note.str();
  } catch (const EnumerationLimit& e) {
    r.pass = false;
    r.note = e.what();
  }
  return r;
}

inline std::vector<VerificationRecord> suite_wreath(const Corpus& c, const SuiteConfig& cfg) {
  std::vector<VerificationRecord> out;
  const auto& c5 = c.table("C5");
  const auto& c7 = c.table("C7");
  const auto& q16 = c.table("Dic16");
  out.push_back(wreath_record(c5, row_with_field(c5, AbelianField::cyclotomic(5)), quadratic_field(5), cfg.enumeration_bound));
  out.push_back(wreath_record(c7, row_with_field(c7, AbelianField::cyclotomic(7)), quadratic_field(-7), cfg.enumeration_bound));
  out.push_back(wreath_record(q16, row_with_field(q16, quadratic_field(2)), AbelianField::rationals(), cfg.enumeration_bound));

  const auto lookup = [&c](const std::string& name) -> const CharacterTable& { return c.table(name); };
  for (const auto& [f, p, b] : std::vector<std::tuple<AbelianField, std::int64_t, int>>{
           {quadratic_field(5), 2, 1}, {quadratic_field(-7), 3, 1}, {quadratic_field(-3), 3, 2}, {AbelianField::rationals(), 2, 3}}) {
    VerificationRecord r;
    r.group = "realize " + f.to_string();
    r.prime = p;
    r.a = b;
    r.conductor = f.conductor();
    r.check = "realize";
    try {
      const auto real = realize_prescribed(f, p, b, c.registry, lookup, cfg.enumeration_bound);
      r.degree = real.degree;
      r.index = real.wreath.n;
      r.pass = real.materialized ? real.verified : real.nu == b;
      r.note = real.description + (real.materialized ? "" : " (not materialized)");
    } catch (const std::invalid_argument& e) {
      r.pass = false;
      r.note = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<VerificationRecord> suite_ext1(const Corpus& c, const SuiteConfig& cfg) {
  std::vector<VerificationRecord> out;
  for (const auto& f : c.fusions) {
    const auto& n = c.table(f.source);
    const auto& g = c.table(f.target);
    for (std::size_t i = 0; i < g.num_characters(); ++i)
      for (std::int64_t p : cfg.primes)
        if ((g.order / n.order) % p != 0) out.push_back(check_ext1(g, n, f, i, p));
  }
  return out;
}

/// Q(chi) = Q(sqrt d) with d even and |d| != 2 forces 4 | chi(1).
inline std::vector<VerificationRecord> suite_quadratic(const Corpus& c) {
  std::vector<VerificationRecord> out;
  for (const auto& [name, t] : c.tables)
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
      const AbelianField f = character_field(t, i);
      const auto d = quadratic_radicand(f);
      if (!d || *d % 2 != 0 || *d == 2 || *d == -2) continue;
      VerificationRecord r;
      r.group = t.name;
      r.char_index = static_cast<int>(i);
      r.prime = 2;
      r.a = nu_p(f.conductor(), 2);
      r.conductor = f.conductor();
      r.index = 4;
      r.degree = t.degree(i);
      r.check = "quadratic";
      r.pass = divides(Integer(4), r.degree);
      r.note = "d=" + std::to_string(*d);
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace detail

inline void sort_records(std::vector<VerificationRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return std::tie(a.group, a.char_index, a.prime) < std::tie(b.group, b.char_index, b.prime);
  });
}

/// Runs one named suite, or every suite for "all".  The corpus is only read
/// by suites that need it.
inline SuiteReport run_suite(const SuiteConfig& cfg, const std::string& suite, const Corpus* preloaded = nullptr) {
  cfg.validate();
  std::vector<std::string> names;
  if (suite == "all")
    names = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end())
    names = {suite};
  else
    throw std::invalid_argument("unknown suite: " + suite);

  std::optional<Corpus> loaded;
  const auto corpus = [&]() -> const Corpus& {
    if (preloaded) return *preloaded;
    if (!loaded) loaded = ingest(cfg.corpus_dir);
    return *loaded;
  };

  SuiteReport report;
  report.config_echo = config_to_json(cfg);
  for (const auto& name : names) {
    std::vector<VerificationRecord> recs;
    if (name == "conjecture-b") recs = detail::suite_conjecture_b(corpus(), cfg);
    else if (name == "divisor-bound") recs = detail::suite_divisor_bound(corpus());
    else if (name == "pgroup") recs = detail::suite_pgroup(corpus());
    else if (name == "alternating") recs = detail::suite_alternating(cfg);
    else if (name == "gl-gu") recs = detail::suite_gl(cfg);
    else if (name == "wreath") recs = detail::suite_wreath(corpus(), cfg);
    else if (name == "ext1") recs = detail::suite_ext1(corpus(), cfg);
    else if (name == "quadratic") recs = detail::suite_quadratic(corpus());
    if (name != "alternating" && name != "gl-gu") detail::annotate(corpus(), recs);
    auto& s = report.summaries[name];
    for (const auto& r : recs) {
      ++s.total;
      const std::string v = r.verdict();
      if (v == "pass") ++s.pass;
      else if (v == "pass-vacuous") ++s.vacuous;
      else if (v == "fail") ++s.fail;
      else if (v == "fail-expected") ++s.expected_fail;
      else ++s.pass_unexpected;
    }
    report.records.insert(report.records.end(), recs.begin(), recs.end());
  }
  sort_records(report.records);
  return report;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// "json" or "csv"; records are emitted in their stable sorted order.
inline std::string emit_report(const SuiteReport& report, const std::string& format) {
  std::vector<VerificationRecord> records = report.records;
  sort_records(records);
  if (format == "json") {
    Json summaries = Json::object();
    for (const auto& [name, s] : report.summaries)
      summaries[name] = Json{{"total", s.total},         {"pass", s.pass},
                             {"passVacuous", s.vacuous}, {"fail", s.fail},
                             {"failExpected", s.expected_fail}, {"passUnexpected", s.pass_unexpected}};
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(record_to_json(r));
    Json j{{"toolVersion", report.tool_version},
           {"config", report.config_echo},
           {"summaries", summaries},
           {"unexpectedFailures", report.unexpected_failures()},
           {"records", recs}};
    return j.dump(1) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "group,charIndex,prime,a,conductor,index,degree,check,verdict\n";
    for (const auto& r : records)
      os << detail::csv_field(r.group) << ',' << r.char_index << ',' << r.prime << ',' << r.a << ',' << r.conductor << ','
         << r.index << ',' << r.degree.get_str() << ',' << detail::csv_field(r.check) << ',' << r.verdict() << '\n';
    return os.str();
  }
  throw std::invalid_argument("emit_report: format must be json or csv, got " + format);
}

// ---- corpus generation ----

namespace detail {

/// A class bijection pi with rows of `a` read through pi equal, as a
/// multiset, to the rows of `b` (brute force; small tables only).
inline std::vector<std::size_t> match_classes(const CharacterTable& a, const CharacterTable& b) {
  if (a.num_classes() != b.num_classes()) throw std::invalid_argument("match_classes: class counts differ");
  std::vector<std::size_t> perm(a.num_classes());
  std::iota(perm.begin(), perm.end(), 0);
  const std::multiset<std::vector<Cyclotomic>> rows_b(b.irreducibles.begin(), b.irreducibles.end());
  do {
    bool ok = true;
    for (std::size_t c = 0; c < perm.size() && ok; ++c)
      ok = a.classes[perm[c]].size == b.classes[c].size && a.classes[perm[c]].order == b.classes[c].order;
    if (!ok) continue;
    std::multiset<std::vector<Cyclotomic>> rows_a;
    for (const auto& r : a.irreducibles) {
      std::vector<Cyclotomic> permuted;
      for (std::size_t c = 0; c < perm.size(); ++c) permuted.push_back(r[perm[c]]);
      rows_a.insert(std::move(permuted));
    }
    if (rows_a == rows_b) return perm;  // class c of b is class perm[c] of a
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::invalid_argument("match_classes: " + a.name + " and " + b.name + " are not isomorphic tables");
}

}  // namespace detail

/// Every bundled table.  A4, A5 and SL(2,3) are the classical hand-entered tables.
inline std::vector<CharacterTable> corpus_tables() {
  std::vector<CharacterTable> out;
  for (int m = 1; m <= 24; ++m) out.push_back(cyclic_table(m));
  for (int m = 4; m <= 32; m += 2) out.push_back(dihedral_table(m));
  for (int m = 8; m <= 32; m += 4) out.push_back(dicyclic_table(m));
  for (int n = 1; n <= 8; ++n) out.push_back(symmetric_table(n));
  for (int n = 3; n <= 8; ++n) out.push_back(n == 4 ? a4_table() : n == 5 ? a5_table() : alternating_table(n));
  out.push_back(sl23_table());
  out.push_back(direct_product(symmetric_table(3), symmetric_table(3)));
  out.push_back(direct_product(cyclic_table(5), symmetric_table(3)));
  out.push_back(direct_product(cyclic_table(4), cyclic_table(4)));
  out.push_back(direct_product(dihedral_table(8), cyclic_table(2)));
  out.push_back(direct_product(dicyclic_table(8), cyclic_table(3)));
  return out;
}

/// A_n -> S_n for 3 <= n <= 8, routed through the generated A_n table for
/// the hand-entered A4 and A5.
inline std::vector<FusionMap> corpus_fusions() {
  std::vector<FusionMap> out;
  for (int n = 3; n <= 8; ++n) {
    FusionMap f = alternating_fusion(n);
    if (n == 4 || n == 5) {
      const auto generated = alternating_table(n);
      const auto classical = n == 4 ? a4_table() : a5_table();
      const auto perm = detail::match_classes(generated, classical);
      std::vector<std::size_t> map(perm.size());
      for (std::size_t c = 0; c < perm.size(); ++c) map[c] = f.map[perm[c]];
      f.map = std::move(map);
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// Every character failing [Q_c : Q(chi)] | chi(1), the statement known to be false in general.
inline Json corpus_expected_failures(const std::vector<CharacterTable>& tables) {
  Json out = Json::array();
  for (const auto& t : tables)
    for (std::size_t i = 0; i < t.num_characters(); ++i)
      if (!check_cram_not_degree(t, i).pass) out.push_back(Json{{"group", t.name}, {"charIndex", i}, {"check", "cram-degree"}});
  return out;
}

/// First character (tables in name order) realising each field of values.
inline Json corpus_registry(const std::vector<CharacterTable>& tables) {
  std::vector<const CharacterTable*> sorted;
  for (const auto& t : tables) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->name < b->name; });
  std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> seen;
  Json out = Json::array();
  for (const auto* t : sorted)
    for (std::size_t i = 0; i < t->num_characters(); ++i) {
      const AbelianField f = character_field(*t, i);
      const bool rational_prime_degree = f.is_rationals() && t->degree(i).fits_slong_p() && is_prime(t->degree(i).get_si());
      auto key = std::make_pair(f.modulus(), f.stabilizer());
      if (rational_prime_degree) key.second.push_back(-t->degree(i).get_si());
      if (!seen.insert(key).second) continue;
      out.push_back(Json{{"field", field_to_json(f)}, {"table", t->name}, {"charIndex", i}});
    }
  return out;
}

namespace detail {

inline std::string json_lines(const Json& array) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < array.size(); ++i) s += "  " + array[i].dump() + (i + 1 < array.size() ? ",\n" : "\n");
  return s + "]\n";
}

}  // namespace detail

/// Writes the bundled corpus to `dir` (created if needed).
inline void write_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const auto tables = corpus_tables();
  fs::create_directories(dir / "tables");
  fs::create_directories(dir / "fusions");
  for (const auto& t : tables) {
    validate_table(t);
    save_table(t, dir / "tables" / (t.name + ".json"));
  }
  for (const auto& f : corpus_fusions()) write_text_file(dir / "fusions" / (f.source + "-" + f.target + ".json"), fusion_to_json(f).dump() + "\n");
  write_text_file(dir / "expected_failures.json", detail::json_lines(corpus_expected_failures(tables)));
  write_text_file(dir / "registry.json", detail::json_lines(corpus_registry(tables)));
}

}  // namespace charfield
