#include "charfield/charfield.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace charfield;

namespace {

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

int parse_epsilon(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw CLI::ValidationError("--epsilon", "must be +1 or -1");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::string format_for(const std::string& path, const std::string& requested) {
  if (!requested.empty()) return requested;
  return path.size() > 4 && path.substr(path.size() - 4) == ".csv" ? "csv" : "json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fields of values, conductors and Conjecture B checks for finite group characters"};
  app.set_version_flag("--version", std::string(CHARFIELD_VERSION));
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the corpus");
  std::string suite = "all", corpus_dir = CHARFIELD_CORPUS_DIR, primes, out, format, config_path;
  int max_alt_n = 0;
  std::int64_t bound = 0;
  verify->add_option("--suite", suite, "conjecture-b, divisor-bound, pgroup, alternating, gl-gu, wreath, ext1, quadratic or all")
      ->capture_default_str();
  verify->add_option("--corpus", corpus_dir, "Corpus directory")->capture_default_str();
  verify->add_option("--primes", primes, "Comma-separated primes (default 2,3,5,7,11,13)");
  verify->add_option("--max-alt-n", max_alt_n, "Largest n for the alternating scan");
  verify->add_option("--bound", bound, "Enumeration bound for wreath verification");
  verify->add_option("--config", config_path, "JSON config file with the same keys as the flags");
  verify->add_option("--out", out, "Report path (stdout if omitted)");
  verify->add_option("--format", format, "json or csv (default from --out extension)");

  // alt
  auto* alt = app.add_subcommand("alt", "Diagonal-hook conductor scan over A_n");
  int alt_max = 16;
  std::string alt_primes = "2,3,5,7,11,13";
  alt->add_option("--max-n", alt_max, "Largest n")->capture_default_str();
  alt->add_option("--primes", alt_primes, "Comma-separated primes")->capture_default_str();

  // gl
  auto* gl = app.add_subcommand("gl", "Dipper-James characters of GL_n(q) or GU_n(q)");
  int gl_n = 2;
  std::int64_t gl_q = 2;
  std::string gl_eps = "+1", gl_check = "all";
  gl->add_option("--n", gl_n, "Rank")->required();
  gl->add_option("--q", gl_q, "Field size")->required();
  gl->add_option("--epsilon", gl_eps, "+1 for GL, -1 for GU")->capture_default_str();
  gl->add_option("--check", gl_check, "all, oracle or list")->capture_default_str();

  // construct wreath
  auto* construct = app.add_subcommand("construct", "Explicit constructions");
  construct->require_subcommand(1);
  auto* wreath = construct->add_subcommand("wreath", "Shrink the field of a character by the wreath construction");
  std::string table_path, fix;
  std::size_t char_index = 0;
  std::int64_t wreath_bound = 1000000;
  wreath->add_option("--table", table_path, "Table JSON file")->required()->check(CLI::ExistingFile);
  wreath->add_option("--char", char_index, "Character index")->required();
  wreath->add_option("--fix", fix, "Galois stabilizer generators k1,k2,... defining F inside Q(chi)");
  wreath->add_option("--bound", wreath_bound, "Class-tuple enumeration bound")->capture_default_str();

  // field
  auto* field = app.add_subcommand("field", "Evaluate a cyclotomic expression such as z(8)+z(8)^7");
  std::string expr;
  field->add_option("--expr", expr, "Expression")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Regenerate or check the bundled corpus");
  std::string corpus_out, corpus_check;
  corpus->add_option("--write", corpus_out, "Write the generated corpus to this directory");
  corpus->add_option("--check", corpus_check, "Ingest and validate this corpus directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      SuiteConfig cfg;
      if (!config_path.empty()) cfg = config_from_json(read_json_file(config_path));
      if (verify->count("--corpus") || config_path.empty()) cfg.corpus_dir = corpus_dir;
      if (!primes.empty()) cfg.primes = parse_list(primes);
      if (max_alt_n > 0) cfg.max_alt_n = max_alt_n;
      if (bound > 0) cfg.enumeration_bound = bound;
      if (!out.empty()) cfg.output_path = out;
      const auto report = run_suite(cfg, suite);
      const std::string path = cfg.output_path.string();
      write_output(emit_report(report, format_for(path, format)), path);
      for (const auto& [name, s] : report.summaries)
        std::cerr << name << ": " << s.total << " records, " << s.pass << " pass, " << s.vacuous << " vacuous, " << s.fail
                  << " fail, " << s.expected_fail << " expected fail, " << s.pass_unexpected << " unexpected pass\n";
      return report.exit_code();
    }
    if (*alt) {
      SuiteReport report;
      report.records = scan_alternating(alt_max, parse_list(alt_primes));
      report.config_echo = Json{{"maxAltN", alt_max}, {"primes", parse_list(alt_primes)}};
      std::int64_t bad = 0;
      for (const auto& r : report.records) bad += !r.pass;
      report.summaries["alternating"] = {static_cast<std::int64_t>(report.records.size()),
                                         static_cast<std::int64_t>(report.records.size()) - bad, 0, bad, 0, 0};
      std::cout << emit_report(report, "json");
      return report.exit_code();
    }
    if (*gl) {
      const int eps = parse_epsilon(gl_eps);
      const auto scan = scan_gl(gl_n, gl_q, eps);
      Json j{{"n", gl_n},
             {"q", gl_q},
             {"epsilon", eps},
             {"classCount", detail::integer_to_json(scan.class_count)},
             {"classNumber", detail::integer_to_json(scan.expected_classes)},
             {"sumSquaresOK", scan.sum_squares_ok()}};
      bool ok = scan.sum_squares_ok() && scan.class_count_ok();
      if (gl_check == "all" || gl_check == "list") {
        Json recs = Json::array();
        for (const auto& r : scan.records) {
          recs.push_back(record_to_json(r));
          ok = ok && r.pass;
        }
        j["records"] = recs;
      }
      if (gl_check == "list") {
        Json chars = Json::array();
        const auto all = enumerate_gl(gl_n, gl_q, eps);
        for (std::size_t i = 0; i < all.size(); ++i)
          chars.push_back(Json{{"index", i},
                               {"parameters", all[i].to_string()},
                               {"degree", detail::integer_to_json(gl_degree(all[i]))},
                               {"field", gl_field_of_values(all[i]).to_string()}});
        j["characters"] = chars;
      }
      std::cout << j.dump(1) << "\n";
      return ok ? 0 : 1;
    }
    if (*wreath) {
      const auto t = load_table(table_path);
      const AbelianField e = character_field(t, char_index);
      const AbelianField f = fix.empty() ? e : intersect(e, AbelianField::from_stabilizer(e.modulus(), parse_list(fix)));
      const auto w = make_wreath(t, char_index, f);
      const auto rep = verify_wreath(w, wreath_bound);
      std::ostringstream norm;
      norm << rep.norm;
      Json j{{"table", t.name},
             {"charIndex", char_index},
             {"fieldOfChi", e.to_string()},
             {"targetField", f.to_string()},
             {"n", rep.n},
             {"galoisInvariants", w.factorization.orders},
             {"degree", detail::integer_to_json(rep.degree)},
             {"classTuples", rep.tuples},
             {"norm", norm.str()},
             {"fieldOfPsi", rep.field.to_string()},
             {"degreeOK", rep.degree_ok},
             {"normOK", rep.norm_ok},
             {"fieldOK", rep.field_ok}};
      std::cout << j.dump(1) << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*field) {
      const Cyclotomic z = parse_expression(expr);
      const AbelianField f = field_of_values({z});
      std::cout << "value: " << z << "\nconductor: " << f.conductor() << "\nfield: " << f.to_string() << "\n";
      return 0;
    }
    if (*corpus) {
      if (!corpus_out.empty()) {
        write_corpus(corpus_out);
        std::cout << "wrote corpus to " << corpus_out << "\n";
      }
      if (!corpus_check.empty()) {
        const auto c = ingest(corpus_check);
        std::cout << c.tables.size() << " tables, " << c.fusions.size() << " fusions, " << c.expected_failures.size()
                  << " expected failures, " << c.registry.size() << " registry entries\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
