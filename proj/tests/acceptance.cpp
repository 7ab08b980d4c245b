// Acceptance criteria 1-10.  One line per criterion; exit status 0 iff all pass.
#include "charfield/charfield.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace charfield;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const Corpus& corpus() {
  static const Corpus c = ingest(CHARFIELD_CORPUS_DIR);
  return c;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

Outcome criterion1() {
  const AbelianField f = quadratic_field(6);
  const std::int64_t c = f.conductor();
  const int nu = nu_p(c, 2);
  const std::int64_t deg = degree_over(adjoin(f, 8), f);
  std::ostringstream d;
  d << "c=" << c << " nu_2=" << nu << " [Q_8(F):F]=" << deg;
  return {c == 24 && nu == 3 && deg == 4, d.str()};
}

// The field of the explicit Gauss-sum value sqrt(d) against the closed rule.
Outcome criterion2() {
  int checked = 0, bad = 0;
  for (std::int64_t d = -50; d <= 50; ++d) {
    if (std::abs(d) < 2 || !is_squarefree(std::abs(d))) continue;
    const std::int64_t rule = mod64(d, 4) == 1 ? std::abs(d) : 4 * std::abs(d);
    const Cyclotomic root = Cyclotomic::sqrt_of_integer(d);
    const AbelianField descent = field_of_values({root});
    ++checked;
    if (!(root * root == Cyclotomic(d)) || descent.conductor() != rule || descent != quadratic_field(d) || descent.degree() != 2) ++bad;
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " radicands, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion3() {
  SuiteConfig cfg;
  cfg.primes = primes_up_to(13);
  const auto r = run_suite(cfg, "conjecture-b", &corpus());
  const auto& s = r.summaries.at("conjecture-b");
  return {s.fail == 0 && s.pass_unexpected == 0 && s.total > 0,
          std::to_string(corpus().tables.size()) + " tables, " + std::to_string(s.total) + " records, " + std::to_string(s.fail) +
              " violations"};
}

Outcome criterion4() {
  const auto r = run_suite(SuiteConfig{}, "divisor-bound", &corpus());
  std::int64_t bound_records = 0, bound_fail = 0;
  bool a5 = false;
  for (const auto& rec : r.records) {
    if (rec.check == "divisor-bound") {
      ++bound_records;
      bound_fail += !rec.pass;
    }
    if (rec.check == "cram-degree" && rec.group == "A5" && rec.degree == 3)
      a5 = rec.index == 2 && rec.conductor == 5 && !rec.pass && rec.verdict() == "fail-expected";
  }
  return {bound_fail == 0 && bound_records > 0 && a5 && r.exit_code() == 0,
          std::to_string(bound_records) + " divisor-bound records, " + std::to_string(bound_fail) +
              " violations; A5 degree-3 [Q_5:Q(sqrt5)]=2 does not divide 3: " + (a5 ? "yes" : "no")};
}

Outcome criterion5() {
  const auto scan = scan_alternating(16, primes_up_to(16));
  std::int64_t bad = 0;
  for (const auto& r : scan) bad += !r.pass;
  std::int64_t fields = 0, mismatch = 0;
  for (int n = 3; n <= 8; ++n) {
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
      ++fields;
      mismatch += character_field(t, i) != alt_field_of_values(lambda);
    }
  }
  return {bad == 0 && mismatch == 0 && !scan.empty(),
          std::to_string(scan.size()) + " self-conjugate partitions, " + std::to_string(bad) + " with nu_p(c)>1; " +
              std::to_string(fields) + " table fields, " + std::to_string(mismatch) + " mismatches"};
}

const std::vector<GlParams> kGlSet{{2, 2, 1}, {2, 2, -1}, {2, 3, 1}, {2, 3, -1}, {2, 4, 1}, {2, 4, -1},
                                   {2, 5, 1}, {2, 5, -1}, {3, 2, 1}, {3, 2, -1}, {3, 3, 1}, {3, 3, -1}};

Outcome criterion6() {
  int bad = 0;
  std::ostringstream d;
  for (const auto& g : kGlSet) {
    const auto chars = enumerate_gl(g.n, g.q, g.epsilon);
    Integer sum = 0;
    for (const auto& chi : chars) sum += gl_degree(chi) * gl_degree(chi);
    const bool ok = sum == gl_order(g.n, g.q, g.epsilon) && Integer(static_cast<long>(chars.size())) == class_number(g.n, g.q, g.epsilon);
    bad += !ok;
    if (!ok) d << gl_group_name(g.n, g.q, g.epsilon) << " fails; ";
  }
  d << kGlSet.size() << " groups, " << bad << " failures";
  return {bad == 0, d.str()};
}

Outcome criterion7() {
  std::int64_t records = 0, bad = 0;
  for (const auto& g : kGlSet) {
    const auto scan = scan_gl(g.n, g.q, g.epsilon);
    for (const auto& r : scan.records) {
      ++records;
      bad += !r.pass;
    }
  }
  bool cusp = false;
  const auto chars = enumerate_gl(2, 3, 1);
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (gl_field_of_values(chars[i]) == quadratic_field(-2)) {
      const auto r = check_conjecture_b(chars[i], static_cast<int>(i), 2);
      cusp = r.a == 3 && r.index == 2 && r.degree == 2 && r.pass;
    }
  return {bad == 0 && cusp, std::to_string(records) + " records, " + std::to_string(bad) +
                                " violations; GL2(3) Q(sqrt(-2)) cuspidal (a,index,degree)=(3,2,2): " + (cusp ? "yes" : "no")};
}

Outcome criterion8() {
  int cases = 0, bad = 0;
  for (int k = 1; k <= 2; ++k)
    for (int b = 0; b <= 2; ++b)
      for (std::int64_t q : {3, 5})
        for (int eps : {1, -1}) {
          if (detail::torus_order_exact(q, k, eps) % 2 != 0) continue;
          ++cases;
          bad += !n1_quantity(k, b, q, 2, eps).ok();
        }
  return {bad == 0 && cases > 0, std::to_string(cases) + " (k,b,q,epsilon) cases, " + std::to_string(bad) + " failures"};
}

Outcome criterion9() {
  const auto& c = corpus();
  const auto& q16 = c.table("Dic16");
  std::size_t sqrt2 = q16.num_characters();
  for (std::size_t i = 0; i < q16.num_characters(); ++i)
    if (character_field(q16, i) == quadratic_field(2)) sqrt2 = i;
  if (sqrt2 == q16.num_characters()) return {false, "Dic16 has no Q(sqrt 2) character"};
  const std::vector<std::tuple<const CharacterTable*, std::size_t, AbelianField>> instances{
      {&c.table("C5"), 1, quadratic_field(5)}, {&c.table("C7"), 1, quadratic_field(-7)}, {&q16, sqrt2, AbelianField::rationals()}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [t, i, f] : instances) {
    const auto w = make_wreath(*t, i, f);
    const auto r = verify_wreath(w);
    const bool degree_formula = r.degree == Integer(static_cast<long>(r.n)) * ipow(t->degree(i), static_cast<unsigned long>(r.n));
    ok = ok && r.ok() && degree_formula;
    d << t->name << "->" << f.to_string() << " n=" << r.n << " deg=" << r.degree.get_str() << " norm=" << r.norm
      << (r.ok() && degree_formula ? " ok; " : " FAIL; ");
  }
  return {ok, d.str()};
}

Outcome criterion10() {
  const auto r = run_suite(SuiteConfig{}, "pgroup", &corpus());
  const auto& s = r.summaries.at("pgroup");
  std::set<std::string> groups;
  for (const auto& rec : r.records) groups.insert(rec.group);
  return {s.fail == 0 && s.total > 0, std::to_string(groups.size()) + " p-group tables, " + std::to_string(s.total) + " records, " +
                                          std::to_string(s.fail) + " violations"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "conductor of Q(sqrt 6)", 1, criterion1},
      {2, "quadratic conductor rule vs stabilizer descent", 5, criterion2},
      {3, "Conjecture B over the corpus, p <= 13", 60, criterion3},
      {4, "c(chi)[Q_c:Q(chi)] divides |G|; A5 counterexample", 60, criterion4},
      {5, "alternating nu_p(c) <= 1, n <= 16", 30, criterion5},
      {6, "GL/GU sum of squares and class number", 300, criterion6},
      {7, "GL/GU Conjecture B scan", 300, criterion7},
      {8, "N1 and N2 divisibility", 10, criterion8},
      {9, "wreath construction instances", 10, criterion9},
      {10, "p-group lemma over corpus p-groups", 10, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs <= c.limit_seconds;
    failed += !pass;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << std::fixed << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit_seconds << " s]  "
              << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
