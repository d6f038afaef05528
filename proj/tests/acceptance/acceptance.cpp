// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "brt/abelian.hpp"
#include "brt/braid.hpp"
#include "brt/brown.hpp"
#include "brt/builders.hpp"
#include "brt/isoprobe.hpp"
#include "brt/treepair.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

struct Check {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int index, const char* title, double limit_seconds, const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c = body();
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || elapsed < limit_seconds;
  const bool ok = c.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s [%d] %s: %s (%.3f s", ok ? "PASS" : "FAIL", index, title, c.detail.c_str(), elapsed);
  if (limit_seconds > 0) std::printf(", limit %.0f s", limit_seconds);
  std::printf(")\n");
  std::fflush(stdout);
}

std::vector<brt::Params> small_range() {
  std::vector<brt::Params> out;
  for (long n = 2; n <= 5; ++n)
    for (long m = 2; m <= 5; ++m) out.emplace_back(n, m);
  return out;
}

Check abelian_grid(brt::GroupKind kind) {
  long pairs = 0, bad = 0;
  std::string first;
  for (long n = 2; n <= 10; ++n)
    for (long m = 2; m <= 10; ++m) {
      const brt::Params p(n, m);
      const brt::FinitePresentation pres = kind == brt::GroupKind::braided ? brt::build_brT(p) : brt::build_T(p);
      const brt::AbelianGroup got = brt::abelianisation(pres);
      ++pairs;
      if (!(got == brt::expected_abelianisation(kind, p))) {
        if (bad++ == 0)
          first = "; first mismatch (" + std::to_string(n) + "," + std::to_string(m) + "): " + got.to_string();
      }
    }
  return {bad == 0 && pairs == 81, std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs match" + first};
}

Check reports(const std::function<brt::VerificationReport(const brt::Params&)>& run) {
  long relators = 0, bad = 0;
  std::string first;
  for (const auto& p : small_range()) {
    const brt::VerificationReport r = run(p);
    relators += static_cast<long>(r.checks.size());
    for (const auto& c : r.checks)
      if (!c.holds && bad++ == 0) first = "; first failure " + r.subject + " " + c.label;
  }
  return {bad == 0 && relators > 0,
          std::to_string(relators - bad) + "/" + std::to_string(relators) + " relations hold over 16 pairs" + first};
}

Check sergiescu() {
  long relations = 0, bad = 0, embeddings = 0;
  std::string first;
  for (const auto& p : small_range())
    for (int k = 0; k <= brt::hbar(p); ++k) {
      const brt::VerificationReport r = brt::verify_sergiescu(brt::sigma_tree_embedding(p, k));
      ++embeddings;
      relations += static_cast<long>(r.checks.size());
      for (const auto& c : r.checks)
        if (!c.holds && bad++ == 0) first = "; first failure " + c.label;
    }
  return {bad == 0, std::to_string(relations - bad) + "/" + std::to_string(relations) + " relations over " +
                        std::to_string(embeddings) + " embeddings" + first};
}

Check brown() {
  const brt::VerificationReport d4 = brt::verify_d4();
  const brt::Params p(2, 3);
  const brt::AbelianGroup assembled = brt::abelianisation(brt::assemble(brt::brT_brown_input(p)));
  const brt::AbelianGroup direct = brt::abelianisation(brt::build_brT(p));
  std::ostringstream s;
  s << "dihedral " << (d4.passed() ? "matches" : "differs") << " (" << d4.checks.size() - d4.failures() << "/"
    << d4.checks.size() << "); brT_{2,3} assembled " << assembled.to_string() << " vs built " << direct.to_string();
  return {d4.passed() && assembled == direct, s.str()};
}

Check diophantine() {
  long bad = 0, total = 0;
  std::string first;
  for (long k = 1; k <= 60; ++k) {
    const auto brute = brt::brute_solutions(k, 2 * k);
    total += static_cast<long>(brute.size());
    if (!brt::same_pairs(brute, brt::parametric_solutions(k)) && bad++ == 0) first = "; first k=" + std::to_string(k);
  }
  return {bad == 0, std::to_string(60 - bad) + "/60 values of k agree, " + std::to_string(total) + " solutions" + first};
}

Check verdicts() {
  long pairs = 0, open = 0, bad = 0;
  std::string first;
  for (long n = 2; n <= 12; ++n)
    for (long m = 2; m <= 12; ++m)
      for (long r = 2; r <= 12; ++r)
        for (long s = 2; s <= 12; ++s) {
          if (n == r && m == s) continue;
          ++pairs;
          const brt::Params a(n, m), b(r, s);
          const brt::Verdict v = brt::verdict(a, b);
          const bool excluded = v.kind == brt::VerdictKind::Excluded;
          bool good = excluded != oracle::inseparable(n, m, r, s);
          if (excluded && v.reasons.empty()) good = false;
          if (!excluded) ++open;
          if (!good && bad++ == 0) first = "; first " + brt::verdict_line(a, b, v);
        }
  return {bad == 0, std::to_string(pairs) + " ordered pairs, " + std::to_string(open) +
                        " complement candidates, " + std::to_string(bad) + " disagreements" + first};
}

Check properties() {
  constexpr long cases = 10000;
  const props::Outcome runs[] = {
      props::free_reduction(0x5eed0001, cases), props::smith(0x5eed0002, cases),
      props::treepair_laws(0x5eed0003, cases), props::garside_congruence(0x5eed0004, cases),
      props::complement_torsion(0x5eed0005, cases)};
  const char* names[] = {"free reduction", "smith", "tree pairs", "garside", "torsion"};
  Check c;
  for (std::size_t i = 0; i < 5; ++i) {
    c.ok = c.ok && runs[i].failures == 0 && runs[i].cases >= cases;
    c.detail += (i ? ", " : "") + std::string(names[i]) + " " + std::to_string(runs[i].failures) + "/" +
                std::to_string(runs[i].cases);
    if (runs[i].failures) c.detail += " [" + runs[i].first_failure + "]";
  }
  c.detail = "failures: " + c.detail;
  return c;
}

}  // namespace

int main() {
  criterion(1, "braided abelianisation grid 2<=n,m<=10", 10, [] { return abelian_grid(brt::GroupKind::braided); });
  criterion(2, "plain abelianisation grid 2<=n,m<=10", 5, [] { return abelian_grid(brt::GroupKind::plain); });
  criterion(3, "Thompson relators in the tree-pair model", 30, [] { return reports(brt::verify_T_presentation); });
  criterion(4, "braid relators under twist words", 30, [] { return reports(brt::verify_braid_relators); });
  criterion(5, "disjunction, adjacency and nodal relations", 0, sergiescu);
  criterion(6, "Brown assembler", 0, brown);
  criterion(7, "Diophantine brute force vs parametrisation, k<=60", 5, diophantine);
  criterion(8, "verdict table 2<=n,m,r,s<=12", 10, verdicts);
  criterion(9, "randomized property suites, 10^4 cases each", 0, properties);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
