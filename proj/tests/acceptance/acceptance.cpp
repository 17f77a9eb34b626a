// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include <grothkit/harness.hpp>
#include <grothkit/qsym.hpp>
#include <grothkit/serialize.hpp>
#include <grothkit/shapes.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace grothkit;

namespace {

using Clock = std::chrono::steady_clock;

struct CheckRun {
  std::string id;
  Params bounds;
  Expectation expected = Expectation::Pass;
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs each check with its bounds pinned and requires PASS with the expected tag.
Outcome run_pinned(const std::vector<CheckRun>& runs) {
  Outcome out;
  std::ostringstream detail;
  for (const auto& r : runs) {
    CheckReport rep = run_check(r.id, r.bounds);
    bool good = rep.passed() && rep.expected == r.expected && rep.instances > 0;
    out.ok = out.ok && good;
    detail << " " << r.id << "=" << status_name(rep.status) << "/" << rep.instances;
    if (!rep.passed() && rep.counterexample) detail << " counterexample " << rep.counterexample->dump();
  }
  out.detail = detail.str();
  return out;
}

Outcome gq_to_gp() {
  const int n = 8, d = 8;
  BasisExpansion e = expand_in_basis(grothendieck_GQ(parse_shape("3,2"), n, d), Basis::GP);
  BasisExpansion want;
  want.basis = Basis::GP;
  want.valid_deg = d;
  want.add({3, 2}, Dyadic(4));
  want.add({4, 2}, Dyadic(BetaPoly::beta(1, 2)));
  want.add({4, 3}, Dyadic(BetaPoly::beta(2, -1)));
  BasisExpansion got = e.truncated(d);
  return {e.valid_deg >= d && got == want, " " + expansion_str(got)};
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 means no time limit
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "GQ(3,2) in the GP basis, n_vars = max_deg = 8", 60.0, gq_to_gp},
      {2, "skew GP and GQ symmetric, |lambda| <= 6, n_vars = max_deg = 6", 300.0,
       [] { return run_pinned({{"skew-symmetry", {{"max_size", 6}, {"max_deg", 6}, {"n_vars", 6}}}}); }},
      {3, "Yang-Baxter relations, |mu| <= 8, mu_1 <= 6, formal degree 3", 120.0,
       [] { return run_pinned({{"yang-baxter", {{"max_size", 8}, {"max_part", 6}, {"formal_deg", 3}}}}); }},
      {4, "double-slash operators against strip sums of skew tableau functions, |lambda| <= 5", 0.0,
       [] {
         return run_pinned({{"gp-slashslash-crosscheck", {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}}});
       }},
      {5, "enumerators equal multiextension sums, posets <= 4 vertices, max_deg = 5", 0.0,
       [] {
         return run_pinned({{"fundamental-lemma-plain", {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 5}}},
                            {"fundamental-lemma-enriched", {{"max_poset", 4}, {"max_deg", 5}, {"n_vars", 5}}}});
       }},
      {6, "involutions, antipode, Theta and omega on G", 0.0,
       [] {
         return run_pinned({{"omega-rho-psi", {{"max_size", 5}, {"max_deg", 5}}},
                            {"antipode-axiom", {{"max_deg", 5}}},
                            {"theta-superfication", {{"max_poset", 4}, {"max_deg", 5}}},
                            {"omega-G-transpose", {{"max_size", 5}, {"max_deg", 5}}}});
       }},
      {7, "cancellation laws for K_a (|a| <= 5) and GP/GQ (|lambda| <= 5), max_deg = 5", 0.0,
       [] {
         return run_pinned({{"cancellation-K", {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}},
                            {"cancellation-GQ", {{"max_size", 5}, {"max_deg", 5}, {"n_vars", 5}}}});
       }},
      {8, "K/Kbar round trip, |a| <= 4", 0.0,
       [] { return run_pinned({{"equiexp-roundtrip", {{"max_size", 4}, {"max_deg", 6}, {"n_vars", 5}}}}); }},
      {9, "conjectures consistent (GQ to GP strips, positivity, GS of rectangles)", 0.0,
       [] {
         return run_pinned({{"gq-to-gp-conjecture", {{"max_size", 5}, {"extra_deg", 3}}, Expectation::Conjecture},
                            {"gq-gp-positivity-conjecture", {{"max_size", 5}, {"extra_deg", 2}}, Expectation::Conjecture},
                            {"dewitt-conjecture", {{"max_m", 2}, {"max_k", 2}, {"extra_deg", 3}}, Expectation::Conjecture}});
       }},
      {10, "doubling recurrence and valley product formula, posets <= 4 vertices", 0.0,
       [] {
         return run_pinned({{"doubling", {{"max_poset", 4}, {"max_deg", 5}}},
                            {"op-thm-valley-product", {{"max_poset", 4}, {"max_deg", 5}}}});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string(" error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    bool pass = o.ok && in_time;
    if (!pass) ++failed;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << timing << "]"
              << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
