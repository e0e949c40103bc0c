// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plocal/suites.hpp"

using namespace plocal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  size_t cases = 0;
};

// runs the named suites on one configuration and folds the result into o
void run_into(Outcome& o, SuiteConfig c, const std::vector<std::string>& suites) {
  c.suites = suites;
  Report r;
  try {
    r = run_suites(c);
  } catch (const std::exception& e) {
    o.pass = false;
    if (o.detail.empty()) o.detail = std::string("error: ") + e.what();
    return;
  }
  for (const auto& s : r.suites)
    for (const auto& cs : s.cases) {
      ++o.cases;
      if (!cs.pass) {
        if (o.pass)
          o.detail = s.name + " n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + " beta=" +
                     std::to_string(c.beta) + ": " + cs.name + ": " + cs.witness.substr(0, 200);
        o.pass = false;
      }
    }
}

SuiteConfig cfg(int n, long p, int beta = 1) {
  SuiteConfig c;
  c.n = n;
  c.p = p;
  c.beta = beta;
  return c;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> crit{
      {1, "refinement census n = 1..3", 10,
       [] {
         Outcome o;
         for (int n = 1; n <= 3; ++n) run_into(o, cfg(n, 3), {"spin-enum"});
         return o;
       }},
      {2, "Weyl transfer isomorphism and equivariance, n <= 3", 10,
       [] {
         Outcome o;
         for (int n = 1; n <= 3; ++n) run_into(o, cfg(n, 3), {"weyl-transfer"});
         return o;
       }},
      {3, "Hecke eigenvectors (n=1, p=2,3; n=2, p=2,3)", 300,
       [] {
         Outcome o;
         for (auto [n, p] : {std::pair{1, 2L}, {1, 3L}, {2, 2L}, {2, 3L}}) run_into(o, cfg(n, p), {"hecke-eigen"});
         return o;
       }},
      {4, "cell support, 1000 samples per configuration, >= 100 constructed", 120,
       [] {
         Outcome o;
         for (int n : {1, 2})
           for (long p : {2L, 3L})
             for (int beta : {1, 2}) {
               SuiteConfig c = cfg(n, p, beta);
               c.samples = 1000;
               run_into(o, c, {"cell-support"});
             }
         return o;
       }},
      {5, "zeta integrals end to end at n = 1", 300,
       [] {
         Outcome o;
         for (long p : {2L, 3L})
           for (int beta : {1, 2}) run_into(o, cfg(1, p, beta), {"zeta-iwahori", "zeta-parahoric"});
         return o;
       }},
      {6, "spin refinements have a nonzero Shalika-point value, n <= 3", 60,
       [] {
         Outcome o;
         for (int n = 1; n <= 3; ++n)
           for (long p : {2L, 3L})
             for (int beta : {1, 2}) run_into(o, cfg(n, p, beta), {"shalika-witness"});
         return o;
       }},
      {7, "branching vectors on N^beta (n=1 exhaustive, n=2 1000 samples)", 120,
       [] {
         Outcome o;
         for (int n : {1, 2})
           for (long p : {2L, 3L})
             for (int beta : {1, 2}) {
               SuiteConfig c = cfg(n, p, beta);
               c.samples = 1000;
               run_into(o, c, {"branching-support"});
             }
         return o;
       }},
      {8, "interpolation diagram, 100 distributions, precision (8, 4)", 120,
       [] {
         Outcome o;
         for (int n : {1, 2})
           for (long p : {2L, 3L}) {
             SuiteConfig c = cfg(n, p);
             c.samples = 100;
             c.family_m = 8;
             c.family_d = 4;
             run_into(o, c, {"interp-diagram"});
           }
         return o;
       }},
      {9, "Euler factor coherence and comparison constant", 60,
       [] {
         Outcome o;
         for (int n : {1, 2})
           for (long p : {2L, 3L})
             for (int beta : {1, 2}) run_into(o, cfg(n, p, beta), {"euler-factors", "comparison"});
         return o;
       }},
      {10, "byte-identical reports for identical config and seed", 120,
       [] {
         Outcome o;
         for (auto c : {cfg(1, 3), cfg(2, 2, 2)}) {
           std::string a = report_text(run_suites(c)), b = report_text(run_suites(c));
           o.cases += 1;
           if (a != b) {
             o.pass = false;
             o.detail = "reports differ at n=" + std::to_string(c.n);
           }
         }
         return o;
       }},
  };
  int failed = 0;
  for (const auto& c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.body();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.limit_s) {
      o.pass = false;
      o.detail = "over the time limit";
    }
    if (o.pass && o.cases == 0) {
      o.pass = false;
      o.detail = "no cases ran";
    }
    failed += !o.pass;
    std::printf("criterion %2d: %s  %s  [%zu cases, %.1fs of %.0fs]%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                o.cases, s, c.limit_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed ? 1 : 0;
}
