#include "qhecke/suites.hpp"

#include <cstring>
#include <iostream>

using namespace qh;

namespace {

struct Run {
  std::string suite;
  SuiteConfig cfg;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Run> runs;
  // wall-time limit in seconds for each run
  std::vector<double> limits;
};

SuiteConfig with_quiver(SuiteConfig c, const std::string& name) {
  c.quiver_name = name;
  c.quiver = QuiverData::preset(name);
  return c;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;
  out.push_back({1, "Poincare polynomial, n <= 6", {{"poincare", default_config("poincare")}}, {1}});
  out.push_back({2, "Demazure relations, staircase, Schubert round trip", {{"demazure", default_config("demazure")}}, {30}});
  out.push_back({3, "nil affine Hecke: faithfulness, b_n, t', Gram", {{"nilhecke", default_config("nilhecke")}}, {120}});
  Criterion klr{4, "KLR relations, PBW, torsion, graded dimension", {}, {}};
  for (const char* q : {"a2", "a3"})
    for (const char* s : {"klr-relations", "pbw", "grdim"}) klr.runs.push_back({s, with_quiver(default_config(s), q)});
  // one budget for the whole criterion
  klr.limits.assign(klr.runs.size(), 300);
  out.push_back(klr);
  out.push_back({5, "cyclotomic ranks, isomorphism, sl2 ledger", {{"cyclotomic", default_config("cyclotomic")}}, {120}});
  out.push_back({6, "affine and degenerate Hecke relations on truncated modules", {{"heckebridge", default_config("heckebridge")}}, {120}});
  SuiteConfig h2 = default_config("hall"), h3 = default_config("hall");
  h2.q = 2;
  h3.q = 3;
  out.push_back({7, "Hall algebra of A2 at q = 2, 3", {{"hall", h2}, {"hall", h3}}, {300, 1200}});
  Criterion fock{8, "Fock space example and relations, p in {2,3,5}", {}, {}};
  for (int p : {2, 3, 5}) {
    SuiteConfig c = default_config("fock");
    c.p = p;
    c.max_size = 8;
    fock.runs.push_back({"fock", c});
  }
  fock.limits.assign(3, 30);
  out.push_back(fock);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false, timings = false;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--verbose")) verbose = true;
    else if (!std::strcmp(argv[k], "--timings")) timings = true;
    else {
      std::cerr << "usage: acceptance [--verbose] [--timings]\n";
      return 2;
    }
  }

  bool all = true;
  std::vector<std::string> first_pass;
  std::vector<Run> every_run;
  for (const auto& c : criteria()) {
    bool pass = true, in_time = true;
    double total = 0, budget = 0;
    std::string notes;
    for (std::size_t r = 0; r < c.runs.size(); ++r) {
      const SuiteReport rep = run_suite(c.runs[r].suite, c.runs[r].cfg);
      total += rep.seconds();
      budget = c.id == 4 ? budget + rep.seconds() : rep.seconds();
      if (budget > c.limits[r]) in_time = false;
      pass = pass && rep.ok();
      first_pass.push_back(rep.str());
      every_run.push_back(c.runs[r]);
      if (verbose || !rep.ok()) notes += rep.str(timings);
    }
    const bool ok = pass && in_time;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title;
    if (pass && !in_time) std::cout << " (time limit exceeded)";
    if (timings) std::cout << " (" << total << " s)";
    std::cout << "\n" << notes << std::flush;
  }

  bool same = true;
  for (std::size_t r = 0; r < every_run.size(); ++r)
    if (run_suite(every_run[r].suite, every_run[r].cfg).str() != first_pass[r]) {
      same = false;
      std::cout << "  differs on rerun: " << every_run[r].suite << "\n";
    }
  all = all && same;
  std::cout << (same ? "PASS" : "FAIL") << " 9 reports are identical on a second run with the same config\n";
  return all ? 0 : 1;
}
