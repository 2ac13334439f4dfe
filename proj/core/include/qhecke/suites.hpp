#pragma once

#include "qhecke/hall.hpp"
#include "qhecke/quiver.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qh {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
  double seconds() const;
  // one line per check; timings only when asked
  std::string str(bool timings = false) const;
};

struct SuiteConfig {
  std::string quiver_name = "a2";
  QuiverData quiver = QuiverData::preset("a2");
  // rank; suites read it as an upper bound where a range is natural
  int n = 3;
  // exponent-sum cap for polynomial parts (degree 2 * cap in the x-grading)
  int max_exp = 3;
  int truncation = 4;
  int q = 2;
  int p = 3;
  int max_size = 8;
  DimVector max_dim{2, 2};
  int samples = 100;
  std::uint64_t seed = 1;
};

// suite names accepted by run_suite
const std::vector<std::string>& suite_names();
// per-suite defaults, matching the acceptance ranges
SuiteConfig default_config(const std::string& suite);
// throws UsageError for an unknown suite
SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg);

SuiteReport poincare_suite(const SuiteConfig& cfg);
SuiteReport demazure_suite(const SuiteConfig& cfg);
SuiteReport nilhecke_suite(const SuiteConfig& cfg);
SuiteReport klr_relations_suite(const SuiteConfig& cfg);
SuiteReport pbw_suite(const SuiteConfig& cfg);
SuiteReport grdim_suite(const SuiteConfig& cfg);
SuiteReport cyclotomic_suite(const SuiteConfig& cfg);
SuiteReport heckebridge_suite(const SuiteConfig& cfg);
SuiteReport hall_suite(const SuiteConfig& cfg);
SuiteReport fock_suite(const SuiteConfig& cfg);

}  // namespace qh
