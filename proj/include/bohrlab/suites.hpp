#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bohrlab::suites {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int trials = 200;
  std::size_t order = 128;
};

/// One named scalar check (value <= bound + tail + slack), outside the trial loop.
struct Check {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  double tail = 0.0;
  bool passed = false;
};

struct TrialSummary {
  std::uint64_t seed = 0;
  double worst_margin = 0.0;  // min over the trial's comparisons of rhs - lhs
  double max_tail = 0.0;
  bool passed = true;
};

struct SuiteReport {
  std::string name;
  std::vector<TrialSummary> trials;
  std::vector<Check> checks;

  int violations() const;
  bool passed() const { return violations() == 0; }
  double worst_margin() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

SuiteReport thm_a(const SuiteOptions& options);
SuiteReport thm_b(const SuiteOptions& options);
SuiteReport p_family(const SuiteOptions& options);
SuiteReport thm1(const SuiteOptions& options);
SuiteReport thm2_halfplane(const SuiteOptions& options);
SuiteReport thm3_koebe(const SuiteOptions& options);
SuiteReport lemma1(const SuiteOptions& options);
SuiteReport lemma2(const SuiteOptions& options);
SuiteReport rogosinski(const SuiteOptions& options);
SuiteReport identities(const SuiteOptions& options);

}  // namespace bohrlab::suites
