#pragma once

#include <string>
#include <vector>

#include "qlab/rational.hpp"
#include "qlab/report.hpp"

namespace qlab {

inline constexpr const char* kSkipEvenDim = "even-dimension truncation";

struct VerifyOptions {
  int nmax = 6;
  ExactScalar dim_lo{3};
  ExactScalar dim_hi{12};
  int jobs = 0;             // 0 = use hardware concurrency
  std::string golden_dir;   // empty = search tests/golden and ../tests/golden
};

// Integer dimensions in [lo, hi], plus the endpoints themselves when
// they are not integers; ascending.
std::vector<ExactScalar> enumerate_dims(const ExactScalar& lo, const ExactScalar& hi);

// First existing directory among: requested (if nonempty), tests/golden,
// ../tests/golden. Empty string when none exists.
std::string resolve_golden_dir(const std::string& requested);

bool is_valid_scope(const std::string& scope);

// Run one scope (all|combinatorics|pi|sphere|series|q). Checks may run
// concurrently under opt.jobs; the record order is deterministic.
// Throws std::invalid_argument for bad scope or options.
VerificationReport run_suite(const std::string& scope, const VerifyOptions& opt);

}  // namespace qlab
