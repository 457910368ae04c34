// Seeded cross-verification suite: random exact kernels and derivative
// specifications are fed through every applicable evaluator route and the
// brute-force polynomial oracle, and the results must agree exactly.
//
// Case data is derived from (seed, case index) only, so any single case can
// be replayed in isolation and the suite is reproducible under any thread
// count.  Cases are independent; the batch runner may evaluate them with an
// OpenMP worker pool, while a serial runner with identical semantics is kept
// as the reference implementation (and as the baseline of the benchmark).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charderiv {

struct VerifyOptions {
  std::uint64_t seed = 7;
  int max_k = 3;   // largest merging-point multiplicity / matrix dimension
  int cases = 100;
};

struct VerifyCaseResult {
  std::string name;    // stable, e.g. "case 012 pf two-point k=2"
  bool pass = false;
  std::string detail;  // route values on mismatch, empty on success
};

// Run one case (deterministic in (options.seed, index)).
VerifyCaseResult run_cross_case(const VerifyOptions& options, int index);

// Run the whole suite in deterministic case order.  The parallel variant
// distributes cases over OpenMP threads (capped by CHARDERIV_THREADS) and
// collects into a pre-sized vector, so its output is byte-identical to the
// serial reference.
std::vector<VerifyCaseResult> run_cross_suite_serial(const VerifyOptions& options);
std::vector<VerifyCaseResult> run_cross_suite(const VerifyOptions& options);

// Worker count the parallel runner will use (1 without OpenMP).
int verify_thread_count();

}  // namespace charderiv
