#pragma once

// Self-check suites behind `kleinvcy verify`. Each suite compares a closed
// form against its defining computation (iterated products, explicit
// line images, brute-force power search) over a bounded sample.

#include <cstdint>
#include <string>
#include <vector>

namespace kleinvcy {

struct VerifyOptions {
  long bound = 6;
  /// Grid bound for numerators and denominators of line data.
  long max_denominator = 5;
  std::uint64_t seed = 0x5eed;
  /// Random large-coordinate samples for the randomized suites.
  std::size_t random_samples = 10000;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::size_t checks = 0;
  /// First few failures, human readable.
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what);
};

/// group-law, representation, isotropy, i-complex, classes, kn-action,
/// equivariance, homology.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace kleinvcy
