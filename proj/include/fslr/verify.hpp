#pragma once

// Property suites that check the engine's identities exhaustively over a
// bounded envelope of shapes and partitions.  Each suite counts the
// individual checks it performs and keeps the first counterexample.

#include "fslr/lr_rule.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fslr {

struct VerifyBounds {
  int max_boxes = 6;        // total boxes of the multishapes swept
  int max_size = 4;         // |lambda|, |mu| bound for change-of-basis checks
  int n = 3;                // largest ambient n (suites sweep 1..n unless noted)
  int r = 3;                // largest number of diagrams
  std::uint64_t seed = 1;   // drives the randomized extra samples
  int random_samples = 0;   // extra random tableaux beyond the exhaustive envelope
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::optional<std::string> first_failure;
  double seconds = 0.0;

  bool ok() const { return failures == 0; }
  nlohmann::json to_json() const;
  /// `suite: N checks, F failures (T s)` plus the counterexample line if any.
  std::string to_plain() const;
};

/// involutions, cancellation, lemma3, theorem, basis, remark.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Throws std::invalid_argument on
/// an unknown name.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyBounds& bounds,
                                    FactorialSchurCache* cache = nullptr);

}  // namespace fslr
