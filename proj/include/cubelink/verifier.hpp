#ifndef CUBELINK_VERIFIER_HPP
#define CUBELINK_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubelink/cube_complex.hpp"
#include "cubelink/gamma.hpp"

namespace cubelink {

enum class Target { Gamma, X, Delta };

std::string_view target_name(Target t);

struct VerificationConfig {
  Target target = Target::Delta;
  int p = 11;
  OffsetScheme scheme;
  int parallelism = 1;
  int sample_homology = 64;  // links to cross-check with full homology (Delta)
  uint64_t seed = 0;         // sampling seed, echoed in the report
};

struct CheckRecord {
  std::string id;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> counts;
  std::vector<std::string> witness;
  // wall time is kept for callers but never serialized: reports must be
  // byte-identical across runs of the same config
  double elapsed_sec = 0;

  void count(const std::string& key, long value);
  void count(const std::string& key, const std::string& value);
};

struct VerificationReport {
  int schema = 1;
  VerificationConfig config;
  std::vector<CheckRecord> checks;  // sorted by id

  bool all_pass() const;
  const CheckRecord* find(std::string_view id) const;
  /// Canonical structured text: config echo, summary, then one block per
  /// check with key-sorted counts. Deterministic for a given config.
  std::string to_text() const;
};

/// Build the target object and run its full check suite. Check failures are
/// recorded in the report; configuration problems (bad scheme, impossible
/// sample size) throw std::invalid_argument.
VerificationReport run_verification(const VerificationConfig& config);

enum class SchemeMode { DefaultOnly, AllSchemes };

struct SweepRow {
  int p = 0;
  OffsetScheme scheme;
  bool prime = false;
  bool degree4 = false;
  bool sign_cycles = false;
  bool no_short_cycles = false;
  std::string witness;  // first failure, empty when all three pass

  bool pass() const { return degree4 && sign_cycles && no_short_cycles; }
};

struct SweepResult {
  SchemeMode mode = SchemeMode::DefaultOnly;
  int p_min = 0;
  int p_max = 0;
  std::vector<SweepRow> rows;  // sorted by (p, scheme)

  std::string to_text() const;
};

/// Judge the graph-level conditions for every p in [p_min, p_max], either on
/// the default scheme reduced mod p or on every offset scheme (p <= 13).
SweepResult sweep(int p_min, int p_max, SchemeMode mode, int parallelism = 1);

}  // namespace cubelink

#endif
