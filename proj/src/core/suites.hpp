#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace.hpp"

namespace surfcoh {

// Rejected configuration (unknown suite, out-of-cap ranges, bad values).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale caps; ranges beyond them are refused unless allow_large is set.
inline constexpr int kGenusCap = 5;
inline constexpr int kPointsCap = 6;

struct SuiteConfig {
  std::string suite = "all";  // cup crossing push sym isotropic johnson cover all
  int g_lo = 2;
  int g_hi = 3;
  int n_lo = 2;
  int n_hi = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  RelationSign relation_sign = RelationSign::Minus;
  bool allow_large = false;
};

struct CheckRecord {
  std::string id;
  std::string claim;  // the mathematical statement the check certifies
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
};

class SuiteReport {
 public:
  SuiteReport(SuiteConfig config, std::vector<CheckRecord> checks,
              std::int64_t wall_ms);

  const SuiteConfig& config() const { return config_; }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::size_t failure_count() const;
  bool passed() const { return failure_count() == 0; }

  // Stable byte-for-byte across runs of the same config; wall time is
  // deliberately left out.
  std::string to_json() const;
  std::string to_text() const;

 private:
  SuiteConfig config_;
  std::vector<CheckRecord> checks_;
  std::int64_t wall_ms_;
};

// Runs the configured suite.  Deterministic given the config (seed included).
SuiteReport run_suite(const SuiteConfig& cfg);

// Computed image rank next to its closed form over a (g, n) grid.
std::string rank_table(int g_lo, int g_hi, int n_lo, int n_hi, bool as_json,
                       bool allow_large);

const std::vector<std::string>& suite_ids();

}  // namespace surfcoh
