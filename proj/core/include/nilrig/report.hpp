#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nilrig/lie_algebra.hpp"

namespace nilrig {

/// One recomputed claim. pass holds exactly when computed == expected.
struct Claim {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
  double runtime_ms = 0;
  /// Extra computed values printed next to the row (diagnostics).
  std::vector<std::string> notes;
};

struct ReportDoc {
  std::uint64_t seed = kDefaultSeed;
  std::vector<Claim> claims;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
};

/// Ids "1" .. "12" in catalog order.
std::vector<std::string> claim_ids();

/// Runs a single claim. Throws std::out_of_range for an unknown id.
Claim run_claim(const std::string& id, std::uint64_t seed = kDefaultSeed);

struct ReportOptions {
  std::uint64_t seed = kDefaultSeed;
  /// 0: use NILRIG_THREADS, else the hardware concurrency.
  std::size_t threads = 0;
  /// Called as each claim finishes (from worker threads, serialized).
  std::function<void(const Claim&)> on_claim;
};

/// Runs every claim; rows come back in catalog order whatever the thread
/// count.
ReportDoc run_report(const ReportOptions& options = {});

/// NILRIG_THREADS if set to a positive integer, else hardware concurrency (>= 1).
std::size_t thread_cap();

std::string report_to_json(const ReportDoc& doc);
std::string report_to_text(const ReportDoc& doc);

/// Named algebras used by the structural property suite.
std::vector<std::pair<std::string, LieAlgebra>> property_fixtures();

}  // namespace nilrig
