#pragma once

// Consolidated verification report: one line per structural statement,
// each backed by one library operation.

#include <string>
#include <vector>

#include <json.hpp>

#include "scheme_forge/fission.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/planes.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

enum class Status { Pass, Fail, NotApplicable };

const char* to_string(Status s);

struct Check {
  std::string name;
  std::string statement;
  Status status = Status::NotApplicable;
  std::string details;
};

struct Report {
  std::string source;
  int n = 0;
  int r = 0;
  std::vector<Check> checks;

  /// No asserted check failed.
  bool passed() const;
  const Check* find(const std::string& name) const;
};

struct ReportOptions {
  std::size_t bound = kDefaultGroupBound;
  int cutoff = kDefaultBaseCutoff;
  int radius = kDefaultPlaneRadius;
  /// Concurrent checks; 0 means the SCHEME_FORGE_THREADS default.
  unsigned threads = 0;
};

/// SCHEME_FORGE_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_cap();

/// Runs every registered check. Output order is the registry order
/// regardless of completion order.
Report build_report(const Scheme& x, std::string source, const ReportOptions& options = {});

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace scheme_forge
