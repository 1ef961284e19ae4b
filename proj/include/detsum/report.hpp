#pragma once

#include <string>

#include "detsum/detection.hpp"
#include "detsum/tsp.hpp"

namespace detsum {

struct ReportOptions {
  bool per_run = true;
  // Wall-clock fields are the only nondeterministic part of a report.
  bool timing = true;
};

std::string verdict_string(const DetectionResult& r);

// One `key=value` per line. Fixed keys first: verdict, runs_used, k, m_max,
// seed, elapsed_ms; then engine, runs_planned, shortcut and per-run lines.
std::string format_report(const DetectionResult& r, const ReportOptions& opts = {});
std::string format_report(const TspResult& r, const ReportOptions& opts = {});

// Fingerprint values as `m:hex` pairs.
std::string format_fingerprints(const RunRecord& run);

}  // namespace detsum
