#include "detsum/report.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

namespace detsum {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

std::string verdict_string(const DetectionResult& r) { return r.hamiltonian ? "hamiltonian" : "not-detected"; }

std::string format_fingerprints(const RunRecord& run) {
  std::ostringstream os;
  for (std::size_t i = 0; i < run.fingerprints.size(); ++i) {
    if (i) os << ',';
    os << run.fingerprints[i].m << ':' << std::hex << run.fingerprints[i].value.bits << std::dec;
  }
  return os.str();
}

std::string format_report(const DetectionResult& r, const ReportOptions& opts) {
  std::ostringstream os;
  os << "verdict=" << verdict_string(r) << '\n';
  os << "runs_used=" << r.runs_used() << '\n';
  os << "k=" << r.k << '\n';
  os << "m_max=" << r.m_max << '\n';
  os << "seed=" << r.seed << '\n';
  if (opts.timing) os << "elapsed_ms=" << ms(r.elapsed_ms) << '\n';
  os << "engine=" << to_string(r.engine) << '\n';
  os << "runs_planned=" << r.runs_planned << '\n';
  if (!r.shortcut.empty()) os << "shortcut=" << r.shortcut << '\n';
  if (!opts.per_run) return os.str();
  for (const RunRecord& run : r.runs) {
    const std::string p = "run." + std::to_string(run.index) + '.';
    os << p << "part1=" << join(run.part1) << '\n';
    os << p << "part2=" << join(run.part2) << '\n';
    os << p << "special=" << run.special << '\n';
    os << p << "fingerprints=" << format_fingerprints(run) << '\n';
    os << p << "nonzero=" << (run.nonzero() ? 1 : 0) << '\n';
    if (opts.timing) os << p << "elapsed_ms=" << ms(run.elapsed_ms) << '\n';
  }
  return os.str();
}

std::string format_report(const TspResult& r, const ReportOptions& opts) {
  std::ostringstream os;
  os << "verdict=" << (r.weight ? "tour" : "no-tour") << '\n';
  os << "runs_used=" << r.runs.size() << '\n';
  os << "k=" << r.k << '\n';
  os << "m_max=" << r.m_max << '\n';
  os << "seed=" << r.seed << '\n';
  if (opts.timing) os << "elapsed_ms=" << ms(r.elapsed_ms) << '\n';
  os << "engine=" << to_string(r.engine) << '\n';
  os << "runs_planned=" << r.runs_planned << '\n';
  os << "total_weight=" << r.total_weight << '\n';
  if (r.weight) os << "weight=" << *r.weight << '\n';
  if (!opts.per_run) return os.str();
  for (const TspRun& run : r.runs) {
    const std::string p = "run." + std::to_string(run.index) + '.';
    os << p << "part1=" << join(run.part1) << '\n';
    os << p << "weight=" << (run.weight ? std::to_string(*run.weight) : "none") << '\n';
    if (opts.timing) os << p << "elapsed_ms=" << ms(run.elapsed_ms) << '\n';
  }
  return os.str();
}

}  // namespace detsum
