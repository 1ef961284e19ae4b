#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "detsum/gf2k.hpp"

namespace detsum {

enum class Engine { Table, Streaming };
enum class Preset { Fast, Safe };

std::string to_string(Engine e);
std::string to_string(Preset p);
Engine parse_engine(const std::string& s);
Preset parse_preset(const std::string& s);

// User-facing knobs. Zero / negative values mean "resolve automatically".
struct DetectionConfig {
  std::uint64_t seed = 1;
  unsigned k = 0;
  int runs = 0;
  int m_max = -1;
  Engine engine = Engine::Table;
  Preset preset = Preset::Fast;
  unsigned threads = 1;
  // Upper bound applied to automatically sized run counts.
  int max_runs = 4096;
};

// Lambda value of one reduced instance; nonzero certifies a Hamiltonian cycle.
struct Fingerprint {
  int m;
  FieldElement value;
};

struct RunRecord {
  int index = 0;
  std::vector<int> part1;
  std::vector<int> part2;
  int special = -1;
  std::vector<Fingerprint> fingerprints;
  double elapsed_ms = 0;

  bool nonzero() const;
};

struct DetectionResult {
  bool hamiltonian = false;
  // Resolved parameters.
  unsigned k = 0;
  int runs_planned = 0;
  int m_max = 0;
  std::uint64_t seed = 0;
  Engine engine = Engine::Table;
  std::vector<RunRecord> runs;
  double elapsed_ms = 0;
  // Set when the verdict needed no algebra (e.g. independent set too large).
  std::string shortcut;

  int runs_used() const { return static_cast<int>(runs.size()); }
};

// Uniform integer in [0, bound) by rejection; reproducible across standard
// libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Per-run sub-streams.
inline constexpr std::uint64_t kAssignmentStream = 1;
inline constexpr std::uint64_t kPartitionStream = 2;

// Seed of run `index` under the configured root seed.
std::uint64_t run_seed(std::uint64_t root, int index);

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Smallest k with 2^k > max(64 n, labels * base), unless cfg.k overrides.
unsigned resolve_field_bits(const DetectionConfig& cfg, int n, int labels, int base_vertices);

}  // namespace detsum
