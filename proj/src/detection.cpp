#include "detsum/detection.hpp"

#include <algorithm>

#include "detsum/assignment.hpp"
#include "detsum/errors.hpp"

namespace detsum {

std::string to_string(Engine e) { return e == Engine::Table ? "table" : "streaming"; }
std::string to_string(Preset p) { return p == Preset::Fast ? "fast" : "safe"; }

Engine parse_engine(const std::string& s) {
  if (s == "table") return Engine::Table;
  if (s == "streaming") return Engine::Streaming;
  throw InvalidInput("unknown engine '" + s + "' (expected table or streaming)");
}

Preset parse_preset(const std::string& s) {
  if (s == "fast") return Preset::Fast;
  if (s == "safe") return Preset::Safe;
  throw InvalidInput("unknown preset '" + s + "' (expected fast or safe)");
}

bool RunRecord::nonzero() const {
  return std::any_of(fingerprints.begin(), fingerprints.end(),
                     [](const Fingerprint& f) { return !f.value.is_zero(); });
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t run_seed(std::uint64_t root, int index) {
  return derive_seed(root, static_cast<std::uint64_t>(index));
}

unsigned resolve_field_bits(const DetectionConfig& cfg, int n, int labels, int base_vertices) {
  const auto interpolation = static_cast<std::uint64_t>(labels) * static_cast<std::uint64_t>(base_vertices);
  if (cfg.k != 0) {
    if (cfg.k > FieldContext::kMaxBits) throw InvalidInput("k must be at most 32");
    if ((std::uint64_t{1} << cfg.k) <= interpolation)
      throw FieldTooSmall("k = " + std::to_string(cfg.k) + " violates 2^k > |L| n = " +
                          std::to_string(interpolation));
    return cfg.k;
  }
  const std::uint64_t bound = std::max<std::uint64_t>(64 * static_cast<std::uint64_t>(n), interpolation);
  return bits_exceeding(bound);
}

}  // namespace detsum
