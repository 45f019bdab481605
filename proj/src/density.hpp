#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "family.hpp"
#include "primes.hpp"

namespace arbor {

/// Tail length μ and cycle length λ of n ↦ φ_a^n(b) mod p.
struct OrbitCycle {
  std::uint64_t tail = 0;
  std::uint64_t cycle = 0;
};

OrbitCycle orbit_cycle_mod_p(const SpecializedMap& map, const Int& b, std::uint64_t p);

/// Whether φ_a^n(b) ≡ 0 (mod p) for some n >= 1. Requires p < 2^63.
bool orbit_hits_zero_mod_p(const SpecializedMap& map, const Int& b, std::uint64_t p);

struct DensityCheckpoint {
  std::uint64_t X = 0;
  std::uint64_t primes_tested = 0;
  std::uint64_t members = 0;

  double proportion() const {
    return primes_tested ? static_cast<double>(members) / static_cast<double>(primes_tested) : 0.0;
  }
  friend bool operator==(const DensityCheckpoint&, const DensityCheckpoint&) = default;
};

struct DensityCurve {
  Int b;
  std::vector<DensityCheckpoint> checkpoints;
  /// Member primes in increasing order, filled only when requested.
  std::vector<std::uint64_t> member_primes;
};

struct DensityOptions {
  /// Number of contiguous prime ranges; the merged curve does not depend on it.
  std::size_t shards = 1;
  std::size_t threads = 1;
  std::size_t segment_size = kDefaultSegmentSize;
  bool collect_members = false;
};

/// Powers of ten up to X, then X itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t X);

DensityCurve density_curve(const SpecializedMap& map, const Int& b, std::uint64_t X,
                           std::vector<std::uint64_t> checkpoints, const DensityOptions& options = {});

/// "X,primes_tested,members,proportion" rows.
std::string to_csv(const DensityCurve& curve);

}  // namespace arbor
