#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "family.hpp"

namespace arbor {

inline constexpr std::uint64_t kDefaultMaxBits = std::uint64_t{1} << 20;

/// values[n] = φ_a^n(start), n = 0..N.
struct OrbitSlice {
  SpecializedMap map;
  Int start;
  std::vector<Int> values;
};

/// Critical orbit φ_a^n(γ(a)); values[n-1] holds level n.
struct CriticalOrbit {
  std::vector<Int> values;
  /// φ_a(γ(a))·φ_a²(γ(a)) ≠ 0.
  bool nondegenerate = false;

  const Int& level(std::size_t n) const { return values.at(n - 1); }
};

/// Throws BudgetError<std::vector<Int>> (DigitBudgetExceeded) with the values
/// computed so far when an iterate would exceed max_bits.
OrbitSlice orbit(const SpecializedMap& map, const Int& start, std::size_t N, std::uint64_t max_bits = kDefaultMaxBits);

CriticalOrbit critical_orbit(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits = kDefaultMaxBits);

/// σ_a^n(0) == φ_a^n(γ(a)) - γ(a) for n = 1..N, both sides iterated separately.
bool sigma_orbit_identity(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits = kDefaultMaxBits);

/// v_a ∈ {0, -1, -2}.
bool is_postcritically_finite(const SpecializedMap& map);

/// h(σ_a^k(x)) / 2^k.
double normalized_iterate_height(const SpecializedMap& map, const Rational& x, std::uint64_t k);

struct CanonicalHeight {
  double value = 0;
  /// Iteration depth chosen from the a-priori error bound.
  std::uint64_t depth = 0;
  double eps = 0;
};

/// Estimate of the canonical height for σ_a within eps.
CanonicalHeight canonical_height(const SpecializedMap& map, const Rational& x, double eps);

/// ĥ(0) + eps >= max(h(v_a), 1) / 32; PostCriticallyFinite when 0 is not wandering.
bool check_ingram_lower_bound(const SpecializedMap& map, double eps = 1e-6);

}  // namespace arbor
