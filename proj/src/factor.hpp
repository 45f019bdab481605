#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "family.hpp"

namespace arbor {

struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  /// Pollard-rho iterations allowed per composite cofactor.
  std::uint64_t rho_iters = 10'000'000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Factorization {
  int sign = 1;
  /// (prime, exponent), primes increasing.
  std::vector<std::pair<Int, unsigned>> factors;
  /// Unfactored composite part; 1 when complete.
  Int cofactor{1};
  bool complete = true;

  Int reconstruct() const;
};

/// Miller–Rabin with a fixed base set that is deterministic below 2^64,
/// plus 40 seeded random rounds above.
bool is_probable_prime(const Int& n, std::uint64_t seed = FactorBudget{}.seed);

/// Trial division to budget.trial_bound, then Brent's Pollard rho.
Factorization factorize(const Int& n, const FactorBudget& budget = {});

/// Positive divisors of |n| in increasing order; needs a complete factorization.
std::vector<Int> divisors(const Int& n, const FactorBudget& budget = {});

/// n = 2^e · d · y² with e ∈ {0,1}, d odd square-free carrying the sign, y > 0.
struct SquareFreeDecomposition {
  unsigned e = 0;
  Int d{1};
  Int y{1};

  Int value() const;
};

SquareFreeDecomposition squarefree_decompose(const Int& n, const FactorBudget& budget = {});

/// |D| with the powers of 2 removed and then every prime shared with an
/// earlier value divided out completely. No factoring is done.
Int stripped_cofactor(const Int& D, std::span<const Int> earlier);

enum class DivisorMethod { Exact, Certificate };

struct PrimitiveDivisorReport {
  std::size_t level = 0;
  /// Odd primes with odd valuation at `level` that divide no earlier level.
  std::vector<Int> primes;
  /// Metadata: 2 has odd valuation here and divides no earlier level.
  bool two_is_primitive = false;
  DivisorMethod method = DivisorMethod::Exact;
  bool certified = false;
  /// Certificate route only: the stripped cofactor R.
  Int cofactor{0};
  /// Certificate route only: whether `primes` is the full list for R.
  bool primes_complete = false;
};

/// `orbit[j]` is the level j+1 value φ_a^{j+1}(γ(a)); `level` is 1-based.
PrimitiveDivisorReport primitive_divisor_exact(std::span<const Int> orbit, std::size_t level,
                                               const FactorBudget& budget = {});

/// One-sided: certified means a square-free primitive prime divisor exists.
PrimitiveDivisorReport primitive_divisor_certificate(std::span<const Int> orbit, std::size_t level,
                                                     const FactorBudget& courtesy = {10'000, 20'000, FactorBudget{}.seed});

/// For p dividing φ^m(γ) and φ^n(γ), checks that p divides φ^{n-m}(0).
bool doubling_check(const SpecializedMap& map, std::uint64_t n, std::uint64_t m, const Int& p);

}  // namespace arbor
