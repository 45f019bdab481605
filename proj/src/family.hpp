#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "polynomial.hpp"

namespace arbor {

struct FactorBudget;

/// φ_a(x) = (x - γ(a))² + c(a) together with its conjugate σ_a(x) = x² + v_a,
/// v_a = c(a) - γ(a), under λ_a(x) = x + γ(a).
struct SpecializedMap {
  Int a;
  Int gamma_a;
  Int c_a;

  /// A map given directly by its specialized values (a is informational).
  static SpecializedMap from_values(Int gamma_a, Int c_a, Int a = 0);

  Int v() const { return c_a - gamma_a; }
  Int phi(const Int& x) const;
  Int sigma(const Int& x) const;
  Int lambda(const Int& x) const { return x + gamma_a; }
  Int lambda_inv(const Int& x) const { return x - gamma_a; }
  /// φ_a as a polynomial in x.
  IntPolynomial phi_polynomial() const;
};

struct BoundConstants {
  double A1 = 0;
  double A2 = 0;
  double A3 = 0;
  double A4 = 0;
  double B1 = 0;
  /// B1 = deg(c-γ) · log(threshold); |a| ≤ threshold is the small-height ball.
  Int threshold{1};
};

struct HallLangConstants {
  double kappa1 = 1;
  double kappa2 = 0;
  double kappa3 = 0;
};

/// Everything the bound-chain evaluator needs from a family.
struct BoundChainInputs {
  std::size_t deg_gamma = 0;
  std::size_t deg_diff = 1;
  double gamma_height = 0;
  BoundConstants constants;
};

struct NphiBound {
  double kappa2_prime = 0;
  double kappa3_prime = 0;
  Int a_min;
  double x_min = 0;
  std::array<double, 4> M{};
  double M_phi = 0;
  std::int64_t n_phi = 0;
};

class QuadraticFamily {
 public:
  QuadraticFamily(IntPolynomial gamma, IntPolynomial c);

  const IntPolynomial& gamma() const noexcept { return gamma_; }
  const IntPolynomial& c() const noexcept { return c_; }
  /// c - γ.
  const IntPolynomial& diff() const noexcept { return diff_; }

  SpecializedMap specialize(const Int& a) const;
  bool is_isotrivial() const noexcept { return diff_.is_constant(); }
  /// deg(c - γ); throws Isotrivial when that is zero or undefined.
  std::size_t diff_degree() const;

  /// φ(X) = (X - γ)² + c for X in Z[t].
  IntPolynomial apply(const IntPolynomial& x) const;

  /// Level above which the generic tower must be maximal.
  std::int64_t m_phi() const;
  /// φ(γ)·φ²(γ)·(c-γ)·(c-γ+1)·(c-γ+2).
  IntPolynomial exceptional_polynomial() const;
  BoundConstants bound_constants() const;
  /// Integer roots of the exceptional polynomial united with the small-height ball.
  std::vector<Int> exceptional_set(const FactorBudget& budget) const;
  std::vector<Int> exceptional_set() const;
  NphiBound nphi_bound(const HallLangConstants& hl) const;
  BoundChainInputs bound_chain_inputs() const;

 private:
  IntPolynomial gamma_;
  IntPolynomial c_;
  IntPolynomial diff_;
};

/// log(max(1, sum of |coefficients|)).
double log_coefficient_mass(const IntPolynomial& p);

/// The bound chain on raw inputs; the family overload fills these in.
NphiBound nphi_bound(const BoundChainInputs& in, const HallLangConstants& hl);

/// Exponent 2^n - n - 1 of the index bound.
Int index_bound_exponent(std::uint64_t n);
/// 2^(2^n - n - 1); DigitBudgetExceeded when the exponent passes max_bits.
Int index_bound(std::uint64_t n, std::uint64_t max_bits = std::uint64_t{1} << 20);

}  // namespace arbor
