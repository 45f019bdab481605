#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "factor.hpp"
#include "family.hpp"
#include "orbit.hpp"
#include "polynomial.hpp"

namespace arbor {

struct StabilityReport {
  std::size_t depth = 0;
  /// (level, root) with φ_a^level(γ(a)) = root².
  std::vector<std::pair<std::size_t, Int>> squares;

  /// No rational square among the first `depth` critical values. This is
  /// the absence of one obstruction, not a proof of stability.
  bool no_square() const { return squares.empty(); }
  std::optional<std::size_t> first_square_level() const;
};

StabilityReport stability_scan(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits = kDefaultMaxBits);

/// |Δ_n| for φ_a^n from |Δ_1| and Δ_n = ±Δ_{n-1}²·2^(2^n)·φ^n(γ).
Int discriminant_recurrence(const SpecializedMap& map, std::size_t n, std::uint64_t max_bits = kDefaultMaxBits);

/// φ_a^n as an explicit polynomial in x (degree 2^n).
IntPolynomial iterate_polynomial(const SpecializedMap& map, std::size_t n);

enum class LevelStatus { CertifiedMaximal, FailedSquareOverQ, Unknown };

const char* to_string(LevelStatus status) noexcept;

struct MaximalityCertificate {
  std::size_t level = 0;
  LevelStatus status = LevelStatus::Unknown;
  /// Stripped cofactor R, or the square root for FailedSquareOverQ.
  Int witness;
};

/// `orbit` must contain at least `level` critical values.
MaximalityCertificate certify_level(const CriticalOrbit& orbit, std::size_t level);
MaximalityCertificate certify_level_maximal(const SpecializedMap& map, std::size_t level,
                                            std::uint64_t max_bits = kDefaultMaxBits);

struct TowerReport {
  std::vector<MaximalityCertificate> levels;
  std::size_t certified = 0;
  std::size_t unknown = 0;
  std::size_t failed = 0;
};

/// Levels from..to inclusive. On budget exhaustion throws
/// BudgetError<TowerReport> holding the levels that could be computed.
TowerReport certify_tower(const SpecializedMap& map, std::size_t from, std::size_t to,
                          std::uint64_t max_bits = kDefaultMaxBits);

/// Y² = 2^e·d·(X - c(a))·g(X) with g = φ_a (genus 1) or φ_a∘φ_a (genus 2).
struct CurveModel {
  IntPolynomial rhs;
  int genus = 1;
  std::size_t level = 0;

  /// Validates degree 3 or 5 and a nonzero discriminant.
  static CurveModel from_rhs(IntPolynomial rhs, std::size_t level = 0);
  std::string equation() const;
};

CurveModel curve_model(const SpecializedMap& map, std::size_t level, const SquareFreeDecomposition& dec, int genus);

struct IntegralPoint {
  Int x;
  Int y;
};

/// The point forced by the orbit: X = φ^{n-1}(γ) on the genus 1 model,
/// X = φ^{n-2}(γ) on the genus 2 model.
IntegralPoint forced_point(const CurveModel& model, const SpecializedMap& map, std::size_t level,
                           const SquareFreeDecomposition& dec);
bool verify_forced_point(const CurveModel& model, const SpecializedMap& map, std::size_t level,
                         const SquareFreeDecomposition& dec);

struct PointSearchHit {
  Int x;
  Int y;
  /// h(X) / max(1, h(rhs)).
  double height_ratio = 0;
};

/// Every (X, ±Y) with |X| <= xbound and Y² = rhs(X).
std::vector<PointSearchHit> search_integral_points(const CurveModel& model, std::uint64_t xbound);

}  // namespace arbor
