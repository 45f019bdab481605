#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace arbor {

/// Dense univariate polynomial over Z, coefficients stored low-to-high.
///
/// Always canonical: the top stored coefficient is nonzero and the zero
/// polynomial has no coefficients, so structural equality is equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(Int c);
  /// The monomial t.
  static IntPolynomial variable();

  /// Parse "c0,c1,...,cd" (whitespace and leading signs allowed).
  static IntPolynomial parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or nothing for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Degree of a polynomial known to be nonzero; throws ZeroPolynomial otherwise.
  std::size_t deg() const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::span<const Int> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  Int coeff(std::size_t i) const;
  const Int& leading() const;

  Int evaluate(const Int& x) const;
  IntPolynomial derivative() const;

  /// this ∘ inner.
  IntPolynomial compose(const IntPolynomial& inner) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Int& k);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Int& k) { return a *= k; }
  friend IntPolynomial operator*(const Int& k, IntPolynomial a) { return a *= k; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
  Int content() const;
  /// Exact division of every coefficient by k.
  IntPolynomial divexact(const Int& k) const;

  /// Comma-separated low-to-high coefficients; "0" for the zero polynomial.
  std::string to_csv() const;
  /// Human-readable form in the given variable, highest power first.
  std::string to_display(std::string_view var = "t") const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned k);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Resultant by the subresultant polynomial remainder sequence.
Int resultant(const IntPolynomial& p, const IntPolynomial& q);

/// disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p); requires deg p >= 1.
Int discriminant(const IntPolynomial& p);

/// Max of the heights of the coefficients; 0 for the zero polynomial.
double poly_height(const IntPolynomial& p);

/// Integer roots by divisor enumeration; `divisors_of` lists the positive
/// divisors of a nonzero integer (injected so callers choose the factoring budget).
template <typename DivisorFn>
std::vector<Int> integer_roots(const IntPolynomial& p, DivisorFn&& divisors_of);

}  // namespace arbor

#include "polynomial_roots.ipp"
