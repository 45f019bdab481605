#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace arbor {

using Int = mpz_class;

/// Reduced rational p/q with q > 0.
struct Rational {
  Int num;
  Int den{1};

  Rational() = default;
  Rational(Int n) : num(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d);
};

Int parse_int(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Int& x);
std::string to_string(const Rational& x);

/// Number of bits in |x|; 0 for x = 0.
std::size_t bit_length(const Int& x);

/// Natural log of |x|, accurate for arbitrarily large x. -inf for 0.
double log_abs(const Int& x);

/// Absolute logarithmic height: log max(1, |x|).
double height(const Int& x);
/// log max(|num|, |den|) for a reduced fraction.
double height(const Rational& x);

/// floor(sqrt(n)) for n >= 0 by Newton iteration.
Int isqrt(const Int& n);

/// The nonnegative root when n is a perfect square, nothing otherwise.
std::optional<Int> perfect_square_root(const Int& n);

/// Exact 2^k.
Int pow2(std::uint64_t k);

/// Reduce x modulo m (m > 0) into [0, m).
std::uint64_t mod_u64(const Int& x, std::uint64_t m);

}  // namespace arbor
