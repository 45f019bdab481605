#include "bigint.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace arbor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Residue tables: r is a square mod m for every listed modulus.
template <unsigned M>
constexpr std::array<bool, M> square_table() {
  std::array<bool, M> t{};
  for (unsigned i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}

constexpr auto kSq64 = square_table<64>();
constexpr auto kSq63 = square_table<63>();
constexpr auto kSq65 = square_table<65>();
constexpr auto kSq11 = square_table<11>();

}  // namespace

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Int parse_int(std::string_view text) {
  auto s = trim(text);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9')
      throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Int& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.den == 1) return to_string(x.num);
  return to_string(x.num) + "/" + to_string(x.den);
}

std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

double log_abs(const Int& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double height(const Int& x) {
  if (abs(x) <= 1) return 0.0;
  return log_abs(x);
}

double height(const Rational& x) {
  Int m = abs(x.num) > x.den ? Int(abs(x.num)) : x.den;
  return height(m);
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of a negative integer");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n). Newton then decreases monotonically.
  Int x = pow2((bit_length(n) + 1) / 2);
  while (true) {
    Int y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!kSq64[mod_u64(n, 64)]) return std::nullopt;
  unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 63UL * 65UL * 11UL);
  if (!kSq63[r % 63] || !kSq65[r % 65] || !kSq11[r % 11]) return std::nullopt;
  Int root = isqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

Int pow2(std::uint64_t k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

std::uint64_t mod_u64(const Int& x, std::uint64_t m) {
  Int r;
  Int mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace arbor
