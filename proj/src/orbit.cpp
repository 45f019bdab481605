#include "orbit.hpp"

#include <cmath>

#include "error.hpp"

namespace arbor {

namespace {

constexpr std::uint64_t kMaxHeightDepth = 2000;
// Exact rational iteration stops once numerator or denominator passes this size.
constexpr std::size_t kExactHeightBits = 4096;
// Once 2·log|x| exceeds log|v| by this margin, v/x² no longer matters at double precision.
constexpr double kLogModeMargin = 40.0;

[[noreturn]] void budget_exceeded(std::vector<Int> partial, std::size_t level, std::uint64_t max_bits) {
  throw BudgetError<std::vector<Int>>(ErrorCode::DigitBudgetExceeded,
                                      "iterate " + std::to_string(level) + " exceeds the " +
                                          std::to_string(max_bits) + "-bit budget",
                                      std::move(partial));
}

}  // namespace

OrbitSlice orbit(const SpecializedMap& map, const Int& start, std::size_t N, std::uint64_t max_bits) {
  OrbitSlice out{map, start, {}};
  out.values.reserve(N + 1);
  out.values.push_back(start);
  for (std::size_t n = 1; n <= N; ++n) {
    Int next = map.phi(out.values.back());
    if (bit_length(next) > max_bits) budget_exceeded(std::move(out.values), n, max_bits);
    out.values.push_back(std::move(next));
  }
  return out;
}

CriticalOrbit critical_orbit(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "critical orbit depth must be at least 1");
  CriticalOrbit out;
  Int x = map.gamma_a;
  // Two levels are always needed for the nondegeneracy flag.
  const std::size_t depth = std::max<std::size_t>(N, 2);
  out.values.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    x = map.phi(x);
    if (bit_length(x) > max_bits) {
      if (n > N) break;
      budget_exceeded(std::move(out.values), n, max_bits);
    }
    out.values.push_back(x);
  }
  out.nondegenerate = out.values.size() >= 2 && out.values[0] != 0 && out.values[1] != 0;
  out.values.resize(std::min(out.values.size(), N));
  return out;
}

bool sigma_orbit_identity(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "identity depth must be at least 1");
  const Int v = map.v();
  Int s = 0;
  Int x = map.gamma_a;
  std::vector<Int> seen;
  for (std::size_t n = 1; n <= N; ++n) {
    s = s * s + v;
    x = map.phi(x);
    if (bit_length(x) > max_bits || bit_length(s) > max_bits) budget_exceeded(std::move(seen), n, max_bits);
    if (s != x - map.gamma_a) return false;
    seen.push_back(x);
  }
  return true;
}

bool is_postcritically_finite(const SpecializedMap& map) {
  const Int v = map.v();
  return v == 0 || v == -1 || v == -2;
}

double normalized_iterate_height(const SpecializedMap& map, const Rational& x, std::uint64_t k) {
  const Int v = map.v();
  Int p = x.num;
  Int q = x.den;
  std::uint64_t n = 0;
  // σ(p/q) = (p² + v q²)/q² stays in lowest terms.
  for (; n < k; ++n) {
    if (bit_length(p) > kExactHeightBits || bit_length(q) > kExactHeightBits) break;
    Int q2 = q * q;
    p = p * p + v * q2;
    q = std::move(q2);
  }
  if (n == k) return height(Rational(p, q)) / std::ldexp(1.0, static_cast<int>(k));

  // Past the exact phase, write h(σ^m x) = log q_m + max(0, log|x_m|) with
  // log q_m = 2^(m-n)·log q_n, and carry every term divided by 2^m.
  const double log_q_norm = log_abs(q) / std::ldexp(1.0, static_cast<int>(n));
  const double log_v = log_abs(v);
  const double sign_v = v < 0 ? -1.0 : 1.0;
  double log_x = log_abs(p) - log_abs(q);
  long double real_x = 0;
  bool log_mode = 2 * log_x > log_v + kLogModeMargin;
  if (!log_mode) {
    long ep = 0, eq = 0;
    double mp = mpz_get_d_2exp(&ep, p.get_mpz_t());
    double mq = mpz_get_d_2exp(&eq, q.get_mpz_t());
    real_x = std::ldexp(static_cast<long double>(mp) / mq, static_cast<int>(ep - eq));
  }
  const long double v_real = v.get_d();
  double log_x_norm = 0;  // log|x_m| / 2^m while in log mode
  if (log_mode) log_x_norm = log_x / std::ldexp(1.0, static_cast<int>(n));
  for (std::uint64_t m = n; m < k; ++m) {
    if (log_mode) {
      const double ratio = sign_v * std::exp(log_v - 2 * log_x);
      const double corr = std::log1p(ratio);
      log_x = 2 * log_x + corr;
      log_x_norm += corr / std::ldexp(1.0, static_cast<int>(m + 1));
    } else {
      real_x = real_x * real_x + v_real;
      const double lx = std::log(std::fabs(static_cast<double>(real_x)));
      if (2 * lx > log_v + kLogModeMargin) {
        log_mode = true;
        log_x = lx;
        log_x_norm = lx / std::ldexp(1.0, static_cast<int>(m + 1));
      }
    }
  }
  if (log_mode) return log_q_norm + std::max(0.0, log_x_norm);
  const double tail = std::log(std::max(1.0L, std::fabs(real_x)));
  return log_q_norm + tail / std::ldexp(1.0, static_cast<int>(k));
}

CanonicalHeight canonical_height(const SpecializedMap& map, const Rational& x, double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const double err = height(map.v()) + std::log(2.0);
  std::uint64_t k = 0;
  while (err / std::ldexp(1.0, static_cast<int>(k)) > eps) {
    if (++k > kMaxHeightDepth)
      throw Error(ErrorCode::DigitBudgetExceeded, "canonical height depth exceeds " + std::to_string(kMaxHeightDepth));
  }
  return CanonicalHeight{normalized_iterate_height(map, x, k), k, eps};
}

bool check_ingram_lower_bound(const SpecializedMap& map, double eps) {
  if (is_postcritically_finite(map))
    throw Error(ErrorCode::PostCriticallyFinite, "0 is preperiodic for v = " + to_string(map.v()));
  const auto est = canonical_height(map, Rational(Int(0)), eps);
  return est.value + eps >= std::max(height(map.v()), 1.0) / 32.0;
}

}  // namespace arbor
