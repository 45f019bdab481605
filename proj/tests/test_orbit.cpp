#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "orbit.hpp"

using arbor::Int;
using arbor::Rational;
using arbor::SpecializedMap;

namespace {

const char* kLargeParameter = "88255775491812351975604";

SpecializedMap sigma_map(long v) { return SpecializedMap::from_values(0, v); }

std::vector<Int> ints(std::initializer_list<long> xs) { return std::vector<Int>(xs.begin(), xs.end()); }

// h(σ^k(x))/2^k by exact rational iteration, no shortcuts.
double exact_normalized_height(long v, Rational x, int k) {
  Int p = x.num, q = x.den;
  for (int i = 0; i < k; ++i) {
    Int q2 = q * q;
    p = p * p + Int(v) * q2;
    q = q2;
  }
  return arbor::height(Rational(p, q)) / std::ldexp(1.0, k);
}

}  // namespace

TEST_CASE("orbit examples") {
  auto fermat = SpecializedMap::from_values(1, 1);
  CHECK(arbor::orbit(fermat, 3, 4).values == ints({3, 5, 17, 257, 65537}));
  CHECK(arbor::orbit(sigma_map(0), 1, 10).values == std::vector<Int>(11, Int(1)));
  CHECK(arbor::orbit(sigma_map(1), 0, 6).values == ints({0, 1, 2, 5, 26, 677, 458330}));
  CHECK(arbor::orbit(sigma_map(1), 7, 0).values == ints({7}));
}

TEST_CASE("orbit budget error keeps the computed prefix") {
  try {
    (void)arbor::orbit(sigma_map(1), 0, 40, 64);
    FAIL("expected a budget error");
  } catch (const arbor::BudgetError<std::vector<Int>>& e) {
    CHECK(e.code() == arbor::ErrorCode::DigitBudgetExceeded);
    const auto& partial = e.partial();
    REQUIRE(partial.size() >= 7);
    CHECK(std::vector<Int>(partial.begin(), partial.begin() + 7) == ints({0, 1, 2, 5, 26, 677, 458330}));
    for (const auto& x : partial) CHECK(arbor::bit_length(x) <= 64);
  }
}

TEST_CASE("critical orbit examples") {
  auto F = arbor::QuadraticFamily(arbor::IntPolynomial{0}, arbor::IntPolynomial{0, 1});
  auto orb = arbor::critical_orbit(F.specialize(1), 4);
  CHECK(orb.values == ints({1, 2, 5, 26}));
  CHECK(orb.level(4) == 26);
  CHECK(orb.nondegenerate);

  auto fixed = arbor::QuadraticFamily(arbor::IntPolynomial{0, 1}, arbor::IntPolynomial{0, 1}).specialize(5);
  CHECK(arbor::critical_orbit(fixed, 5).values == ints({5, 5, 5, 5, 5}));

  // φ(γ) = 0 for x² + 0
  CHECK_FALSE(arbor::critical_orbit(sigma_map(0), 3).nondegenerate);
  // φ²(γ) = 0 for x² - 1
  CHECK_FALSE(arbor::critical_orbit(sigma_map(-1), 1).nondegenerate);
}

TEST_CASE("large critical orbit") {
  auto F = arbor::QuadraticFamily(arbor::IntPolynomial{0, 1}, arbor::IntPolynomial{1, 1});
  const Int a(kLargeParameter);
  auto orb = arbor::critical_orbit(F.specialize(a), 6);
  Int d = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    d = d * d + 1;
    CHECK(orb.level(n) - a == d);
  }
  CHECK(orb.level(6) - a == 458330);
}

TEST_CASE("sigma orbit identity") {
  auto F = arbor::QuadraticFamily(arbor::IntPolynomial{0, 1}, arbor::IntPolynomial{1, 0, 1});
  CHECK(arbor::sigma_orbit_identity(F.specialize(3), 6));
  auto shifted = arbor::QuadraticFamily(arbor::IntPolynomial{0, 1}, arbor::IntPolynomial{1, 1});
  CHECK(arbor::sigma_orbit_identity(shifted.specialize(Int(kLargeParameter)), 5));
  for (const auto& e : corpus::maps()) CHECK(arbor::sigma_orbit_identity(corpus::map(e), 8));
}

TEST_CASE("post-critical finiteness") {
  CHECK(arbor::is_postcritically_finite(sigma_map(-1)));
  CHECK(arbor::is_postcritically_finite(sigma_map(-2)));
  CHECK(arbor::is_postcritically_finite(sigma_map(0)));
  CHECK_FALSE(arbor::is_postcritically_finite(sigma_map(1)));
  CHECK_FALSE(arbor::is_postcritically_finite(sigma_map(-3)));
}

TEST_CASE("post-critical finiteness matches orbit repetition") {
  for (long v = -1000; v <= 1000; ++v) {
    std::vector<Int> seen{0};
    Int x = 0;
    bool repeats = false;
    for (int step = 0; step < 4 && !repeats; ++step) {
      x = x * x + v;
      repeats = std::find(seen.begin(), seen.end(), x) != seen.end();
      seen.push_back(x);
    }
    CAPTURE(v);
    CHECK(arbor::is_postcritically_finite(sigma_map(v)) == repeats);
  }
}

TEST_CASE("growth law") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const long v = static_cast<long>(oracle::random_signed(rng, 1'000'000).get_si());
    auto m = sigma_map(v);
    if (arbor::is_postcritically_finite(m)) continue;
    const auto orb = arbor::orbit(m, 0, 12).values;
    const std::size_t guard = std::max<std::size_t>(8, arbor::bit_length(Int(v)) + 2);
    for (std::size_t n = 0; n + 1 < orb.size(); ++n) {
      const std::size_t b = arbor::bit_length(orb[n]);
      if (b <= guard) continue;
      const std::size_t next = arbor::bit_length(orb[n + 1]);
      CHECK(next + 2 >= 2 * b);
      CHECK(next <= 2 * b + 2);
    }
  }
}

TEST_CASE("canonical height of preperiodic points") {
  CHECK(arbor::canonical_height(sigma_map(0), Rational(Int(0)), 1e-6).value == 0.0);
  auto h = arbor::canonical_height(sigma_map(-1), Rational(Int(0)), 1e-6);
  CHECK(std::fabs(h.value) <= 1e-6);
  auto h2 = arbor::canonical_height(sigma_map(-2), Rational(Int(2)), 1e-6);
  CHECK(std::fabs(h2.value) <= 1e-6);
}

TEST_CASE("canonical height agrees with exact iteration") {
  for (long v : {1L, 2L, -3L, 7L, -100L, 1000L}) {
    for (Rational x : {Rational(Int(0)), Rational(Int(3), Int(2)), Rational(Int(-5), Int(7))}) {
      auto est = arbor::canonical_height(sigma_map(v), x, 1e-3);
      CAPTURE(v);
      CHECK(est.depth <= 20);
      const double exact = exact_normalized_height(v, x, static_cast<int>(est.depth));
      CHECK(est.value == doctest::Approx(exact).epsilon(1e-9));
      const double deeper = exact_normalized_height(v, x, static_cast<int>(est.depth) + 1);
      CHECK(std::fabs(est.value - deeper) <= 1e-3);
    }
  }
}

TEST_CASE("canonical height deep iteration is self-consistent") {
  for (long v : {1L, 5L, -17L, 999L}) {
    auto m = sigma_map(v);
    const auto fine = arbor::canonical_height(m, Rational(Int(0)), 1e-6);
    const auto coarse = arbor::canonical_height(m, Rational(Int(0)), 1e-3);
    CHECK(std::fabs(fine.value - coarse.value) <= 1e-3 + 1e-6);
    const double next = arbor::normalized_iterate_height(m, Rational(Int(0)), fine.depth + 1);
    CHECK(std::fabs(fine.value - next) <= 1e-6);
  }
}

TEST_CASE("canonical height doubles under the map") {
  std::mt19937_64 rng(22);
  const double eps = 1e-5;
  for (int trial = 0; trial < 60; ++trial) {
    const long v = static_cast<long>(oracle::random_signed(rng, 10'000).get_si());
    auto m = sigma_map(v);
    Int num = oracle::random_signed(rng, 1000);
    Int den = oracle::random_int(rng, 6) + 1;
    Rational x(num, den);
    Rational sx(x.num * x.num + Int(v) * x.den * x.den, x.den * x.den);
    const double h = arbor::canonical_height(m, x, eps).value;
    const double hs = arbor::canonical_height(m, sx, eps).value;
    CAPTURE(v);
    CHECK(std::fabs(hs - 2 * h) <= 3 * eps);
  }
}

TEST_CASE("Ingram lower bound") {
  CHECK(arbor::check_ingram_lower_bound(sigma_map(1)));
  CHECK(arbor::check_ingram_lower_bound(sigma_map(1'000'000)));
  CHECK(arbor::check_ingram_lower_bound(sigma_map(-3)));
  try {
    (void)arbor::check_ingram_lower_bound(sigma_map(-1));
    FAIL("expected PostCriticallyFinite");
  } catch (const arbor::Error& e) {
    CHECK(e.code() == arbor::ErrorCode::PostCriticallyFinite);
  }
  const double h1 = arbor::canonical_height(sigma_map(1), Rational(Int(0)), 1e-6).value;
  CHECK(h1 == doctest::Approx(exact_normalized_height(1, Rational(Int(0)), 20)).epsilon(1e-5));
  const double hbig = arbor::canonical_height(sigma_map(1'000'000), Rational(Int(0)), 1e-6).value;
  CHECK(hbig == doctest::Approx(std::log(1e6) / 2).epsilon(1e-3));
}
