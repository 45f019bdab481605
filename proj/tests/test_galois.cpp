#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "galois.hpp"
#include "oracles.hpp"

using arbor::Int;
using arbor::IntPolynomial;
using arbor::LevelStatus;
using arbor::SpecializedMap;

namespace {

SpecializedMap sigma_map(long v) { return SpecializedMap::from_values(0, v); }

arbor::ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const arbor::Error& e) {
    return e.code();
  }
  FAIL("expected an arbor::Error");
  return arbor::ErrorCode::InvalidArgument;
}

// Level status computed from full factorizations of the orbit values.
LevelStatus status_by_factoring(const std::vector<Int>& values, std::size_t n) {
  const Int& D = values[n - 1];
  if (D >= 0 && arbor::isqrt(D) * arbor::isqrt(D) == D) return LevelStatus::FailedSquareOverQ;
  bool odd_primitive = false;
  for (const auto& [p, e] : oracle::trial_factor(abs(D))) {
    if (p == 2) continue;
    bool earlier = false;
    for (std::size_t j = 0; j + 1 < n; ++j) earlier = earlier || values[j] % p == 0;
    if (!earlier && e % 2 == 1) odd_primitive = true;
  }
  return odd_primitive ? LevelStatus::CertifiedMaximal : LevelStatus::Unknown;
}

}  // namespace

TEST_CASE("stability scan") {
  auto one = arbor::stability_scan(sigma_map(1), 6);
  CHECK(one.first_square_level() == 1u);
  CHECK(one.squares.front().second == 1);

  auto two = arbor::stability_scan(sigma_map(2), 6);
  CHECK(two.no_square());
  CHECK(two.depth == 6);

  // -16, 240, 57584, ... scanned directly
  auto neg = arbor::stability_scan(sigma_map(-16), 5);
  Int x = 0;
  std::vector<std::size_t> expect;
  for (std::size_t n = 1; n <= 5; ++n) {
    x = x * x - 16;
    if (x >= 0 && arbor::isqrt(x) * arbor::isqrt(x) == x) expect.push_back(n);
  }
  std::vector<std::size_t> got;
  for (const auto& [n, r] : neg.squares) got.push_back(n);
  CHECK(got == expect);

  // x² - 2 at 0: -2, 2, 2, ... never a square; x² + 0: 0 is a square
  CHECK(arbor::stability_scan(sigma_map(-2), 4).no_square());
  CHECK(arbor::stability_scan(sigma_map(0), 2).squares.size() == 2);
}

TEST_CASE("discriminant recurrence examples") {
  auto m = sigma_map(1);
  CHECK(arbor::discriminant_recurrence(m, 1) == 4);
  CHECK(arbor::discriminant_recurrence(m, 2) == 512);
  CHECK(arbor::discriminant_recurrence(m, 3) == Int(512) * 512 * 256 * 5);
  CHECK(abs(arbor::discriminant(arbor::iterate_polynomial(m, 3))) == Int(512) * 512 * 256 * 5);
  CHECK(arbor::iterate_polynomial(m, 2) == IntPolynomial{2, 0, 2, 0, 1});
}

TEST_CASE("discriminant recurrence matches direct discriminants") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = SpecializedMap::from_values(oracle::random_signed(rng, 50), oracle::random_signed(rng, 50));
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(arbor::discriminant_recurrence(m, n) == abs(arbor::discriminant(arbor::iterate_polynomial(m, n))));
    }
  }
}

TEST_CASE("level certificates") {
  auto c = arbor::certify_level_maximal(sigma_map(2), 3);
  CHECK(c.status == LevelStatus::CertifiedMaximal);
  CHECK(c.witness == 19);

  auto f = arbor::certify_level_maximal(sigma_map(1), 1);
  CHECK(f.status == LevelStatus::FailedSquareOverQ);
  CHECK(f.witness == 1);

  // level 1 value 8 = 2·2²
  auto u = arbor::certify_level_maximal(sigma_map(8), 1);
  CHECK(u.status == LevelStatus::Unknown);
  CHECK(u.witness == 1);
  // level 1 value -18 = -2·3²
  CHECK(arbor::certify_level_maximal(sigma_map(-18), 1).status == LevelStatus::Unknown);
}

TEST_CASE("tower for x^2 + 2") {
  auto t = arbor::certify_tower(sigma_map(2), 1, 6);
  REQUIRE(t.levels.size() == 6);
  const auto values = arbor::critical_orbit(sigma_map(2), 6).values;
  for (std::size_t n = 1; n <= 6; ++n) CHECK(t.levels[n - 1].status == status_by_factoring(values, n));
  CHECK(t.levels[0].status == LevelStatus::Unknown);
  std::vector<Int> witnesses;
  for (std::size_t n = 2; n <= 6; ++n) witnesses.push_back(t.levels[n - 1].witness);
  CHECK(witnesses == std::vector<Int>{3, 19, 241, 1045459, Int("38350334059")});
  CHECK(t.certified == 5);
  CHECK(t.unknown == 1);
  CHECK(t.failed == 0);
}

TEST_CASE("tower for x^2 + 1 and a fixed critical value") {
  auto t = arbor::certify_tower(sigma_map(1), 1, 3);
  CHECK(t.levels[0].status == LevelStatus::FailedSquareOverQ);
  CHECK(t.failed == 1);

  auto fixed = arbor::QuadraticFamily(IntPolynomial{0, 1}, IntPolynomial{0, 1}).specialize(5);
  auto tf = arbor::certify_tower(fixed, 1, 5);
  CHECK(tf.levels[0].status == LevelStatus::CertifiedMaximal);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(tf.levels[n - 1].status == LevelStatus::Unknown);

  CHECK(code_of([] { (void)arbor::certify_tower(sigma_map(2), 3, 2); }) == arbor::ErrorCode::InvalidArgument);
}

TEST_CASE("tower budget error keeps finished levels") {
  try {
    (void)arbor::certify_tower(sigma_map(3), 2, 30, 1000);
    FAIL("expected a budget error");
  } catch (const arbor::BudgetError<arbor::TowerReport>& e) {
    const auto& partial = e.partial();
    REQUIRE_FALSE(partial.levels.empty());
    CHECK(partial.levels.front().level == 2);
    CHECK(partial.levels.size() < 29);
    auto full = arbor::certify_tower(sigma_map(3), 2, 1 + partial.levels.size());
    CHECK(full.levels.size() == partial.levels.size());
    for (std::size_t i = 0; i < full.levels.size(); ++i) CHECK(full.levels[i].witness == partial.levels[i].witness);
  }
}

TEST_CASE("certificates agree with factoring across maps") {
  std::mt19937_64 rng(42);
  int certified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto m = SpecializedMap::from_values(oracle::random_signed(rng, 30), oracle::random_signed(rng, 30));
    const auto orbit = arbor::critical_orbit(m, 4);
    bool small = true;
    for (const auto& x : orbit.values) small = small && arbor::bit_length(x) <= 50;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto cert = arbor::certify_level(orbit, n);
      if (cert.status == LevelStatus::FailedSquareOverQ) {
        auto scan = arbor::stability_scan(m, n);
        REQUIRE_FALSE(scan.squares.empty());
        CHECK(scan.squares.back().first == n);
      }
      if (!small || orbit.level(n) == 0) continue;
      const auto expect = status_by_factoring(orbit.values, n);
      // the certificate is one-sided: it never claims more than factoring shows
      if (cert.status == LevelStatus::CertifiedMaximal) {
        ++certified;
        CHECK(expect == LevelStatus::CertifiedMaximal);
      }
      if (expect == LevelStatus::FailedSquareOverQ) CHECK(cert.status == LevelStatus::FailedSquareOverQ);
    }
  }
  CHECK(certified > 100);
}

TEST_CASE("curve models") {
  auto m = sigma_map(1);
  auto dec = arbor::squarefree_decompose(Int(26));
  const IntPolynomial X = IntPolynomial::variable();
  const IntPolynomial one{1};
  auto g1 = arbor::curve_model(m, 4, dec, 1);
  CHECK(g1.genus == 1);
  CHECK(g1.level == 4);
  CHECK(g1.rhs == Int(26) * (X - one) * (X * X + one));
  CHECK(g1.equation() == "Y^2 = 26*X^3 - 26*X^2 + 26*X - 26");

  auto g2 = arbor::curve_model(m, 4, dec, 2);
  CHECK(g2.genus == 2);
  CHECK(g2.rhs == Int(26) * (X - one) * ((X * X + one) * (X * X + one) + one));

  CHECK(code_of([&] { (void)arbor::curve_model(sigma_map(0), 3, dec, 1); }) == arbor::ErrorCode::SingularModel);
  CHECK(code_of([&] { (void)arbor::curve_model(m, 4, dec, 3); }) == arbor::ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)arbor::CurveModel::from_rhs(IntPolynomial{0, 0, 0, 1}); }) == arbor::ErrorCode::SingularModel);
}

TEST_CASE("forced points") {
  auto m = sigma_map(1);
  auto dec = arbor::squarefree_decompose(Int(26));
  auto model = arbor::curve_model(m, 4, dec, 1);
  auto pt = arbor::forced_point(model, m, 4, dec);
  CHECK(pt.x == 5);
  CHECK(pt.y == 52);
  CHECK(arbor::verify_forced_point(model, m, 4, dec));

  auto dec2 = arbor::squarefree_decompose(Int(2));
  auto model2 = arbor::curve_model(m, 2, dec2, 1);
  auto pt2 = arbor::forced_point(model2, m, 2, dec2);
  CHECK(pt2.x == 1);
  CHECK(pt2.y == 0);
  CHECK(arbor::verify_forced_point(model2, m, 2, dec2));

  auto two = sigma_map(2);
  const Int v5 = arbor::critical_orbit(two, 5).level(5);
  auto dec5 = arbor::squarefree_decompose(v5);
  CHECK(arbor::verify_forced_point(arbor::curve_model(two, 5, dec5, 1), two, 5, dec5));
  auto genus2 = arbor::curve_model(two, 5, dec5, 2);
  CHECK(arbor::verify_forced_point(genus2, two, 5, dec5));
  CHECK(arbor::forced_point(genus2, two, 5, dec5).x == 38);
}

TEST_CASE("forced points on the corpus") {
  const arbor::FactorBudget budget{100'000, 100'000, 1};
  int verified = 0;
  for (const auto& e : corpus::maps()) {
    const auto m = corpus::map(e);
    const auto orbit = arbor::critical_orbit(m, 10);
    if (!orbit.nondegenerate) continue;
    for (std::size_t n = 2; n <= 10; ++n) {
      if (orbit.level(n) == 0) continue;
      arbor::SquareFreeDecomposition dec;
      try {
        dec = arbor::squarefree_decompose(orbit.level(n), budget);
      } catch (const arbor::BudgetError<arbor::Factorization>&) {
        continue;
      }
      CAPTURE(e.name);
      CAPTURE(n);
      for (int genus : {1, 2}) {
        if (genus == 2 && n < 3) continue;
        auto model = arbor::curve_model(m, n, dec, genus);
        CHECK(arbor::verify_forced_point(model, m, n, dec));
        ++verified;
      }
    }
  }
  CHECK(verified >= 40);
}

TEST_CASE("integral point search") {
  auto m = sigma_map(1);
  auto dec = arbor::squarefree_decompose(Int(26));
  auto model = arbor::curve_model(m, 4, dec, 1);
  auto hits = arbor::search_integral_points(model, 5);
  std::vector<std::pair<Int, Int>> pts;
  for (const auto& h : hits) pts.emplace_back(h.x, h.y);
  CHECK(std::find(pts.begin(), pts.end(), std::pair<Int, Int>(5, 52)) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), std::pair<Int, Int>(5, -52)) != pts.end());
  CHECK(std::find(pts.begin(), pts.end(), std::pair<Int, Int>(1, 0)) != pts.end());
  for (const auto& h : hits) CHECK(h.y * h.y == model.rhs.evaluate(h.x));
}

TEST_CASE("integral point search matches a double loop") {
  std::mt19937_64 rng(43);
  int curves = 0;
  while (curves < 12) {
    // (X - r)(X² + sX + t) style cubics with small coefficients, and a few random ones
    IntPolynomial rhs{static_cast<long>(oracle::random_signed(rng, 20).get_si()),
                      static_cast<long>(oracle::random_signed(rng, 20).get_si()),
                      static_cast<long>(oracle::random_signed(rng, 5).get_si()), 1};
    if (arbor::discriminant(rhs) == 0) continue;
    ++curves;
    auto model = arbor::CurveModel::from_rhs(rhs);
    const long bound = 150;
    std::vector<std::pair<Int, Int>> expect;
    for (long x = -bound; x <= bound; ++x) {
      const Int val = rhs.evaluate(x);
      for (long y = 0; Int(y) * y <= val; ++y) {
        if (Int(y) * y == val) {
          expect.emplace_back(x, y);
          if (y) expect.emplace_back(x, -y);
        }
      }
    }
    std::vector<std::pair<Int, Int>> got;
    for (const auto& h : arbor::search_integral_points(model, bound)) got.emplace_back(h.x, h.y);
    CHECK(got == expect);
  }
}

TEST_CASE("integral point search at xbound 10^4") {
  // y² = x³ - 2x + 5
  auto model = arbor::CurveModel::from_rhs(IntPolynomial{5, -2, 0, 1});
  std::vector<std::pair<Int, Int>> expect;
  for (long x = -10'000; x <= 10'000; ++x) {
    const Int val = model.rhs.evaluate(x);
    if (val < 0) continue;
    long y = static_cast<long>(std::sqrt(val.get_d()));
    while (Int(y) * y > val) --y;
    while (Int(y + 1) * (y + 1) <= val) ++y;
    if (Int(y) * y == val) {
      expect.emplace_back(x, y);
      if (y) expect.emplace_back(x, -y);
    }
  }
  std::vector<std::pair<Int, Int>> got;
  for (const auto& h : arbor::search_integral_points(model, 10'000)) got.emplace_back(h.x, h.y);
  CHECK(got == expect);
  CHECK_FALSE(got.empty());
}

TEST_CASE("large fixture: full through level 8, square at level 9") {
  const Int a("88255775491812351975604");
  const auto m = arbor::QuadraticFamily(IntPolynomial{0, 1}, IntPolynomial{1, 1}).specialize(a);
  const auto tower = arbor::certify_tower(m, 1, 9);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(tower.levels[n - 1].status == LevelStatus::CertifiedMaximal);
  CHECK(tower.levels[8].status == LevelStatus::FailedSquareOverQ);
  const Int root = tower.levels[8].witness;
  CHECK(root * root == arbor::critical_orbit(m, 9).level(9));
  CHECK(2 * root == a + 2);
  CHECK(arbor::stability_scan(m, 9).first_square_level() == 9u);
}
