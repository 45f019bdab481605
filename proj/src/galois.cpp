#include "galois.hpp"

#include <algorithm>

#include "error.hpp"

namespace arbor {

std::optional<std::size_t> StabilityReport::first_square_level() const {
  if (squares.empty()) return std::nullopt;
  return squares.front().first;
}

StabilityReport stability_scan(const SpecializedMap& map, std::size_t N, std::uint64_t max_bits) {
  const auto orbit = critical_orbit(map, N, max_bits);
  StabilityReport report;
  report.depth = N;
  for (std::size_t n = 1; n <= N; ++n) {
    if (auto root = perfect_square_root(orbit.level(n))) report.squares.emplace_back(n, std::move(*root));
  }
  return report;
}

Int discriminant_recurrence(const SpecializedMap& map, std::size_t n, std::uint64_t max_bits) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant level must be at least 1");
  const auto orbit = critical_orbit(map, n, max_bits);
  Int delta = abs(discriminant(map.phi_polynomial()));
  for (std::size_t k = 2; k <= n; ++k) {
    if (k >= 63) throw Error(ErrorCode::DigitBudgetExceeded, "2^(2^n) overflows at level " + std::to_string(k));
    delta = delta * delta * abs(orbit.level(k));
    delta <<= (std::uint64_t{1} << k);
    if (bit_length(delta) > max_bits)
      throw Error(ErrorCode::DigitBudgetExceeded,
                  "|Delta_" + std::to_string(k) + "| exceeds the " + std::to_string(max_bits) + "-bit budget");
  }
  return delta;
}

IntPolynomial iterate_polynomial(const SpecializedMap& map, std::size_t n) {
  const IntPolynomial phi = map.phi_polynomial();
  IntPolynomial out = IntPolynomial::variable();
  for (std::size_t k = 0; k < n; ++k) out = phi.compose(out);
  return out;
}

const char* to_string(LevelStatus status) noexcept {
  switch (status) {
    case LevelStatus::CertifiedMaximal: return "CertifiedMaximal";
    case LevelStatus::FailedSquareOverQ: return "FailedSquareOverQ";
    case LevelStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

MaximalityCertificate certify_level(const CriticalOrbit& orbit, std::size_t level) {
  if (level < 1 || level > orbit.values.size())
    throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(level) + " not in the computed orbit");
  MaximalityCertificate cert;
  cert.level = level;
  const Int& value = orbit.level(level);
  if (auto root = perfect_square_root(value)) {
    cert.status = LevelStatus::FailedSquareOverQ;
    cert.witness = std::move(*root);
    return cert;
  }
  // value != 0 here: 0 is a square.
  cert.witness = stripped_cofactor(value, std::span<const Int>(orbit.values).first(level - 1));
  cert.status = cert.witness > 1 && !perfect_square_root(cert.witness) ? LevelStatus::CertifiedMaximal
                                                                         : LevelStatus::Unknown;
  return cert;
}

MaximalityCertificate certify_level_maximal(const SpecializedMap& map, std::size_t level, std::uint64_t max_bits) {
  return certify_level(critical_orbit(map, level, max_bits), level);
}

namespace {

void tally(TowerReport& report, MaximalityCertificate cert) {
  switch (cert.status) {
    case LevelStatus::CertifiedMaximal: ++report.certified; break;
    case LevelStatus::Unknown: ++report.unknown; break;
    case LevelStatus::FailedSquareOverQ: ++report.failed; break;
  }
  report.levels.push_back(std::move(cert));
}

}  // namespace

TowerReport certify_tower(const SpecializedMap& map, std::size_t from, std::size_t to, std::uint64_t max_bits) {
  if (from < 1 || from > to) throw Error(ErrorCode::InvalidArgument, "certify_tower needs 1 <= from <= to");
  TowerReport report;
  CriticalOrbit orbit;
  try {
    orbit = critical_orbit(map, to, max_bits);
  } catch (const BudgetError<std::vector<Int>>& e) {
    CriticalOrbit partial;
    partial.values = e.partial();
    for (std::size_t n = from; n <= partial.values.size(); ++n) tally(report, certify_level(partial, n));
    throw BudgetError<TowerReport>(ErrorCode::DigitBudgetExceeded, e.what(), std::move(report));
  }
  for (std::size_t n = from; n <= to; ++n) tally(report, certify_level(orbit, n));
  return report;
}

CurveModel CurveModel::from_rhs(IntPolynomial rhs, std::size_t level) {
  if (rhs.is_zero() || (rhs.deg() != 3 && rhs.deg() != 5))
    throw Error(ErrorCode::InvalidArgument, "curve right-hand side must have degree 3 or 5");
  if (discriminant(rhs) == 0) throw Error(ErrorCode::SingularModel, "right-hand side " + rhs.to_display("X") + " has a repeated root");
  CurveModel model;
  model.genus = rhs.deg() == 3 ? 1 : 2;
  model.rhs = std::move(rhs);
  model.level = level;
  return model;
}

std::string CurveModel::equation() const { return "Y^2 = " + rhs.to_display("X"); }

CurveModel curve_model(const SpecializedMap& map, std::size_t level, const SquareFreeDecomposition& dec, int genus) {
  if (genus != 1 && genus != 2) throw Error(ErrorCode::InvalidArgument, "genus must be 1 or 2");
  const IntPolynomial g = iterate_polynomial(map, static_cast<std::size_t>(genus));
  const Int scale = (dec.e ? Int(2) : Int(1)) * dec.d;
  IntPolynomial rhs = IntPolynomial(std::vector<Int>{-map.c_a, Int(1)}) * g * scale;
  return CurveModel::from_rhs(std::move(rhs), level);
}

IntegralPoint forced_point(const CurveModel& model, const SpecializedMap& map, std::size_t level,
                           const SquareFreeDecomposition& dec) {
  const std::size_t back = model.genus == 1 ? 1 : 2;
  if (level < back + 1)
    throw Error(ErrorCode::InvalidArgument,
                "the genus " + std::to_string(model.genus) + " point needs level >= " + std::to_string(back + 1));
  // orbit[k] = φ^k(γ), k = 0..level
  std::vector<Int> orbit{map.gamma_a};
  for (std::size_t k = 1; k <= level; ++k) orbit.push_back(map.phi(orbit.back()));
  IntegralPoint pt;
  pt.x = orbit[level - back];
  pt.y = (dec.e ? Int(2) : Int(1)) * dec.d * dec.y * (orbit[level - back - 1] - map.gamma_a);
  return pt;
}

bool verify_forced_point(const CurveModel& model, const SpecializedMap& map, std::size_t level,
                         const SquareFreeDecomposition& dec) {
  const auto pt = forced_point(model, map, level, dec);
  return pt.y * pt.y == model.rhs.evaluate(pt.x);
}

std::vector<PointSearchHit> search_integral_points(const CurveModel& model, std::uint64_t xbound) {
  if (xbound < 1) throw Error(ErrorCode::InvalidArgument, "xbound must be at least 1");
  const double denom = std::max(1.0, poly_height(model.rhs));
  std::vector<PointSearchHit> hits;
  Int x = -Int(std::to_string(xbound));
  const Int hi = -x;
  for (; x <= hi; ++x) {
    auto root = perfect_square_root(model.rhs.evaluate(x));
    if (!root) continue;
    const double ratio = height(x) / denom;
    hits.push_back({x, *root, ratio});
    if (*root != 0) hits.push_back({x, -*root, ratio});
  }
  return hits;
}

}  // namespace arbor
