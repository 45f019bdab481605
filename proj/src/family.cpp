#include "family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "error.hpp"
#include "factor.hpp"

namespace arbor {

namespace {

constexpr std::int64_t kUnequalDegreeLevel = 17;
constexpr long kMaxBallRadius = 10'000'000;

// Value of (slope·x + intercept)/(D·x - B) and its limit as x -> ∞.
struct LinearFractional {
  double slope;
  double intercept;

  double at(double x, double D, double B) const { return (slope * x + intercept) / (D * x - B); }
  double asymptote(double D) const { return slope / D; }
};

}  // namespace

SpecializedMap SpecializedMap::from_values(Int gamma_a, Int c_a, Int a) {
  return SpecializedMap{std::move(a), std::move(gamma_a), std::move(c_a)};
}

Int SpecializedMap::phi(const Int& x) const {
  Int t = x - gamma_a;
  return t * t + c_a;
}

Int SpecializedMap::sigma(const Int& x) const { return x * x + v(); }

IntPolynomial SpecializedMap::phi_polynomial() const {
  // (x - g)^2 + c = x^2 - 2g x + g^2 + c
  return IntPolynomial(std::vector<Int>{gamma_a * gamma_a + c_a, -2 * gamma_a, Int(1)});
}

QuadraticFamily::QuadraticFamily(IntPolynomial gamma, IntPolynomial c)
    : gamma_(std::move(gamma)), c_(std::move(c)), diff_(c_ - gamma_) {}

SpecializedMap QuadraticFamily::specialize(const Int& a) const {
  return SpecializedMap{a, gamma_.evaluate(a), c_.evaluate(a)};
}

std::size_t QuadraticFamily::diff_degree() const {
  if (is_isotrivial()) throw Error(ErrorCode::Isotrivial, "c - gamma is constant: the family is isotrivial");
  return diff_.deg();
}

IntPolynomial QuadraticFamily::apply(const IntPolynomial& x) const {
  IntPolynomial shifted = x - gamma_;
  return shifted * shifted + c_;
}

std::int64_t QuadraticFamily::m_phi() const {
  const std::size_t D = diff_degree();
  if (gamma_.degree() != c_.degree()) return kUnequalDegreeLevel;
  // ceil(2·log2(N/D)) with N = 78·G + 9·D is the least k with 2^k·D² >= N².
  const std::size_t G = gamma_.deg();
  Int N = Int(78) * static_cast<unsigned long>(G) + Int(9) * static_cast<unsigned long>(D);
  Int lhs = Int(static_cast<unsigned long>(D)) * static_cast<unsigned long>(D);
  Int rhs = N * N;
  std::int64_t k = 0;
  while (lhs < rhs) {
    lhs <<= 1;
    ++k;
  }
  return k;
}

IntPolynomial QuadraticFamily::exceptional_polynomial() const {
  IntPolynomial first = apply(gamma_);
  IntPolynomial second = apply(first);
  return first * second * diff_ * (diff_ + IntPolynomial{1}) * (diff_ + IntPolynomial{2});
}

double log_coefficient_mass(const IntPolynomial& p) {
  Int mass = 0;
  for (const auto& c : p.coeffs()) mass += abs(c);
  return height(mass);
}

BoundConstants QuadraticFamily::bound_constants() const {
  const std::size_t d = diff_degree();
  BoundConstants out;
  out.A3 = log_coefficient_mass(gamma_);
  out.A4 = log_coefficient_mass(diff_);
  out.A2 = out.A4 + std::log(2.0);
  out.A1 = out.A3 + std::log(2.0);

  // For |a| >= T = ceil(2·d·H/|lc|): |f(a)| >= |lc|·|a|^d / 2, and below T
  // the trivial bound h(f(a)) >= 0 covers d·h(a) <= d·log T.
  Int H = 0;
  for (const auto& c : diff_.coeffs()) H = std::max(H, Int(abs(c)));
  Int lc = abs(diff_.leading());
  Int num = Int(2) * static_cast<unsigned long>(d) * H;
  Int T;
  mpz_cdiv_q(T.get_mpz_t(), num.get_mpz_t(), lc.get_mpz_t());
  out.threshold = std::max(Int(2), T);
  out.B1 = static_cast<double>(d) * log_abs(out.threshold);
  return out;
}

std::vector<Int> QuadraticFamily::exceptional_set(const FactorBudget& budget) const {
  const auto constants = bound_constants();
  const IntPolynomial one{1};
  const IntPolynomial factors[] = {apply(gamma_), apply(apply(gamma_)), diff_, diff_ + one, diff_ + one + one};
  for (const auto& f : factors) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the exceptional polynomial vanishes identically");
  }
  if (constants.threshold > kMaxBallRadius)
    throw Error(ErrorCode::DigitBudgetExceeded,
                "small-height ball |a| <= " + to_string(constants.threshold) + " is too large to enumerate");
  std::set<Int> outside;
  // Roots of a product are the roots of its factors; the factors have far smaller constant terms.
  for (const auto& f : factors) {
    for (auto& r : integer_roots(f, [&](const Int& n) { return divisors(n, budget); })) {
      if (abs(r) > constants.threshold) outside.insert(std::move(r));
    }
  }
  std::vector<Int> out;
  for (auto it = outside.begin(); it != outside.end() && *it < 0; ++it) out.push_back(*it);
  for (Int a = -constants.threshold; a <= constants.threshold; ++a) out.push_back(a);
  for (const auto& r : outside) {
    if (r > 0) out.push_back(r);
  }
  return out;
}

std::vector<Int> QuadraticFamily::exceptional_set() const { return exceptional_set(FactorBudget{}); }

BoundChainInputs QuadraticFamily::bound_chain_inputs() const {
  BoundChainInputs in;
  in.deg_diff = diff_degree();
  in.deg_gamma = gamma_.degree().value_or(0);
  in.gamma_height = poly_height(gamma_);
  in.constants = bound_constants();
  return in;
}

NphiBound QuadraticFamily::nphi_bound(const HallLangConstants& hl) const {
  return arbor::nphi_bound(bound_chain_inputs(), hl);
}

NphiBound nphi_bound(const BoundChainInputs& in, const HallLangConstants& hl) {
  auto finite_nonneg = [](double x) { return std::isfinite(x) && x >= 0; };
  if (!(hl.kappa1 > 0) || !std::isfinite(hl.kappa1) || !finite_nonneg(hl.kappa2) || !finite_nonneg(hl.kappa3))
    throw Error(ErrorCode::InvalidConstants, "Hall-Lang constants need kappa1 > 0 and finite kappa2, kappa3 >= 0");
  if (in.deg_diff == 0) throw Error(ErrorCode::Isotrivial, "deg(c - gamma) must be positive");
  const auto& k = in.constants;
  const double D = static_cast<double>(in.deg_diff);
  const double G = static_cast<double>(in.deg_gamma);

  NphiBound out;
  out.kappa2_prime = hl.kappa2 + G + D;
  out.kappa3_prime = hl.kappa3 + 2 * std::log(3.0) + in.gamma_height + k.A4 + std::log(2.0);

  // Admissible parameters satisfy D·h(a) > B1, i.e. |a| > threshold.
  out.a_min = k.threshold + 1;
  out.x_min = log_abs(out.a_min);

  const LinearFractional rho[4] = {
      {hl.kappa1 * D, hl.kappa1 * k.A2},
      {hl.kappa1 * G, hl.kappa1 * k.A3},
      {hl.kappa1 * G, hl.kappa1 * k.A1},
      {out.kappa2_prime, out.kappa3_prime},
  };
  // A linear-fractional map is monotone on a pole-free ray, so its supremum
  // is attained at the left endpoint or at infinity.
  out.M_phi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    out.M[i] = std::max(rho[i].at(out.x_min, D, k.B1), rho[i].asymptote(D));
    out.M_phi = std::max(out.M_phi, out.M[i]);
  }
  const double level = std::ceil(2 * std::log2(out.M_phi) + 19);
  out.n_phi = 1 + std::max<std::int64_t>(6, static_cast<std::int64_t>(level));
  return out;
}

Int index_bound_exponent(std::uint64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "index bound needs n >= 1");
  if (n > 62) throw Error(ErrorCode::DigitBudgetExceeded, "index bound exponent 2^n overflows for n = " + std::to_string(n));
  return pow2(n) - static_cast<unsigned long>(n) - 1;
}

Int index_bound(std::uint64_t n, std::uint64_t max_bits) {
  Int e = index_bound_exponent(n);
  if (mpz_cmp_ui(e.get_mpz_t(), max_bits) > 0)
    throw Error(ErrorCode::DigitBudgetExceeded,
                "2^" + to_string(e) + " exceeds the " + std::to_string(max_bits) + "-bit budget");
  return pow2(e.get_ui());
}

}  // namespace arbor
