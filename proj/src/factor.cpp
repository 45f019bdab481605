#include "factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "error.hpp"
#include "primes.hpp"

namespace arbor {

namespace {

constexpr std::uint64_t kFixedBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr unsigned kRandomRounds = 40;
constexpr std::uint64_t kRhoBatch = 128;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

const std::vector<std::uint64_t>& trial_primes(std::uint64_t bound) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(bound);
  if (it == cache.end()) it = cache.emplace(bound, primes_up_to(bound)).first;
  return it->second;
}

bool miller_rabin_round(const Int& n, const Int& n_minus_1, const Int& odd, std::uint64_t twos, const Int& base) {
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (std::uint64_t r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho on x -> x^2 + c mod n.
// Returns a nontrivial factor, or 0 when this attempt fails.
Int rho_attempt(const Int& n, const Int& c, const Int& start, std::uint64_t& iters_left) {
  auto step = [&](Int& v) {
    v = v * v + c;
    v %= n;
  };
  Int y = start;
  Int x, ys;
  Int q = 1;
  Int g = 1;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      if (iters_left == 0) return 0;
      --iters_left;
      step(y);
    }
    for (std::uint64_t k = 0; k < r && g == 1; k += kRhoBatch) {
      ys = y;
      const std::uint64_t batch = std::min(kRhoBatch, r - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        if (iters_left == 0) return 0;
        --iters_left;
        step(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
    }
    r *= 2;
  }
  if (g == n) {
    // The batch overshot; replay it one step at a time.
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? Int(0) : g;
}

Int find_factor(const Int& n, std::uint64_t budget, std::uint64_t& state) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  if (auto root = perfect_square_root(n)) return *root;
  std::uint64_t iters_left = budget;
  while (iters_left > 0) {
    Int c = from_u64(splitmix(state) % 1'000'003 + 1);
    Int start = from_u64(splitmix(state)) % n;
    Int f = rho_attempt(n, c, start, iters_left);
    if (f != 0) return f;
  }
  return 0;
}

}  // namespace

Int Factorization::reconstruct() const {
  Int r = cofactor;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return sign < 0 ? Int(-r) : r;
}

bool is_probable_prime(const Int& n, std::uint64_t seed) {
  if (n < 2) return false;
  for (std::uint64_t p : kFixedBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int n_minus_1 = n - 1;
  Int odd = n_minus_1;
  std::uint64_t twos = mpz_scan1(odd.get_mpz_t(), 0);
  odd >>= twos;
  for (std::uint64_t b : kFixedBases) {
    if (!miller_rabin_round(n, n_minus_1, odd, twos, from_u64(b))) return false;
  }
  if (bit_length(n) <= 64) return true;
  std::uint64_t state = seed;
  Int span = n - 3;
  for (unsigned i = 0; i < kRandomRounds; ++i) {
    Int limb = from_u64(splitmix(state));
    for (std::size_t bits = 64; bits < bit_length(n) + 64; bits += 64) limb = (limb << 64) + from_u64(splitmix(state));
    Int base = limb % span + 2;
    if (!miller_rabin_round(n, n_minus_1, odd, twos, base)) return false;
  }
  return true;
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> found;

  for (std::uint64_t p : trial_primes(budget.trial_bound)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) found[from_u64(p)] += e;
  }

  Int composite = 1;
  std::vector<Int> pending;
  if (m > 1) pending.push_back(m);
  const Int trial_sq = from_u64(budget.trial_bound) * from_u64(budget.trial_bound);
  std::uint64_t state = budget.seed;
  while (!pending.empty()) {
    Int x = std::move(pending.back());
    pending.pop_back();
    if (x == 1) continue;
    // Survivors of trial division below trial_bound^2 are prime.
    if (x < trial_sq || is_probable_prime(x, budget.seed)) {
      ++found[x];
      continue;
    }
    Int f = find_factor(x, budget.rho_iters, state);
    if (f == 0) {
      composite *= x;
      continue;
    }
    pending.push_back(x / f);
    pending.push_back(std::move(f));
  }

  // Merge composites that share a found prime (rho can split off p while p·q remains).
  for (auto& [p, e] : found) {
    while (composite > 1 && mpz_divisible_p(composite.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(composite.get_mpz_t(), composite.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
  }
  if (composite > 1 && is_probable_prime(composite, budget.seed)) {
    ++found[composite];
    composite = 1;
  }
  for (auto& [p, e] : found) out.factors.emplace_back(p, e);
  out.cofactor = composite;
  out.complete = composite == 1;
  return out;
}

std::vector<Int> divisors(const Int& n, const FactorBudget& budget) {
  Factorization f = factorize(n, budget);
  if (!f.complete)
    throw BudgetError<Factorization>(ErrorCode::IncompleteFactorization,
                                     "factorization of " + to_string(n) + " did not complete", f);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Int SquareFreeDecomposition::value() const { return (e ? Int(2) : Int(1)) * d * y * y; }

SquareFreeDecomposition squarefree_decompose(const Int& n, const FactorBudget& budget) {
  Factorization f = factorize(n, budget);
  if (!f.complete)
    throw BudgetError<Factorization>(ErrorCode::IncompleteFactorization,
                                     "square-free part of " + to_string(n) + " needs a complete factorization", f);
  SquareFreeDecomposition out;
  out.d = f.sign;
  for (const auto& [p, e] : f.factors) {
    Int half;
    mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
    out.y *= half;
    if (p == 2) {
      out.e = e % 2;
    } else if (e % 2) {
      out.d *= p;
    }
  }
  return out;
}

Int stripped_cofactor(const Int& D, std::span<const Int> earlier) {
  if (D == 0) throw Error(ErrorCode::ZeroInput, "stripped cofactor of 0");
  Int R = abs(D);
  mpz_fdiv_q_2exp(R.get_mpz_t(), R.get_mpz_t(), mpz_scan1(R.get_mpz_t(), 0));
  for (const Int& E : earlier) {
    // A zero earlier value is divisible by every prime and absorbs all of R.
    Int g = gcd(R, E);
    while (g > 1) {
      mpz_divexact(R.get_mpz_t(), R.get_mpz_t(), g.get_mpz_t());
      g = gcd(R, g);
    }
  }
  return R;
}

namespace {

void check_level(std::span<const Int> orbit, std::size_t level) {
  if (level < 1 || level > orbit.size())
    throw Error(ErrorCode::InvalidArgument,
                "level " + std::to_string(level) + " outside the computed orbit of length " + std::to_string(orbit.size()));
}

bool divides_earlier(const Int& p, std::span<const Int> orbit, std::size_t level) {
  for (std::size_t j = 0; j + 1 < level; ++j) {
    if (mpz_divisible_p(orbit[j].get_mpz_t(), p.get_mpz_t())) return true;
  }
  return false;
}

}  // namespace

PrimitiveDivisorReport primitive_divisor_exact(std::span<const Int> orbit, std::size_t level,
                                               const FactorBudget& budget) {
  check_level(orbit, level);
  Factorization f = factorize(orbit[level - 1], budget);
  if (!f.complete)
    throw BudgetError<Factorization>(ErrorCode::IncompleteFactorization,
                                     "level " + std::to_string(level) + " value did not factor within budget", f);
  PrimitiveDivisorReport report;
  report.level = level;
  report.method = DivisorMethod::Exact;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 0 || divides_earlier(p, orbit, level)) continue;
    if (p == 2) {
      report.two_is_primitive = true;
    } else {
      report.primes.push_back(p);
    }
  }
  report.certified = !report.primes.empty();
  report.primes_complete = true;
  return report;
}

PrimitiveDivisorReport primitive_divisor_certificate(std::span<const Int> orbit, std::size_t level,
                                                     const FactorBudget& courtesy) {
  check_level(orbit, level);
  PrimitiveDivisorReport report;
  report.level = level;
  report.method = DivisorMethod::Certificate;
  const Int& D = orbit[level - 1];
  if (D == 0) return report;
  report.cofactor = stripped_cofactor(D, orbit.first(level - 1));
  report.certified = report.cofactor > 1 && !perfect_square_root(report.cofactor);
  if (report.cofactor > 1) {
    Factorization f = factorize(report.cofactor, courtesy);
    if (f.complete) {
      for (const auto& [p, e] : f.factors) {
        if (e % 2) report.primes.push_back(p);
      }
      report.primes_complete = true;
    }
  } else {
    report.primes_complete = true;
  }
  return report;
}

bool doubling_check(const SpecializedMap& map, std::uint64_t n, std::uint64_t m, const Int& p) {
  if (m < 1 || m >= n) throw Error(ErrorCode::PreconditionViolated, "doubling check needs 1 <= m < n");
  if (!is_probable_prime(p)) throw Error(ErrorCode::PreconditionViolated, to_string(p) + " is not prime");
  auto step = [&](const Int& x) {
    Int t = x - map.gamma_a;
    Int r = (t * t + map.c_a) % p;
    if (r < 0) r += p;
    return r;
  };
  Int x = map.gamma_a % p;
  Int at_m;
  for (std::uint64_t k = 1; k <= n; ++k) {
    x = step(x);
    if (k == m) at_m = x;
  }
  if (at_m != 0 || x != 0)
    throw Error(ErrorCode::PreconditionViolated, to_string(p) + " does not divide both levels " + std::to_string(m) +
                                                     " and " + std::to_string(n));
  Int z = 0;
  for (std::uint64_t k = 0; k < n - m; ++k) z = step(z);
  return z == 0;
}

}  // namespace arbor
