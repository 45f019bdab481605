#include "primes.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace arbor {

namespace {

std::uint64_t floor_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain sieve for the base primes up to sqrt(hi).
std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit,
                    std::size_t segment_size) {
  if (segment_size == 0) throw Error(ErrorCode::InvalidArgument, "segment size must be positive");
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return;
  const auto base = small_primes(floor_sqrt(hi));
  std::vector<char> sieve(segment_size);

  for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
    const std::uint64_t seg_hi = std::min<std::uint64_t>(hi, seg_lo + segment_size - 1);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p) sieve[j - seg_lo] = 0;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n) {
      if (sieve[n - seg_lo]) visit(n);
    }
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::size_t segment_size) {
  std::vector<std::uint64_t> out;
  for_each_prime(2, limit, [&](std::uint64_t p) { out.push_back(p); }, segment_size);
  return out;
}

}  // namespace arbor
