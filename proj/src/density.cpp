#include "density.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "error.hpp"

namespace arbor {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

// x ↦ (x - g)² + c over Z/p.
class ModularMap {
 public:
  ModularMap(const SpecializedMap& map, std::uint64_t p)
      : p_(p), g_(mod_u64(map.gamma_a, p)), c_(mod_u64(map.c_a, p)) {}

  std::uint64_t operator()(std::uint64_t x) const {
    const std::uint64_t t = x >= g_ ? x - g_ : x + (p_ - g_);
    const auto sq = static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * t % p_);
    const std::uint64_t s = sq + c_;
    return s >= p_ || s < sq ? s - p_ : s;
  }

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::uint64_t c_;
};

void check_modulus(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) throw Error(ErrorCode::InvalidArgument, "modulus must lie in [2, 2^63)");
}

}  // namespace

OrbitCycle orbit_cycle_mod_p(const SpecializedMap& map, const Int& b, std::uint64_t p) {
  check_modulus(p);
  const ModularMap f(map, p);
  const std::uint64_t x0 = mod_u64(b, p);
  std::uint64_t power = 1, lam = 1;
  std::uint64_t tortoise = x0, hare = f(x0);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = f(hare);
    ++lam;
  }
  std::uint64_t mu = 0;
  tortoise = hare = x0;
  for (std::uint64_t i = 0; i < lam; ++i) hare = f(hare);
  while (tortoise != hare) {
    tortoise = f(tortoise);
    hare = f(hare);
    ++mu;
  }
  return {mu, lam};
}

bool orbit_hits_zero_mod_p(const SpecializedMap& map, const Int& b, std::uint64_t p) {
  check_modulus(p);
  const ModularMap f(map, p);
  // Brent's search walks the hare through x_1, x_2, ... and stops at the
  // first repeat x_K = x_j (j < K), so K >= tail + cycle: every value of
  // the orbit past n = 0 has been visited by then.
  std::uint64_t power = 1, lam = 1;
  std::uint64_t tortoise = mod_u64(b, p);
  std::uint64_t hare = f(tortoise);
  if (hare == 0) return true;
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = f(hare);
    ++lam;
    if (hare == 0) return true;
  }
  return false;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t X) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 10; t <= X; t *= 10) {
    out.push_back(t);
    if (t > X / 10) break;
  }
  if (out.empty() || out.back() != X) out.push_back(X);
  return out;
}

DensityCurve density_curve(const SpecializedMap& map, const Int& b, std::uint64_t X,
                           std::vector<std::uint64_t> checkpoints, const DensityOptions& options) {
  if (X < 2) throw Error(ErrorCode::InvalidArgument, "density bound X must be at least 2");
  if (X >= kMaxModulus) throw Error(ErrorCode::InvalidArgument, "density bound X must be below 2^63");
  if (options.shards == 0) throw Error(ErrorCode::InvalidArgument, "shard count must be positive");
  if (checkpoints.empty()) checkpoints = default_checkpoints(X);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (checkpoints.front() < 2 || checkpoints.back() > X)
    throw Error(ErrorCode::InvalidArgument, "checkpoints must lie in [2, X]");

  struct ShardResult {
    std::vector<DensityCheckpoint> counts;  // contributions of this shard, per checkpoint
    std::vector<std::uint64_t> members;
  };
  const std::size_t k = options.shards;
  std::vector<ShardResult> results(k);
  const std::uint64_t span = X - 1;  // numbers 2..X

  auto run_shard = [&](std::size_t i) {
    const std::uint64_t lo = 2 + span * i / k;
    const std::uint64_t hi = 1 + span * (i + 1) / k;
    ShardResult& res = results[i];
    res.counts.resize(checkpoints.size());
    // First checkpoint index whose bound reaches the current prime.
    std::size_t first = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo) - checkpoints.begin();
    std::vector<std::uint64_t> tested(checkpoints.size() + 1, 0), hits(checkpoints.size() + 1, 0);
    for_each_prime(
        lo, hi,
        [&](std::uint64_t p) {
          while (first < checkpoints.size() && checkpoints[first] < p) ++first;
          const bool member = orbit_hits_zero_mod_p(map, b, p);
          ++tested[first];
          if (member) {
            ++hits[first];
            if (options.collect_members) res.members.push_back(p);
          }
        },
        options.segment_size);
    // Prefix sums turn per-bucket tallies into counts of primes <= each checkpoint.
    std::uint64_t t = 0, m = 0;
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
      t += tested[j];
      m += hits[j];
      res.counts[j] = {checkpoints[j], t, m};
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, k));
  if (workers == 1) {
    for (std::size_t i = 0; i < k; ++i) run_shard(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < k; i = next++) run_shard(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  DensityCurve curve;
  curve.b = b;
  curve.checkpoints.resize(checkpoints.size());
  for (std::size_t j = 0; j < checkpoints.size(); ++j) curve.checkpoints[j].X = checkpoints[j];
  for (const auto& res : results) {
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
      curve.checkpoints[j].primes_tested += res.counts[j].primes_tested;
      curve.checkpoints[j].members += res.counts[j].members;
    }
    curve.member_primes.insert(curve.member_primes.end(), res.members.begin(), res.members.end());
  }
  return curve;
}

std::string to_csv(const DensityCurve& curve) {
  std::string out = "X,primes_tested,members,proportion\n";
  char buf[128];
  for (const auto& c : curve.checkpoints) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%.10f\n", static_cast<unsigned long long>(c.X),
                  static_cast<unsigned long long>(c.primes_tested), static_cast<unsigned long long>(c.members),
                  c.proportion());
    out += buf;
  }
  return out;
}

}  // namespace arbor
