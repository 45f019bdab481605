#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace arbor {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 16;

/// Calls `visit` for every prime in [lo, hi] in increasing order, sieving
/// the range in segments of `segment_size` numbers.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit,
                    std::size_t segment_size = kDefaultSegmentSize);

/// All primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::size_t segment_size = kDefaultSegmentSize);

}  // namespace arbor
