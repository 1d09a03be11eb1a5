#pragma once

// Enumeration speed. Both comparisons are evidence within the sampled
// horizon only; nothing here extrapolates past the last profiled input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "enumlab/listing.hpp"

namespace enumlab {

struct StrictReport {
  bool strictly_more_rapid = true;
  std::optional<std::size_t> first_failure;  // least n with th[n] >= tg[n]
  std::size_t horizon = 0;
  friend bool operator==(const StrictReport&, const StrictReport&) = default;
};

/// Pointwise: th[n] < tg[n] for every sampled n.
StrictReport strictly_more_rapid(const TimeProfile& th, const TimeProfile& tg);

struct EventualReport {
  // Sums are counted from 1: S(n) = t[0] + ... + t[n - 1]. witness_m is the
  // least M with S_h(n) < S_g(n) for every M < n <= horizon, so M = 0 covers
  // the whole profile. Absent when the inequality fails at n = horizon.
  std::optional<std::size_t> witness_m;
  std::size_t horizon = 0;
  friend bool operator==(const EventualReport&, const EventualReport&) = default;
};

/// Eventual cumulative dominance within the horizon.
EventualReport more_rapid(const TimeProfile& th, const TimeProfile& tg);

/// Running sums of a profile, S(n) = steps[0] + ... + steps[n].
std::vector<std::uint64_t> cumulative(const TimeProfile& t);

}  // namespace enumlab
