#pragma once

// Co-order of listings: h ~ g when h(i) < h(j) exactly when g(i) < g(j).
// On finite prefixes this is equality of rank patterns.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enumlab/listing.hpp"

namespace enumlab {

class InjectivityError : public Error {
 public:
  InjectivityError(std::size_t first, std::size_t second);
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// ranks[i] = number of entries strictly smaller than values[i].
struct RankPattern {
  std::vector<std::size_t> ranks;
  friend bool operator==(const RankPattern&, const RankPattern&) = default;
};

RankPattern rank_pattern(const Prefix& p);

struct ViolatingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  bool a_less = false;  // a(i) < a(j)
  bool b_less = false;  // b(i) < b(j)
  friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct CoOrderReport {
  bool co_order = true;
  std::optional<ViolatingPair> violating_pair;
  std::size_t prefix_length = 0;
  friend bool operator==(const CoOrderReport&, const CoOrderReport&) = default;
};

/// Compares rank patterns; on disagreement reports the lexicographically
/// least pair i < j whose comparisons differ.
CoOrderReport coorder_prefix(const Prefix& a, const Prefix& b);

struct WitnessPair {
  std::string listing_a;
  std::string listing_b;
  CoOrderReport report;
};

struct SkippedListing {
  std::string name;
  std::string reason;
};

struct SearchResult {
  std::optional<WitnessPair> witness;
  std::vector<SkippedListing> skipped;
};

/// Bounded search over family_a x family_b, a-major. Listings that cannot be
/// evaluated to length k are skipped and reported. An absent witness says
/// nothing beyond these families at this length.
SearchResult coorder_search(std::span<const Listing> family_a, std::span<const Listing> family_b,
                            std::size_t k);

class InsufficientMembersError : public Error {
 public:
  InsufficientMembersError(std::size_t wanted, std::size_t found, std::uint64_t search_cap);
};

/// The k smallest x < search_cap accepted by the decider, in increasing order.
Prefix increasing_listing(const Program& decider, std::size_t k, std::uint64_t fuel,
                          std::uint64_t search_cap);

}  // namespace enumlab
