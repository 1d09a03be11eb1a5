#include "enumlab/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace enumlab {

InjectivityError::InjectivityError(std::size_t first, std::size_t second)
    : Error("prefix is not injective: positions " + std::to_string(first) + " and " +
            std::to_string(second) + " hold the same value"),
      first_(first),
      second_(second) {}

RankPattern rank_pattern(const Prefix& p) {
  const auto& v = p.values;
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });

  RankPattern out;
  out.ranks.resize(v.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && v[order[r]] == v[order[r - 1]]) {
      // Report the earliest repeat in input order rather than in sorted order.
      std::map<Natural, std::size_t> seen;
      for (std::size_t j = 0; j < v.size(); ++j) {
        auto [it, inserted] = seen.emplace(v[j], j);
        if (!inserted) throw InjectivityError(it->second, j);
      }
    }
    out.ranks[order[r]] = r;
  }
  return out;
}

CoOrderReport coorder_prefix(const Prefix& a, const Prefix& b) {
  if (a.size() != b.size()) {
    throw Error("co-order comparison needs equal lengths, got " + std::to_string(a.size()) +
                " and " + std::to_string(b.size()));
  }
  auto ra = rank_pattern(a);
  auto rb = rank_pattern(b);
  CoOrderReport report;
  report.prefix_length = a.size();
  if (ra == rb) return report;

  report.co_order = false;
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool a_less = ra.ranks[i] < ra.ranks[j];
      bool b_less = rb.ranks[i] < rb.ranks[j];
      if (a_less != b_less) {
        report.violating_pair = ViolatingPair{i, j, a_less, b_less};
        return report;
      }
    }
  }
  return report;  // unreachable for permutations that differ
}

namespace {

std::vector<std::optional<Prefix>> sample_family(std::span<const Listing> family, std::size_t k,
                                                 std::vector<SkippedListing>& skipped) {
  std::vector<std::optional<Prefix>> out;
  out.reserve(family.size());
  for (const auto& l : family) {
    try {
      auto p = prefix(l, k);
      rank_pattern(p);
      out.emplace_back(std::move(p));
    } catch (const Error& e) {
      skipped.push_back({l.name, e.what()});
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace

SearchResult coorder_search(std::span<const Listing> family_a, std::span<const Listing> family_b,
                            std::size_t k) {
  SearchResult result;
  auto pa = sample_family(family_a, k, result.skipped);
  auto pb = sample_family(family_b, k, result.skipped);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!pa[i]) continue;
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (!pb[j]) continue;
      auto report = coorder_prefix(*pa[i], *pb[j]);
      if (report.co_order) {
        result.witness = WitnessPair{family_a[i].name, family_b[j].name, report};
        return result;
      }
    }
  }
  return result;
}

InsufficientMembersError::InsufficientMembersError(std::size_t wanted, std::size_t found,
                                                   std::uint64_t search_cap)
    : Error("found only " + std::to_string(found) + " of " + std::to_string(wanted) +
            " members below " + std::to_string(search_cap)) {}

Prefix increasing_listing(const Program& decider, std::size_t k, std::uint64_t fuel,
                          std::uint64_t search_cap) {
  if (k == 0) throw Error("prefix length must be at least 1");
  Prefix out;
  out.values.reserve(k);
  for (std::uint64_t x = 0; x < search_cap && out.size() < k; ++x) {
    if (decide(decider, Natural(x), fuel)) out.values.emplace_back(x);
  }
  if (out.size() < k) throw InsufficientMembersError(k, out.size(), search_cap);
  return out;
}

}  // namespace enumlab
