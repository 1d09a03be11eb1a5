#pragma once

// Many-one reductions checked on finite contiguous domains, and the
// equivalence reports built from them.
//
// A reduction f from A to B is verified on [lo, hi] when
// a_decider(x) == b_decider(f(x)) for every x in the domain. In
// nondeterministic mode f(x) is the output of the shortest halting branch and
// every halting branch must agree on it.
//
// Polynomial-time evidence for f is its step profile, a growth fit when the
// domain has at least 16 points, and optionally an explicit bound check.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "enumlab/complexity.hpp"
#include "enumlab/listing.hpp"
#include "enumlab/order.hpp"

namespace enumlab {

struct Domain {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // inclusive
  friend bool operator==(const Domain&, const Domain&) = default;
};

struct BoundSpec {
  unsigned k = 1;
  double c = 1.0;
  std::size_t n0 = 0;
};

struct ReductionOptions {
  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t branch_cap = kDefaultBranchCap;
  std::optional<BoundSpec> bound;
};

struct Violation {
  std::uint64_t x = 0;
  bool a_bit = false;  // x in A
  bool b_bit = false;  // f(x) in B
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ReductionReport {
  Domain domain;
  Mode mode = Mode::Deterministic;
  std::vector<Violation> violations;
  TimeProfile f_profile;  // steps[i] is the cost of f(lo + i)
  std::optional<GrowthFit> fit;
  std::optional<BoundCheck> bound;

  bool verified() const noexcept { return violations.empty(); }
  /// Verified and, when a bound was requested, within it.
  bool polynomial_evidence() const noexcept { return verified() && (!bound || bound->holds); }
};

/// Raised when f cannot be evaluated at some x of the domain.
class ReductionError : public Error {
 public:
  ReductionError(std::uint64_t x, const std::string& reason);
  std::uint64_t x() const noexcept { return x_; }

 private:
  std::uint64_t x_;
};

ReductionReport verify_reduction(const Program& f, const Program& a_decider,
                                 const Program& b_decider, Domain domain, Mode mode,
                                 const ReductionOptions& options = {});

enum class EquivalenceKind : std::uint8_t { NpEquiv, Pu, Npu };
std::string_view to_string(EquivalenceKind kind);

struct EquivalenceReport {
  EquivalenceKind kind = EquivalenceKind::NpEquiv;
  ReductionReport forward;   // A to B through f_ab
  ReductionReport backward;  // B to A through f_ba
  std::optional<CoOrderReport> coorder;

  /// Both directions verified (within any requested bound) and, for PU and
  /// NPU, co-order prefixes.
  bool valid() const noexcept;
};

/// PU verifies both reductions deterministically; NP and NPU use the
/// nondeterministic runner. PU and NPU need a pair of prefixes for the
/// co-order half.
EquivalenceReport equivalence(const Program& f_ab, const Program& f_ba,
                              const Program& a_decider, const Program& b_decider, Domain domain,
                              EquivalenceKind kind,
                              const std::optional<std::pair<Prefix, Prefix>>& coorder_input,
                              const ReductionOptions& options = {});

struct ConsistencyReport {
  Domain domain;
  std::vector<std::uint64_t> mismatches;
  bool consistent() const noexcept { return mismatches.empty(); }
};

/// Decides A as x -> b_decider(f(x)) and compares against a_decider(x).
ConsistencyReport turing_consistency(const Program& f, const Program& a_decider,
                                     const Program& b_decider, Domain domain,
                                     Mode mode = Mode::Deterministic,
                                     const ReductionOptions& options = {});

}  // namespace enumlab
