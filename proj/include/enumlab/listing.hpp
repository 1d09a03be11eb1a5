#pragma once

// Listings: machine programs read as enumerations h(0), h(1), ... of a set.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enumlab/machine.hpp"

namespace enumlab {

enum class Mode : std::uint8_t { Deterministic, Nondeterministic };
std::string_view to_string(Mode mode);

struct Listing {
  std::string name;
  std::string set;  // identifier of the enumerated set
  std::shared_ptr<const Program> program;
  Mode mode = Mode::Deterministic;
  // fuel policy: per-input step limit and, for nondeterministic runs, the
  // configuration budget
  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t branch_cap = kDefaultBranchCap;
};

/// Wraps a program. Deterministic mode requires a deterministic program.
Listing make_listing(std::string name, std::shared_ptr<const Program> program,
                     Mode mode = Mode::Deterministic, std::string set = {});

/// Same listing with a different runner.
Listing with_mode(Listing listing, Mode mode);

/// Raised when h(n) is undefined at the sampled point: FAIL, fuel exhaustion,
/// no accepting branch, an exhausted branch budget, or inconsistent branches.
class EvaluationError : public Error {
 public:
  EvaluationError(std::string listing, std::uint64_t index, const std::string& reason);
  const std::string& listing() const noexcept { return listing_; }
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::string listing_;
  std::uint64_t index_;
};

struct Evaluation {
  Natural value;
  std::uint64_t steps = 0;
};

Evaluation evaluate(const Listing& listing, std::uint64_t n);

struct Prefix {
  std::vector<Natural> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const Prefix&, const Prefix&) = default;
};

struct TimeProfile {
  std::vector<std::uint64_t> steps;
  Mode mode = Mode::Deterministic;

  std::size_t size() const noexcept { return steps.size(); }
  friend bool operator==(const TimeProfile&, const TimeProfile&) = default;
};

/// Values and step counts of h(0..k-1) from one pass over the inputs.
struct Sample {
  Prefix prefix;
  TimeProfile profile;
};

Sample sample(const Listing& listing, std::size_t k);
Prefix prefix(const Listing& listing, std::size_t k);
TimeProfile time_profile(const Listing& listing, std::size_t k);

struct AuditReport {
  bool injective = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_collision;
  std::vector<std::pair<std::size_t, Natural>> membership_violations;
};

/// Raised when a decider does not produce a verdict on some value.
class DecisionError : public Error {
 public:
  DecisionError(std::string decider, Natural value, const std::string& reason);
  const Natural& value() const noexcept { return value_; }

 private:
  Natural value_;
};

/// Runs a deterministic decider; any nonzero output means membership.
bool decide(const Program& decider, const Natural& x, std::uint64_t fuel = kDefaultFuel);

/// Injectivity of the sample plus, when a decider is given, range membership.
/// The first collision is the earliest index j that repeats an earlier value,
/// paired with that earlier index.
AuditReport audit(const Prefix& prefix, const Program* decider = nullptr,
                  std::uint64_t fuel = kDefaultFuel);

}  // namespace enumlab
