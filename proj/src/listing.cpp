#include "enumlab/listing.hpp"

#include <map>

namespace enumlab {

std::string_view to_string(Mode mode) {
  return mode == Mode::Deterministic ? "deterministic" : "nondeterministic";
}

Listing make_listing(std::string name, std::shared_ptr<const Program> program, Mode mode,
                     std::string set) {
  if (!program) throw Error("listing '" + name + "' has no program");
  if (mode == Mode::Deterministic && !program->deterministic()) {
    throw Error("listing '" + name + "' uses CHOOSE and cannot run deterministically");
  }
  Listing l;
  l.set = set.empty() ? name : std::move(set);
  l.name = std::move(name);
  l.program = std::move(program);
  l.mode = mode;
  return l;
}

Listing with_mode(Listing listing, Mode mode) {
  if (mode == Mode::Deterministic && !listing.program->deterministic()) {
    throw Error("listing '" + listing.name + "' uses CHOOSE and cannot run deterministically");
  }
  listing.mode = mode;
  return listing;
}

EvaluationError::EvaluationError(std::string listing, std::uint64_t index,
                                 const std::string& reason)
    : Error("listing '" + listing + "' undefined at n = " + std::to_string(index) + ": " +
            reason),
      listing_(std::move(listing)),
      index_(index) {}

Evaluation evaluate(const Listing& l, std::uint64_t n) {
  if (l.mode == Mode::Deterministic) {
    auto run = run_det(*l.program, Natural(n), l.fuel);
    switch (run.status) {
      case RunStatus::Halted: return {std::move(*run.output), run.steps};
      case RunStatus::Failed: throw EvaluationError(l.name, n, "program executed FAIL");
      case RunStatus::FuelExhausted:
        throw EvaluationError(l.name, n, "no HALT within " + std::to_string(l.fuel) + " steps");
    }
  }
  auto run = run_nondet(*l.program, Natural(n), l.fuel, l.branch_cap);
  switch (run.status) {
    case NondetStatus::Halted:
      if (!run.consistent) {
        throw EvaluationError(l.name, n, "halting branches disagree on the output");
      }
      return {std::move(*run.output), run.min_steps};
    case NondetStatus::NoSuccess:
      throw EvaluationError(l.name, n, "no halting branch within fuel");
    case NondetStatus::Indeterminate:
      throw EvaluationError(l.name, n,
                            "branch cap of " + std::to_string(l.branch_cap) + " exhausted");
  }
  throw EvaluationError(l.name, n, "unknown run status");
}

Sample sample(const Listing& l, std::size_t k) {
  if (k == 0) throw Error("prefix length must be at least 1");
  Sample s;
  s.profile.mode = l.mode;
  s.prefix.values.reserve(k);
  s.profile.steps.reserve(k);
  for (std::size_t n = 0; n < k; ++n) {
    auto e = evaluate(l, n);
    s.prefix.values.push_back(std::move(e.value));
    s.profile.steps.push_back(e.steps);
  }
  return s;
}

Prefix prefix(const Listing& l, std::size_t k) { return sample(l, k).prefix; }

TimeProfile time_profile(const Listing& l, std::size_t k) { return sample(l, k).profile; }

DecisionError::DecisionError(std::string decider, Natural value, const std::string& reason)
    : Error("decider '" + decider + "' gave no verdict on " + value.str() + ": " + reason),
      value_(std::move(value)) {}

bool decide(const Program& decider, const Natural& x, std::uint64_t fuel) {
  auto run = run_det(decider, x, fuel);
  switch (run.status) {
    case RunStatus::Halted: return !run.output->is_zero();
    case RunStatus::Failed: throw DecisionError(decider.name(), x, "program executed FAIL");
    case RunStatus::FuelExhausted:
      throw DecisionError(decider.name(), x,
                          "no HALT within " + std::to_string(fuel) + " steps");
  }
  throw DecisionError(decider.name(), x, "unknown run status");
}

AuditReport audit(const Prefix& p, const Program* decider, std::uint64_t fuel) {
  AuditReport report;
  std::map<Natural, std::size_t> seen;
  for (std::size_t j = 0; j < p.values.size(); ++j) {
    auto [it, inserted] = seen.emplace(p.values[j], j);
    if (!inserted) {
      report.injective = false;
      report.first_collision = std::make_pair(it->second, j);
      break;
    }
  }
  if (decider != nullptr) {
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      if (!decide(*decider, p.values[i], fuel)) {
        report.membership_violations.emplace_back(i, p.values[i]);
      }
    }
  }
  return report;
}

}  // namespace enumlab
