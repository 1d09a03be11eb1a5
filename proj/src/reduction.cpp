#include "enumlab/reduction.hpp"

namespace enumlab {

ReductionError::ReductionError(std::uint64_t x, const std::string& reason)
    : Error("reduction undefined at x = " + std::to_string(x) + ": " + reason), x_(x) {}

std::string_view to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::NpEquiv: return "np_equiv";
    case EquivalenceKind::Pu: return "pu";
    case EquivalenceKind::Npu: return "npu";
  }
  return "?";
}

namespace {

void check_domain(Domain d) {
  if (d.lo > d.hi) throw Error("empty domain");
}

Evaluation apply(const Program& f, std::uint64_t x, Mode mode, const ReductionOptions& opt) {
  // Reuse listing evaluation for the status handling, then rethrow with x.
  Listing l;
  l.name = f.name();
  l.set = f.name();
  l.program = std::shared_ptr<const Program>(std::shared_ptr<const Program>{}, &f);
  l.mode = mode;
  l.fuel = opt.fuel;
  l.branch_cap = opt.branch_cap;
  try {
    return evaluate(l, x);
  } catch (const EvaluationError& e) {
    throw ReductionError(x, e.what());
  }
}

}  // namespace

ReductionReport verify_reduction(const Program& f, const Program& a_decider,
                                 const Program& b_decider, Domain domain, Mode mode,
                                 const ReductionOptions& options) {
  check_domain(domain);
  if (mode == Mode::Deterministic && !f.deterministic()) {
    throw Error("reduction '" + f.name() + "' uses CHOOSE; verify it in nondeterministic mode");
  }
  ReductionReport r;
  r.domain = domain;
  r.mode = mode;
  r.f_profile.mode = mode;
  for (std::uint64_t x = domain.lo;; ++x) {
    auto y = apply(f, x, mode, options);
    const bool a = decide(a_decider, Natural(x), options.fuel);
    const bool b = decide(b_decider, y.value, options.fuel);
    if (a != b) r.violations.push_back({x, a, b});
    r.f_profile.steps.push_back(y.steps);
    if (x == domain.hi) break;
  }
  if (r.f_profile.size() >= 16) r.fit = fit_poly_exponent(r.f_profile);
  if (options.bound) {
    r.bound = check_bound(r.f_profile, options.bound->k, options.bound->c, options.bound->n0);
  }
  return r;
}

bool EquivalenceReport::valid() const noexcept {
  if (!forward.polynomial_evidence() || !backward.polynomial_evidence()) return false;
  if (kind == EquivalenceKind::NpEquiv) return true;
  return coorder.has_value() && coorder->co_order;
}

EquivalenceReport equivalence(const Program& f_ab, const Program& f_ba,
                              const Program& a_decider, const Program& b_decider, Domain domain,
                              EquivalenceKind kind,
                              const std::optional<std::pair<Prefix, Prefix>>& coorder_input,
                              const ReductionOptions& options) {
  if (kind != EquivalenceKind::NpEquiv && !coorder_input) {
    throw Error(std::string(to_string(kind)) + " equivalence needs a pair of prefixes");
  }
  const Mode mode = kind == EquivalenceKind::Pu ? Mode::Deterministic : Mode::Nondeterministic;
  EquivalenceReport r;
  r.kind = kind;
  r.forward = verify_reduction(f_ab, a_decider, b_decider, domain, mode, options);
  r.backward = verify_reduction(f_ba, b_decider, a_decider, domain, mode, options);
  if (coorder_input) r.coorder = coorder_prefix(coorder_input->first, coorder_input->second);
  return r;
}

ConsistencyReport turing_consistency(const Program& f, const Program& a_decider,
                                     const Program& b_decider, Domain domain, Mode mode,
                                     const ReductionOptions& options) {
  check_domain(domain);
  ConsistencyReport r;
  r.domain = domain;
  for (std::uint64_t x = domain.lo;; ++x) {
    auto y = apply(f, x, mode, options);
    const bool via_reduction = decide(b_decider, y.value, options.fuel);
    const bool direct = decide(a_decider, Natural(x), options.fuel);
    if (via_reduction != direct) r.mismatches.push_back(x);
    if (x == domain.hi) break;
  }
  return r;
}

}  // namespace enumlab
