#pragma once

// Empirical enumeration complexity: growth fits, explicit polynomial bound
// checks, and P / NP co-order certificates.
//
// Everything here is horizon-bounded evidence for an existential claim. A
// valid certificate exhibits one witness listing with explicit constants;
// an invalid one refutes nothing.
//
// Bounds are indexed by the listing input n and use (n + 1) in place of n so
// that n = 0 is not degenerate. Measuring by bit length would give different
// exponents.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumlab/listing.hpp"
#include "enumlab/order.hpp"

namespace enumlab {

struct GrowthFit {
  double exponent_estimate = 0.0;
  double intercept = 0.0;  // log c
  double residual = 0.0;   // mean squared log error
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
};

/// Least-squares fit of log(steps[n]) against log(n + 1) over the indices
/// from floor(size * lower_fraction) to the end; entries with zero steps are
/// dropped. Requires a profile of at least 16 entries.
GrowthFit fit_poly_exponent(const TimeProfile& t, double lower_fraction = 0.5);

struct BoundCheck {
  unsigned k = 0;
  double c = 1.0;
  std::size_t n0 = 0;
  bool holds = true;
  std::optional<std::size_t> first_violation;
  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

/// holds iff steps[n] <= c * (n + 1)^k for every n0 <= n < size.
BoundCheck check_bound(const TimeProfile& t, unsigned k, double c, std::size_t n0);

enum class CertificateKind : std::uint8_t { PCoOrder, NpCoOrder };
std::string_view to_string(CertificateKind kind);

/// A finite prefix of the set being certified, with its identifier.
struct Subject {
  std::string set;
  Prefix prefix;
};

struct Certificate {
  CertificateKind kind = CertificateKind::PCoOrder;
  std::string subject_set;
  std::string witness_set;
  std::string witness_listing;
  std::size_t horizon = 0;
  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t branch_cap = kDefaultBranchCap;
  BoundCheck bound;
  CoOrderReport coorder;
  Prefix subject_prefix;
  Prefix witness_prefix;
  TimeProfile witness_profile;

  bool valid() const noexcept { return bound.holds && coorder.co_order; }
};

/// Profiles a deterministic witness to the horizon, checks the bound and the
/// co-order of the subject prefix with the witness prefix.
Certificate certify_p_coorder(const Subject& subject, const Listing& witness, unsigned k, double c,
                              std::size_t n0, std::size_t horizon);

/// As certify_p_coorder with the witness profiled by shortest halting branch.
Certificate certify_np_coorder(const Subject& subject, const Listing& witness, unsigned k,
                               double c, std::size_t n0, std::size_t horizon);

/// Re-profiles the witness of a valid P certificate under the
/// nondeterministic runner and returns the NP certificate.
Certificate lift_certificate(const Certificate& cert, const Listing& witness);

struct CertificateVerification {
  bool reproduced = true;
  std::vector<std::string> differences;  // names of fields that drifted
  bool valid = false;                    // validity of the recomputed certificate
};

/// Recomputes a stored certificate from its recorded inputs and compares it
/// field by field.
CertificateVerification verify_certificate(const Certificate& cert, const Listing& witness);

}  // namespace enumlab
