#include "enumlab/complexity.hpp"

#include <cmath>

namespace enumlab {

GrowthFit fit_poly_exponent(const TimeProfile& t, double lower_fraction) {
  if (t.size() < 16) {
    throw Error("growth fit needs at least 16 profile entries, got " + std::to_string(t.size()));
  }
  if (!(lower_fraction >= 0.0 && lower_fraction < 1.0)) {
    throw Error("growth fit lower fraction must lie in [0, 1)");
  }
  GrowthFit fit;
  fit.n_lo = static_cast<std::size_t>(std::floor(static_cast<double>(t.size()) * lower_fraction));
  fit.n_hi = t.size() - 1;

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t n = fit.n_lo; n <= fit.n_hi; ++n) {
    if (t.steps[n] == 0) continue;
    xs.push_back(std::log(static_cast<double>(n + 1)));
    ys.push_back(std::log(static_cast<double>(t.steps[n])));
  }
  if (xs.size() < 2) throw Error("growth fit needs at least two non-zero profile entries");

  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.exponent_estimate = sxy / sxx;
  fit.intercept = my - fit.exponent_estimate * mx;
  double sse = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.exponent_estimate * xs[i]);
    sse += e * e;
  }
  fit.residual = sse / m;
  return fit;
}

BoundCheck check_bound(const TimeProfile& t, unsigned k, double c, std::size_t n0) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error("bound constant c must be positive");
  BoundCheck b{k, c, n0, true, std::nullopt};
  for (std::size_t n = n0; n < t.size(); ++n) {
    long double limit = c;
    for (unsigned e = 0; e < k; ++e) limit *= static_cast<long double>(n + 1);
    if (static_cast<long double>(t.steps[n]) > limit) {
      b.holds = false;
      b.first_violation = n;
      break;
    }
  }
  return b;
}

std::string_view to_string(CertificateKind kind) {
  return kind == CertificateKind::PCoOrder ? "P_coorder" : "NP_coorder";
}

namespace {

Certificate build(CertificateKind kind, const Subject& subject, const Listing& witness,
                  unsigned k, double c, std::size_t n0, std::size_t horizon) {
  if (subject.prefix.size() != horizon) {
    throw Error("subject prefix has length " + std::to_string(subject.prefix.size()) +
                " but the horizon is " + std::to_string(horizon));
  }
  Certificate cert;
  cert.kind = kind;
  cert.subject_set = subject.set;
  cert.witness_set = witness.set;
  cert.witness_listing = witness.name;
  cert.horizon = horizon;
  cert.fuel = witness.fuel;
  cert.branch_cap = witness.branch_cap;

  auto s = sample(witness, horizon);
  cert.bound = check_bound(s.profile, k, c, n0);
  cert.coorder = coorder_prefix(subject.prefix, s.prefix);
  cert.subject_prefix = subject.prefix;
  cert.witness_prefix = std::move(s.prefix);
  cert.witness_profile = std::move(s.profile);
  return cert;
}

}  // namespace

Certificate certify_p_coorder(const Subject& subject, const Listing& witness, unsigned k, double c,
                              std::size_t n0, std::size_t horizon) {
  if (!witness.program->deterministic()) {
    throw Error("P co-order witness '" + witness.name + "' must be deterministic");
  }
  return build(CertificateKind::PCoOrder, subject, with_mode(witness, Mode::Deterministic), k, c,
               n0, horizon);
}

Certificate certify_np_coorder(const Subject& subject, const Listing& witness, unsigned k,
                               double c, std::size_t n0, std::size_t horizon) {
  return build(CertificateKind::NpCoOrder, subject, with_mode(witness, Mode::Nondeterministic), k,
               c, n0, horizon);
}

Certificate lift_certificate(const Certificate& cert, const Listing& witness) {
  if (cert.kind != CertificateKind::PCoOrder) throw Error("only P co-order certificates lift");
  if (!cert.valid()) throw Error("cannot lift an invalid certificate");
  if (witness.name != cert.witness_listing) {
    throw Error("certificate names witness '" + cert.witness_listing + "', got '" +
                witness.name + "'");
  }
  Listing w = witness;
  w.fuel = cert.fuel;
  w.branch_cap = cert.branch_cap;
  return certify_np_coorder(Subject{cert.subject_set, cert.subject_prefix}, w, cert.bound.k,
                            cert.bound.c, cert.bound.n0, cert.horizon);
}

CertificateVerification verify_certificate(const Certificate& cert, const Listing& witness) {
  Listing w = witness;
  w.fuel = cert.fuel;
  w.branch_cap = cert.branch_cap;
  const Subject subject{cert.subject_set, cert.subject_prefix};
  const Certificate again =
      cert.kind == CertificateKind::PCoOrder
          ? certify_p_coorder(subject, w, cert.bound.k, cert.bound.c, cert.bound.n0, cert.horizon)
          : certify_np_coorder(subject, w, cert.bound.k, cert.bound.c, cert.bound.n0,
                               cert.horizon);

  CertificateVerification v;
  auto check = [&](bool same, const char* field) {
    if (!same) {
      v.reproduced = false;
      v.differences.emplace_back(field);
    }
  };
  check(again.witness_set == cert.witness_set, "witness_set");
  check(again.witness_listing == cert.witness_listing, "witness_listing");
  check(again.bound == cert.bound, "bound");
  check(again.coorder == cert.coorder, "coorder");
  check(again.witness_prefix == cert.witness_prefix, "witness_prefix");
  check(again.witness_profile == cert.witness_profile, "witness_profile");
  v.valid = again.valid();
  return v;
}

}  // namespace enumlab
