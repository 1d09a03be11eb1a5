#include "enumlab/report_io.hpp"

#include <sstream>

namespace enumlab::io {

json natural_json(const Natural& n) {
  if (auto small = to_u64(n)) return *small;
  return n.str();
}

Natural natural_from_json(const json& j) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Natural(j.get<std::int64_t>());
  if (j.is_string()) return parse_natural(j.get<std::string>());
  throw Error("expected a natural number in JSON, got " + j.dump());
}

namespace {

json optional_index(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json prefix_json(const Prefix& p) {
  json a = json::array();
  for (const auto& v : p.values) a.push_back(natural_json(v));
  return a;
}

Prefix prefix_from_json(const json& j) {
  Prefix p;
  for (const auto& v : j) p.values.push_back(natural_from_json(v));
  return p;
}

json profile_json(const TimeProfile& t) {
  return json{{"mode", std::string(to_string(t.mode))}, {"steps", t.steps}};
}

TimeProfile profile_from_json(const json& j) {
  TimeProfile t;
  const auto mode = j.at("mode").get<std::string>();
  t.mode = mode == "deterministic" ? Mode::Deterministic : Mode::Nondeterministic;
  t.steps = j.at("steps").get<std::vector<std::uint64_t>>();
  return t;
}

std::optional<std::size_t> optional_index_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

CoOrderReport coorder_from_json(const json& j) {
  CoOrderReport r;
  r.co_order = j.at("co_order").get<bool>();
  r.prefix_length = j.at("prefix_length").get<std::size_t>();
  const auto& vp = j.at("violating_pair");
  if (!vp.is_null()) {
    r.violating_pair = ViolatingPair{vp.at("i").get<std::size_t>(), vp.at("j").get<std::size_t>(),
                                     vp.at("a_less").get<bool>(), vp.at("b_less").get<bool>()};
  }
  return r;
}

}  // namespace

json to_json(const RunOutcome& r) {
  return json{{"status", std::string(to_string(r.status))},
              {"output", r.output ? natural_json(*r.output) : json(nullptr)},
              {"steps", r.steps}};
}

json to_json(const NondetRunOutcome& r) {
  return json{{"status", std::string(to_string(r.status))},
              {"output", r.output ? natural_json(*r.output) : json(nullptr)},
              {"min_steps", r.min_steps},
              {"branches_explored", r.branches_explored},
              {"consistent", r.consistent}};
}

json to_json(const Program& p) {
  return json{{"name", p.name()},
              {"instructions", p.size()},
              {"registers", p.register_count()},
              {"deterministic", p.deterministic()},
              {"labels", p.labels()}};
}

json to_json(const Sample& s) {
  json rows = json::array();
  for (std::size_t n = 0; n < s.prefix.size(); ++n) {
    rows.push_back(json{{"n", n},
                        {"value", natural_json(s.prefix.values[n])},
                        {"steps", s.profile.steps[n]}});
  }
  return rows;
}

json to_json(const AuditReport& r) {
  json violations = json::array();
  for (const auto& [i, v] : r.membership_violations) {
    violations.push_back(json{{"index", i}, {"value", natural_json(v)}});
  }
  return json{{"injective", r.injective},
              {"first_collision", r.first_collision
                                      ? json::array({r.first_collision->first,
                                                     r.first_collision->second})
                                      : json(nullptr)},
              {"membership_violations", violations}};
}

json to_json(const CoOrderReport& r) {
  json vp = nullptr;
  if (r.violating_pair) {
    const auto& p = *r.violating_pair;
    vp = json{{"i", p.i}, {"j", p.j}, {"a_less", p.a_less}, {"b_less", p.b_less}};
  }
  return json{{"co_order", r.co_order}, {"violating_pair", vp},
              {"prefix_length", r.prefix_length}};
}

json to_json(const SearchResult& r) {
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back(json{{"listing", s.name}, {"reason", s.reason}});
  json witness = nullptr;
  if (r.witness) {
    witness = json{{"listing_a", r.witness->listing_a},
                   {"listing_b", r.witness->listing_b},
                   {"report", to_json(r.witness->report)}};
  }
  return json{{"witness", witness}, {"skipped", skipped}};
}

json to_json(const StrictReport& r) {
  return json{{"strictly_more_rapid_within_horizon", r.strictly_more_rapid},
              {"first_failure", optional_index(r.first_failure)},
              {"horizon", r.horizon}};
}

json to_json(const EventualReport& r) {
  return json{{"more_rapid_within_horizon", r.witness_m.has_value()},
              {"witness_m", optional_index(r.witness_m)},
              {"horizon", r.horizon}};
}

json to_json(const GrowthFit& f) {
  return json{{"exponent_estimate", f.exponent_estimate},
              {"intercept", f.intercept},
              {"residual", f.residual},
              {"sample_range", json::array({f.n_lo, f.n_hi})}};
}

json to_json(const BoundCheck& b) {
  return json{{"k", b.k},
              {"c", b.c},
              {"n0", b.n0},
              {"holds", b.holds},
              {"first_violation", optional_index(b.first_violation)}};
}

json to_json(const Certificate& c) {
  return json{{"kind", std::string(to_string(c.kind))},
              {"subject_set", c.subject_set},
              {"witness_set", c.witness_set},
              {"witness_listing", c.witness_listing},
              {"horizon", c.horizon},
              {"fuel", c.fuel},
              {"branch_cap", c.branch_cap},
              {"bound", to_json(c.bound)},
              {"coorder", to_json(c.coorder)},
              {"subject_prefix", prefix_json(c.subject_prefix)},
              {"witness_prefix", prefix_json(c.witness_prefix)},
              {"witness_profile", profile_json(c.witness_profile)},
              {"valid", c.valid()}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "P_coorder") {
      c.kind = CertificateKind::PCoOrder;
    } else if (kind == "NP_coorder") {
      c.kind = CertificateKind::NpCoOrder;
    } else {
      throw Error("unknown certificate kind '" + kind + "'");
    }
    c.subject_set = j.at("subject_set").get<std::string>();
    c.witness_set = j.at("witness_set").get<std::string>();
    c.witness_listing = j.at("witness_listing").get<std::string>();
    c.horizon = j.at("horizon").get<std::size_t>();
    c.fuel = j.at("fuel").get<std::uint64_t>();
    c.branch_cap = j.at("branch_cap").get<std::uint64_t>();
    const auto& b = j.at("bound");
    c.bound.k = b.at("k").get<unsigned>();
    c.bound.c = b.at("c").get<double>();
    c.bound.n0 = b.at("n0").get<std::size_t>();
    c.bound.holds = b.at("holds").get<bool>();
    c.bound.first_violation = optional_index_from(b.at("first_violation"));
    c.coorder = coorder_from_json(j.at("coorder"));
    c.subject_prefix = prefix_from_json(j.at("subject_prefix"));
    c.witness_prefix = prefix_from_json(j.at("witness_prefix"));
    c.witness_profile = profile_from_json(j.at("witness_profile"));
    return c;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

json to_json(const ReductionReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"x", v.x}, {"a_bit", v.a_bit ? 1 : 0}, {"b_bit", v.b_bit ? 1 : 0}});
  }
  return json{{"domain", json::array({r.domain.lo, r.domain.hi})},
              {"mode", std::string(to_string(r.mode))},
              {"verified", r.verified()},
              {"violations", violations},
              {"f_profile", profile_json(r.f_profile)},
              {"fit", r.fit ? to_json(*r.fit) : json(nullptr)},
              {"bound", r.bound ? to_json(*r.bound) : json(nullptr)}};
}

json to_json(const EquivalenceReport& r) {
  return json{{"kind", std::string(to_string(r.kind))},
              {"valid", r.valid()},
              {"forward", to_json(r.forward)},
              {"backward", to_json(r.backward)},
              {"coorder", r.coorder ? to_json(*r.coorder) : json(nullptr)}};
}

json to_json(const ConsistencyReport& r) {
  return json{{"domain", json::array({r.domain.lo, r.domain.hi})},
              {"consistent", r.consistent()},
              {"mismatches", r.mismatches}};
}

std::string sample_csv(const Sample& s) {
  std::ostringstream out;
  out << "n,value,steps\n";
  for (std::size_t n = 0; n < s.prefix.size(); ++n) {
    out << n << ',' << s.prefix.values[n] << ',' << s.profile.steps[n] << '\n';
  }
  return out.str();
}

std::string violations_csv(const ReductionReport& r) {
  std::ostringstream out;
  out << "x,a_bit,b_bit\n";
  for (const auto& v : r.violations) {
    out << v.x << ',' << (v.a_bit ? 1 : 0) << ',' << (v.b_bit ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string cumulative_csv(const std::string& name_h, const TimeProfile& th,
                           const std::string& name_g, const TimeProfile& tg) {
  std::ostringstream out;
  out << "listing";
  for (std::size_t n = 0; n < th.size(); ++n) out << ',' << n;
  out << '\n';
  auto row = [&](const std::string& name, const TimeProfile& t) {
    out << name;
    for (auto s : cumulative(t)) out << ',' << s;
    out << '\n';
  };
  row(name_h, th);
  row(name_g, tg);
  return out.str();
}

}  // namespace enumlab::io
