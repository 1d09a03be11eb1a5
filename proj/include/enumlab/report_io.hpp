#pragma once

// JSON and CSV forms of the reports. Naturals that fit in 64 bits are JSON
// numbers; larger ones are decimal strings.

#include <string>

#include <json.hpp>

#include "enumlab/complexity.hpp"
#include "enumlab/listing.hpp"
#include "enumlab/machine.hpp"
#include "enumlab/order.hpp"
#include "enumlab/rapidity.hpp"
#include "enumlab/reduction.hpp"

namespace enumlab::io {

using nlohmann::json;

json natural_json(const Natural& n);
Natural natural_from_json(const json& j);

json to_json(const RunOutcome& r);
json to_json(const NondetRunOutcome& r);
json to_json(const Program& p);
json to_json(const Sample& s);
json to_json(const AuditReport& r);
json to_json(const CoOrderReport& r);
json to_json(const SearchResult& r);
json to_json(const StrictReport& r);
json to_json(const EventualReport& r);
json to_json(const GrowthFit& f);
json to_json(const BoundCheck& b);
json to_json(const Certificate& c);
json to_json(const ReductionReport& r);
json to_json(const EquivalenceReport& r);
json to_json(const ConsistencyReport& r);

Certificate certificate_from_json(const json& j);

/// Header `n,value,steps`, one row per input.
std::string sample_csv(const Sample& s);
/// Header `x,a_bit,b_bit`, one row per violation.
std::string violations_csv(const ReductionReport& r);
/// Header `listing,0,1,...`, then one row of running sums per profile.
std::string cumulative_csv(const std::string& name_h, const TimeProfile& th,
                           const std::string& name_g, const TimeProfile& tg);

}  // namespace enumlab::io
