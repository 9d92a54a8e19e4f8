#pragma once

#include <nlohmann/json.hpp>

#include "triameter/classes.hpp"
#include "triameter/explorer.hpp"
#include "triameter/families.hpp"
#include "triameter/laws.hpp"
#include "triameter/metrics.hpp"

namespace triameter {

using Json = nlohmann::ordered_json;

/// {"value": int, "witnesses": [[a,b,c], ...], "method": string}
Json to_json(const TriametralCertificate& cert);
/// {"value": int, "pairs": [[x,y], ...], "peripheral": [...]}
Json to_json(const DiametralCertificate& cert);
/// {"tree": bool, ..., "antipode": [int, ...] | null}
Json to_json(const ClassProfile& profile);
Json to_json(const LawVerdict& verdict);
Json to_json(const CounterexampleReport& report);
Json to_json(const ScanSummary& summary);
/// {"label": index, ...}
Json labels_json(const Fixture& fixture);

} // namespace triameter
