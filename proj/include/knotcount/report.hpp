#pragma once

#include <string>

#include <json.hpp>

#include "knotcount/group.hpp"
#include "knotcount/invariant.hpp"
#include "knotcount/vassiliev.hpp"

namespace knotcount {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

// Group file format: { "order": N, "labels": [...], "mul": [[...], ...] }
// (row-major, left factor = row). Loading re-validates the table.
json group_to_json(const GroupTable& G);
GroupTable group_from_json(const json& j);
GroupTable load_group_file(const std::string& path);

json count_report_to_json(const CountReport& r);
json profile_to_json(const TorusProfile& p);
json witnesses_to_json(const GroupTable& G, const std::vector<StarWitness>& ws);
json verdict_to_json(const FiniteTypeVerdict& v);

// Deterministic rendering: stable key order for JSON, stable row order for
// CSV (profiles are `p,count` rows; witnesses `a,b,p` in search order).
std::string render_count(const CountReport& r, Format f);
std::string render_profile(const TorusProfile& p, Format f);
std::string render_witnesses(const GroupTable& G, const std::vector<StarWitness>& ws, Format f);
std::string render_verdict(const FiniteTypeVerdict& v, Format f);

} // namespace knotcount
