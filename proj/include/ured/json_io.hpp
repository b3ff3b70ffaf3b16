#pragma once

#include <json.hpp>

#include <string>

#include "ured/constructions.hpp"
#include "ured/function_vector.hpp"
#include "ured/indices.hpp"
#include "ured/intersection_lp.hpp"
#include "ured/martingale.hpp"
#include "ured/measure.hpp"
#include "ured/modulus.hpp"
#include "ured/pur_chain.hpp"
#include "ured/set_family.hpp"

namespace ured {

using json = nlohmann::json;

/// Parses text as JSON; parse failures are rethrown as input_error carrying
/// nlohmann's line/column diagnostics.
json parse_json(const std::string& text, const std::string& what);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// Documented input schemas.
set_family family_from_json(const json& j);        // {"ground_size", "sets", ...}
json family_to_json(const set_family& family);
measure measure_from_json(const json& j);          // {"ground_size", "weights"}
json measure_to_json(const measure& mu);
function_vector function_from_json(const json& j); // {"ground_size", "values"}
json function_to_json(const function_vector& f);
martingale martingale_from_json(const json& j);    // {"atoms", "levels", "values"}
json martingale_to_json(const martingale& m);

// Report serializers.
json report_to_json(const index_report& report);
json report_to_json(const lp_certificate& cert);
json report_to_json(const duality_report& report);
json report_to_json(const validation_report& report);
json report_to_json(const monotonicity_report& report);
json report_to_json(const lemma_result& result, bool include_martingale);
json report_to_json(const composition_result& result, bool include_martingale);
json report_to_json(const index_bound_report& report);
json report_to_json(const modulus_report& report);
json report_to_json(const membership_report& report);
json report_to_json(const pur_chain_report& report);
json report_to_json(const energy_gain_report& report);

/// Canonical dump used everywhere a report leaves the process: 2-space
/// indent, sorted keys (nlohmann's ordered map), '\n'-terminated.
std::string dump_report(const json& j);

}  // namespace ured
