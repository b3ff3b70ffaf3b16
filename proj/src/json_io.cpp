#include "ured/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ured/errors.hpp"

namespace ured {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error("failed to parse " + what + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open file for writing: " + path);
  out << text;
}

namespace {

rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw input_error(what + ": expected a rational string \"p/q\" or a number");
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw input_error(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

set_family family_from_json(const json& j) {
  set_family family;
  family.ground.size = int_field(j, "ground_size");
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw input_error("\"labels\" must be an array");
    for (const auto& label : j["labels"]) family.ground.labels.push_back(label.get<std::string>());
  }
  if (!j.contains("sets") || !j["sets"].is_array())
    throw input_error("family needs an array field \"sets\"");
  for (const auto& entry : j["sets"]) {
    if (!entry.is_array()) throw input_error("each set must be an array of point indices");
    point_set s(family.ground.size);
    for (const auto& p : entry) s.add(p.get<int>());
    family.sets.push_back(std::move(s));
  }
  family.allow_duplicates = j.value("allow_duplicates", false);
  family.validate();
  return family;
}

json family_to_json(const set_family& family) {
  json j;
  j["ground_size"] = family.ground.size;
  if (!family.ground.labels.empty()) j["labels"] = family.ground.labels;
  j["sets"] = json::array();
  for (const auto& s : family.sets) j["sets"].push_back(s.indices());
  if (family.allow_duplicates) j["allow_duplicates"] = true;
  return j;
}

measure measure_from_json(const json& j) {
  measure mu;
  mu.ground.size = int_field(j, "ground_size");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw input_error("measure needs an array field \"weights\"");
  for (const auto& w : j["weights"]) mu.weights.push_back(rational_from_json(w, "weight"));
  mu.validate();
  return mu;
}

json measure_to_json(const measure& mu) {
  json j;
  j["ground_size"] = mu.ground.size;
  j["weights"] = json::array();
  for (const auto& w : mu.weights) j["weights"].push_back(rational_to_string(w));
  return j;
}

function_vector function_from_json(const json& j) {
  const int n = int_field(j, "ground_size");
  if (!j.contains("values") || !j["values"].is_array())
    throw input_error("function needs an array field \"values\"");
  function_vector f;
  for (const auto& v : j["values"]) f.values.push_back(rational_from_json(v, "value"));
  if (f.size() != n) throw input_error("function value count does not match ground_size");
  return f;
}

json function_to_json(const function_vector& f) {
  json j;
  j["ground_size"] = f.size();
  j["values"] = json::array();
  for (const auto& v : f.values) j["values"].push_back(rational_to_string(v));
  return j;
}

martingale martingale_from_json(const json& j) {
  martingale m;
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw input_error("martingale needs an array field \"atoms\"");
  for (const auto& a : j["atoms"]) m.filt.atom_mass.push_back(rational_from_json(a, "atom mass"));
  if (!j.contains("levels") || !j["levels"].is_array())
    throw input_error("martingale needs an array field \"levels\"");
  for (const auto& level : j["levels"]) {
    partition part;
    for (const auto& blk : level) {
      block b;
      for (const auto& a : blk) b.atoms.push_back(a.get<atom_index>());
      part.blocks.push_back(std::move(b));
    }
    m.filt.levels.push_back(std::move(part));
  }
  m.filt.canonicalize();
  if (!j.contains("values") || !j["values"].is_object())
    throw input_error("martingale needs an object field \"values\"");
  m.levels.resize(m.filt.levels.size());
  for (std::size_t lev = 0; lev < m.filt.levels.size(); ++lev) {
    m.levels[lev].level = static_cast<int>(lev);
    const std::string key = std::to_string(lev);
    if (!j["values"].contains(key))
      throw input_error("martingale values missing level " + key);
    const auto& per_level = j["values"][key];
    m.levels[lev].block_values.resize(m.filt.levels[lev].size());
    for (int bi = 0; bi < m.filt.levels[lev].size(); ++bi) {
      const std::string bkey = std::to_string(bi);
      if (!per_level.contains(bkey))
        throw input_error("martingale values missing level " + key + " block " + bkey);
      function_vector f;
      for (const auto& v : per_level[bkey]) f.values.push_back(rational_from_json(v, "value"));
      m.levels[lev].block_values[bi] = std::move(f);
    }
  }
  return m;
}

json martingale_to_json(const martingale& m) {
  json j;
  j["atoms"] = json::array();
  for (const auto& a : m.filt.atom_mass) j["atoms"].push_back(rational_to_string(a));
  j["levels"] = json::array();
  for (const auto& level : m.filt.levels) {
    json part = json::array();
    for (const auto& b : level.blocks) part.push_back(b.atoms);
    j["levels"].push_back(std::move(part));
  }
  j["values"] = json::object();
  for (std::size_t lev = 0; lev < m.levels.size(); ++lev) {
    json per_level = json::object();
    for (std::size_t bi = 0; bi < m.levels[lev].block_values.size(); ++bi) {
      json values = json::array();
      for (const auto& v : m.levels[lev].block_values[bi].values)
        values.push_back(rational_to_string(v));
      per_level[std::to_string(bi)] = std::move(values);
    }
    j["values"][std::to_string(lev)] = std::move(per_level);
  }
  return j;
}

json report_to_json(const index_report& report) {
  json j;
  j["l"] = report.l_value;
  j["l_witness_point"] = report.l_witness_point;
  j["gamma"] = report.gamma;
  j["win"] = rational_to_string(report.win_value);
  j["win_witness"] = report.win_witness;
  if (report.win_tilde_value) {
    j["win_tilde"] = rational_to_string(*report.win_tilde_value);
    j["win_tilde_witness"] = report.win_tilde_witness;
  }
  return j;
}

json report_to_json(const lp_certificate& cert) {
  json j;
  j["status"] = cert.status == lp_certificate::state::optimal ? "optimal" : "infeasible";
  j["value"] = rational_to_string(cert.value);
  j["primal"] = json::array();
  for (const auto& w : cert.primal.weights) j["primal"].push_back(rational_to_string(w));
  j["dual"] = json::array();
  for (const auto& w : cert.dual) j["dual"].push_back(rational_to_string(w));
  return j;
}

json report_to_json(const duality_report& report) {
  json j;
  j["lp_value"] = rational_to_string(report.lp_value);
  j["dual_cover_value"] = rational_to_string(report.dual_cover_value);
  j["primal_dual_equal"] = report.primal_dual_equal;
  j["rep_value"] = rational_to_string(report.rep_value);
  j["rep_length"] = report.rep_length;
  j["gap"] = rational_to_string(report.gap);
  return j;
}

json report_to_json(const validation_report& report) {
  json j;
  j["valid"] = report.valid;
  j["violations"] = report.violations;
  j["paley_pairs_checked"] = report.paley_pairs_checked;
  return j;
}

json report_to_json(const monotonicity_report& report) {
  json j;
  j["holds"] = report.holds;
  j["exact"] = report.exact;
  j["min_slack"] = report.min_slack;
  j["worst_level"] = report.worst_level;
  j["worst_block"] = report.worst_block;
  return j;
}

json report_to_json(const lemma_result& result, bool include_martingale) {
  json j;
  j["l"] = result.l_value;
  j["bound"] = rational_to_string(result.bound);
  j["max_final_sup"] = rational_to_string(result.max_final_sup);
  j["verified"] = true;  // construction throws on any failed postcondition
  if (include_martingale) j["martingale"] = martingale_to_json(result.mart);
  return j;
}

json report_to_json(const composition_result& result, bool include_martingale) {
  json j;
  j["l_values"] = result.l_values;
  j["bound"] = rational_to_string(result.bound);
  j["max_final_sup"] = rational_to_string(result.max_final_sup);
  j["omega_even_full"] = result.omega_even_full;
  j["increments_in_family"] = result.increments_in_family;
  j["qualification"] = result.qualification;
  if (include_martingale) j["martingale"] = martingale_to_json(result.mart);
  return j;
}

json report_to_json(const index_bound_report& report) {
  json j;
  j["bound"] = rational_to_string(report.bound);
  j["l_values"] = report.l_values;
  j["family_sizes"] = report.family_sizes;
  j["witness_atoms"] = report.witness_atoms;
  j["witness_materialized"] = report.witness_materialized;
  bool verified = true;
  if (report.witness) {
    verified = report.witness->omega_even_full && report.witness->increments_in_family &&
               report.witness->qualification && report.witness->max_final_sup <= report.bound;
    j["witness"] = report_to_json(*report.witness, false);
  }
  j["verified"] = verified;
  return j;
}

json report_to_json(const modulus_report& report) {
  json j;
  j["estimate"] = report.estimate;
  j["witness_x"] = report.witness_x.values;
  j["witness_y"] = report.witness_y.values;
  j["separation"] = report.separation;
  j["feasibility"] = report.feasibility;
  j["degenerate"] = report.degenerate;
  j["tol"] = report.tol;
  return j;
}

json report_to_json(const membership_report& report) {
  json j;
  j["certified_out"] = report.certified_out;
  j["best_ratio"] = report.best_ratio;
  j["threshold"] = report.threshold;
  j["witness_y"] = report.witness_y.values;
  return j;
}

json report_to_json(const pur_chain_report& report) {
  json j;
  j["functional_sq"] = report.functional_sq;
  j["cauchy_schwarz_rhs"] = report.cauchy_schwarz_rhs;
  j["convexity_rhs"] = report.convexity_rhs;
  j["renorm_rhs"] = report.renorm_rhs;
  j["cauchy_schwarz_holds"] = report.cauchy_schwarz_holds;
  j["convexity_holds"] = report.convexity_holds;
  j["identity_holds"] = report.identity_holds;
  j["exact_verified"] = report.exact_verified;
  j["all_hold"] = report.all_hold;
  return j;
}

json report_to_json(const energy_gain_report& report) {
  json j;
  j["applicable"] = report.applicable;
  if (!report.applicable) j["reason"] = report.reason;
  j["energy_prev"] = report.energy_prev;
  j["energy_curr"] = report.energy_curr;
  j["flagged_energy"] = report.flagged_energy;
  j["required_gain"] = report.required_gain;
  j["slack"] = report.slack;
  j["holds"] = report.holds;
  return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ured
