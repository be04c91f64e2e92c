// Copyright 2026 The Thiele Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "thiele/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "thiele/error.hpp"

namespace thiele {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kInvalidInput, message);
}

Rational RationalField(const json& value, const std::string& what) {
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const Error& e) {
      Fail(what + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  Fail(what + " must be a rational string such as \"7/2\" or an integer");
}

std::vector<Rational> RationalList(const json& value, const std::string& what) {
  if (!value.is_array()) Fail(what + " must be a list");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(RationalField(value[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

OwaVector CheckedOwa(std::vector<Rational> weights, const std::string& what) {
  try {
    return OwaVector(std::move(weights));
  } catch (const Error& e) {
    Fail(what + ": " + e.what());
  }
}

// The shared rule cut to `length` entries.
OwaVector ExpandRule(const std::string& type, const OwaVector& custom, std::size_t length) {
  if (type == "pav") return OwaVector::Pav(length);
  if (type == "cc") return OwaVector::ChamberlinCourant(length);
  if (type == "av") return OwaVector::Approval(length);
  return custom.Truncated(length);
}

std::string Str(const Rational& value) { return ToString(value); }

ordered_json OptionalRational(const std::optional<Rational>& value) {
  return value ? ordered_json(Str(*value)) : ordered_json(nullptr);
}

ordered_json StringList(const std::vector<std::string>& items) {
  ordered_json out = ordered_json::array();
  for (const std::string& s : items) out.push_back(s);
  return out;
}

ordered_json InstanceJson(const Instance& instance) {
  const ProfileGraph& g = instance.graph;
  ordered_json doc;
  doc["format"] = kFormatVersion;
  doc["candidates"] = StringList(g.candidate_ids());
  ordered_json voters = ordered_json::array();
  for (VoterIndex v = 0; v < g.num_voters(); ++v) {
    ordered_json voter;
    voter["id"] = g.voter_id(v);
    voter["approvals"] = StringList(CandidateNames(g, g.approvals(v)));
    ordered_json owa = ordered_json::array();
    for (const Rational& w : instance.family[v].weights()) owa.push_back(Str(w));
    voter["owa"] = std::move(owa);
    voters.push_back(std::move(voter));
  }
  doc["voters"] = std::move(voters);
  doc["k"] = instance.k;
  if (instance.threshold) doc["t"] = Str(*instance.threshold * instance.unit);
  doc["unit"] = Str(instance.unit);
  return doc;
}

ordered_json StatsJson(const RunStats& stats) {
  ordered_json out;
  out["subsets_examined"] = stats.subsets_examined;
  out["sunflower_deletions"] = stats.sunflower_deletions;
  out["degree_shortcuts"] = stats.degree_shortcuts;
  out["fptas_calls"] = stats.fptas_calls;
  out["recursive_calls"] = stats.recursive_calls;
  out["color_coding_calls"] = stats.color_coding_calls;
  out["repetitions"] = stats.repetitions;
  out["patterns"] = stats.patterns;
  out["events"] = StringList(stats.events);
  return out;
}

ordered_json StructureJson(const Instance& instance, const DegreeStats& stats) {
  ordered_json out;
  out["candidates"] = instance.graph.num_candidates();
  out["voters"] = instance.graph.num_voters();
  out["d"] = stats.d;
  out["d_determined"] = stats.d_determined;
  out["delta_c"] = stats.delta_c;
  out["delta_v"] = stats.delta_v;
  out["lambda_min"] = instance.family.empty()
                          ? ordered_json(nullptr)
                          : ordered_json(Str(instance.family.LambdaMin()));
  out["internal_unit"] = Str(instance.unit);
  return out;
}

ordered_json OverridesJson(const Overrides& o) {
  ordered_json out;
  out["W"] = OptionalRational(o.W);
  out["w"] = o.w ? ordered_json(*o.w) : ordered_json(nullptr);
  out["r"] = o.r ? ordered_json(*o.r) : ordered_json(nullptr);
  return out;
}

ordered_json TraceObject(const KernelTrace& trace) {
  const CandidateStageTrace& ct = trace.candidates;
  const VoterStageTrace& vt = trace.voters;
  ordered_json cand;
  cand["epsilon"] = Str(ct.epsilon);
  cand["d"] = ct.d;
  cand["apx_opt"] = Str(ct.apx_opt);
  cand["r"] = Str(ct.r);
  cand["keep"] = ct.keep;
  cand["t_star"] = Str(ct.t_star);
  cand["psi"] = ct.psi.get_str();
  cand["W"] = Str(ct.W);
  cand["w"] = ct.w.get_str();
  cand["case"] = CandidateCaseName(ct.case_taken);
  cand["certified"] = ct.certified ? ordered_json(*ct.certified) : ordered_json(nullptr);
  ordered_json deletions = ordered_json::array();
  for (const SunflowerDeletion& del : ct.deletions) {
    ordered_json item;
    item["deleted"] = del.deleted;
    item["members"] = StringList(del.members);
    item["core"] = StringList(del.core);
    deletions.push_back(std::move(item));
  }
  cand["deletions"] = std::move(deletions);
  cand["kept"] = StringList(ct.kept);
  cand["candidates_before"] = ct.candidates_before;
  cand["candidates_after"] = ct.candidates_after;

  ordered_json vot;
  vot["epsilon"] = Str(vt.epsilon);
  vot["d"] = vt.d;
  vot["apx_opt"] = Str(vt.apx_opt);
  vot["epsilon_tilde"] = Str(vt.epsilon_tilde);
  vot["epsilon_star"] = Str(vt.epsilon_star);
  vot["n"] = vt.n;
  vot["n_counts"] = "candidates";
  vot["scale"] = Str(vt.scale);
  vot["effective_scale"] = Str(vt.effective_scale);
  ordered_json groups = ordered_json::array();
  for (const VoterGroup& g : vt.groups) {
    ordered_json item;
    item["representative"] = g.representative;
    item["multiplicity"] = g.multiplicity;
    item["kept"] = g.kept;
    groups.push_back(std::move(item));
  }
  vot["groups"] = std::move(groups);
  vot["voters_before"] = vt.voters_before;
  vot["voters_after"] = vt.voters_after;

  ordered_json out;
  out["epsilon"] = Str(trace.epsilon);
  out["candidate_stage"] = std::move(cand);
  out["voter_stage"] = std::move(vot);
  return out;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) Fail("instance document must be a JSON object");
  if (!doc.contains("format") || doc["format"] != kFormatVersion) {
    Fail("instance document must declare \"format\": 1");
  }
  if (!doc.contains("candidates") || !doc["candidates"].is_array()) {
    Fail("\"candidates\" must be a list of ids");
  }
  if (!doc.contains("voters") || !doc["voters"].is_array()) {
    Fail("\"voters\" must be a list");
  }
  if (!doc.contains("k") || !doc["k"].is_number_integer() || doc["k"].get<long>() < 0) {
    Fail("\"k\" must be a non-negative integer");
  }

  std::vector<std::string> candidates;
  for (const json& c : doc["candidates"]) {
    if (!c.is_string()) Fail("candidate ids must be strings");
    candidates.push_back(c.get<std::string>());
  }
  std::unordered_map<std::string, CandidateIndex> lookup;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!lookup.emplace(candidates[i], static_cast<CandidateIndex>(i)).second) {
      Fail("duplicate candidate id \"" + candidates[i] + "\"");
    }
  }
  const int k = static_cast<int>(doc["k"].get<long>());

  std::optional<std::string> rule;
  OwaVector custom;
  if (doc.contains("rule") && !doc["rule"].is_null()) {
    const json& r = doc["rule"];
    if (!r.is_object() || !r.contains("type") || !r["type"].is_string()) {
      Fail("\"rule\" must be an object with a \"type\"");
    }
    rule = r["type"].get<std::string>();
    if (*rule != "pav" && *rule != "cc" && *rule != "av" && *rule != "custom") {
      Fail("unknown rule type \"" + *rule + "\" (expected pav, cc, av or custom)");
    }
    if (*rule == "custom") {
      if (!r.contains("weights")) Fail("custom rule needs \"weights\"");
      custom = CheckedOwa(RationalList(r["weights"], "rule.weights"), "rule.weights");
    } else if (r.contains("weights")) {
      Fail("only the custom rule takes \"weights\"");
    }
  }

  std::vector<std::string> voter_ids;
  std::vector<CandidateSet> approvals;
  std::vector<OwaVector> vectors;
  for (const json& v : doc["voters"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) {
      Fail("every voter needs a string \"id\"");
    }
    const std::string id = v["id"].get<std::string>();
    if (!v.contains("approvals") || !v["approvals"].is_array()) {
      Fail("voter \"" + id + "\" needs an \"approvals\" list");
    }
    CandidateSet a;
    for (const json& c : v["approvals"]) {
      if (!c.is_string()) Fail("voter \"" + id + "\" lists a non-string approval");
      auto it = lookup.find(c.get<std::string>());
      if (it == lookup.end()) {
        Fail("voter \"" + id + "\" approves unknown candidate \"" + c.get<std::string>() +
             "\"");
      }
      a.push_back(it->second);
    }
    const bool has_owa = v.contains("owa") && !v["owa"].is_null();
    if (has_owa == rule.has_value()) {
      Fail("voter \"" + id +
           "\" must get its weights from exactly one of \"owa\" or the shared \"rule\"");
    }
    const std::size_t length = std::min<std::size_t>(a.size(), static_cast<std::size_t>(k));
    if (has_owa) {
      vectors.push_back(CheckedOwa(RationalList(v["owa"], "voter \"" + id + "\" owa"),
                                   "voter \"" + id + "\""));
    } else {
      vectors.push_back(ExpandRule(*rule, custom, length));
    }
    voter_ids.push_back(id);
    approvals.push_back(std::move(a));
  }

  std::optional<Rational> t;
  if (doc.contains("t") && !doc["t"].is_null()) t = RationalField(doc["t"], "\"t\"");
  Rational unit(1);
  if (doc.contains("unit") && !doc["unit"].is_null()) {
    unit = RationalField(doc["unit"], "\"unit\"");
    if (unit <= 0) Fail("\"unit\" must be positive");
  }
  if (t) *t /= unit;

  ProfileGraph graph(std::move(candidates), std::move(voter_ids), std::move(approvals));
  Instance out = MakeInstance(graph, OwaFamily(std::move(vectors)), k, t);
  out.unit *= unit;
  return out;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  return InstanceJson(instance).dump(2) + "\n";
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write \"" + path + "\"");
  out << SerializeInstance(instance);
}

std::optional<Rational> InternalThreshold(const Instance& instance,
                                          const std::optional<Rational>& original) {
  if (!original) return instance.threshold;
  return *original / instance.unit;
}

std::string TraceJson(const KernelTrace& trace) { return TraceObject(trace).dump(2); }

std::string AnalyzeReport(const Instance& instance, const DegreeStats& stats) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["command"] = "analyze";
  out["structure"] = StructureJson(instance, stats);
  return out.dump(2) + "\n";
}

std::string SolveReport(const Instance& instance, const SolveOptions& options,
                        const SolveOutcome& outcome, const DegreeStats& stats,
                        double wall_ms) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["command"] = "solve";
  out["solver"] = SolverName(options.solver);
  if (outcome.committee) {
    const Committee& c = *outcome.committee;
    out["result"] = "committee";
    out["committee"] = StringList(CandidateNames(instance.graph, c.members));
    out["score"] = Str(ToOriginalUnits(instance, c.score));
    out["size_bound"] = c.size_bound;
  } else {
    out["result"] = "no-instance";
    out["committee"] = nullptr;
    out["score"] = nullptr;
    out["size_bound"] = nullptr;
  }
  ordered_json params;
  params["k"] = instance.k;
  params["t"] = instance.threshold
                    ? ordered_json(Str(ToOriginalUnits(instance, *instance.threshold)))
                    : ordered_json(nullptr);
  params["epsilon"] = OptionalRational(options.epsilon);
  params["seed"] = options.seed;
  params["reps"] = options.reps ? ordered_json(*options.reps) : ordered_json(nullptr);
  params["overrides"] = OverridesJson(options.overrides);
  params["budget"] = {{"max_subsets", options.budget.max_subsets},
                      {"max_pattern_bits", options.budget.max_pattern_bits},
                      {"max_recursive_calls", options.budget.max_recursive_calls}};
  out["parameters"] = std::move(params);
  out["structure"] = StructureJson(instance, stats);
  ordered_json run = StatsJson(outcome.stats);
  run["wall_time_ms"] = wall_ms;
  out["stats"] = std::move(run);
  out["input"] = InstanceJson(instance);
  return out.dump(2) + "\n";
}

std::string KernelReport(const Instance& original, const KernelResult& kernel,
                         const Overrides& overrides, const DegreeStats& stats,
                         double wall_ms) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["command"] = "kernelize";
  ordered_json params;
  params["k"] = original.k;
  params["epsilon"] = Str(kernel.trace.epsilon);
  params["overrides"] = OverridesJson(overrides);
  out["parameters"] = std::move(params);
  out["structure"] = StructureJson(original, stats);
  out["kernel"] = {{"candidates", kernel.instance.graph.num_candidates()},
                   {"voters", kernel.instance.graph.num_voters()},
                   {"internal_unit", Str(kernel.instance.unit)}};
  out["trace"] = TraceObject(kernel.trace);
  out["stats"] = {{"wall_time_ms", wall_ms}};
  out["input"] = InstanceJson(original);
  return out.dump(2) + "\n";
}

}  // namespace thiele
