#include "young/json_report.hpp"

#include <map>

namespace young {

using nlohmann::ordered_json;

namespace {

ordered_json witness_json(const Witness& w) {
  ordered_json args = ordered_json::array();
  for (const auto& p : w.args) args.push_back(to_string(p));
  return {{"args", args}, {"oracle", w.oracle}, {"characterization", w.characterization}};
}

ordered_json witnesses_json(const std::vector<Witness>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) out.push_back(witness_json(w));
  return out;
}

}  // namespace

ordered_json to_json(const CheckReport& r, const JsonOptions& opt) {
  ordered_json j;
  j["name"] = r.name;
  j["variant"] = r.variant;
  j["range"] = {{"description", r.range},
                {"max_card", r.bounds.max_card},
                {"aux_card", r.bounds.aux_card},
                {"slack", r.bounds.slack}};
  j["tuples_checked"] = r.tuples_checked;
  j["mismatch_count"] = r.mismatch_count;
  j["mismatches"] = witnesses_json(r.mismatches);
  if (r.boundary_count > 0 || !r.boundary_note.empty()) {
    j["boundary"] = {{"note", r.boundary_note},
                     {"count", r.boundary_count},
                     {"disagreements", r.boundary_disagreements},
                     {"witnesses", witnesses_json(r.boundary)}};
  }
  if (r.stability_flips)
    j["stability"] = {{"slacks", {r.bounds.slack, r.bounds.slack + 1}}, {"flips", *r.stability_flips}};
  if (opt.timings) j["elapsed_seconds"] = r.elapsed_seconds;
  j["notes"] = r.notes;
  j["verdict"] = to_string(r.verdict);
  return j;
}

ordered_json to_json(const PropositionReport& r, const JsonOptions& opt) {
  ordered_json j;
  j["name"] = r.name;
  j["claim"] = r.claim;
  j["claimed_class"] = to_string(r.claimed_class);
  j["primary_variant"] = r.primary_variant;
  ordered_json variants = ordered_json::array();
  for (const auto& v : r.variants) variants.push_back(to_json(v, opt));
  j["variants"] = std::move(variants);
  j["notes"] = r.notes;
  j["verdict"] = to_string(r.verdict);
  return j;
}

ordered_json to_json(const AggregateReport& r, const JsonOptions& opt) {
  ordered_json props = ordered_json::array();
  std::map<std::string, int> tally{{"pass", 0}, {"fail", 0}, {"unstable", 0}};
  for (const auto& p : r.propositions) {
    props.push_back(to_json(p, opt));
    ++tally[to_string(p.verdict)];
  }
  ordered_json structural = ordered_json::array();
  for (const auto& s : r.structural) {
    structural.push_back(to_json(s, opt));
    ++tally[to_string(s.verdict)];
  }
  ordered_json j;
  j["profile"] = r.profile;
  j["propositions"] = std::move(props);
  j["structural"] = std::move(structural);
  j["summary"] = {{"pass", tally["pass"]}, {"fail", tally["fail"]}, {"unstable", tally["unstable"]}};
  j["verdict"] = to_string(r.verdict);
  return j;
}

ordered_json to_json(const EmbeddingResult& r, const FinitePoset& poset) {
  ordered_json j;
  j["max_card"] = r.max_card;
  j["found"] = r.images.has_value();
  if (r.images) {
    ordered_json map;
    for (std::size_t i = 0; i < poset.size(); ++i) map[poset.labels()[i]] = to_string((*r.images)[i]);
    j["embedding"] = std::move(map);
    j["verified"] = r.verified;
  } else {
    j["note"] = "no embedding among partitions of cardinality <= " + std::to_string(r.max_card) +
                "; this does not rule out an embedding into the untruncated lattice";
  }
  j["nodes"] = r.nodes;
  return j;
}

ordered_json envelope(const std::string& kind, ordered_json payload) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["kind"] = kind;
  j["report"] = std::move(payload);
  return j;
}

}  // namespace young
