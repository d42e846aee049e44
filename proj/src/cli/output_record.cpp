#include "oddsigma/output_record.hpp"

namespace oddsigma {

using nlohmann::json;

void to_json(json& j, const OutputRecord& r) {
  j = json{{"schema_version", r.schema_version},
           {"command", r.command},
           {"parameters", r.parameters},
           {"results", r.results},
           {"timing_ms", r.timing_ms}};
}

void from_json(const json& j, OutputRecord& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("command").get_to(r.command);
  r.parameters = j.at("parameters");
  r.results = j.at("results");
  j.at("timing_ms").get_to(r.timing_ms);
}

void to_json(json& j, const ConvolutionValue& v) {
  j = json{{"n", v.n},
           {"m", v.m_polygonal},
           {"weight", std::string(to_string(v.weight_mode))},
           {"value", v.value},
           {"support_size", v.support_size}};
}

void from_json(const json& j, ConvolutionValue& v) {
  j.at("n").get_to(v.n);
  j.at("m").get_to(v.m_polygonal);
  v.weight_mode = parse_weight_mode(j.at("weight").get<std::string>());
  j.at("value").get_to(v.value);
  j.at("support_size").get_to(v.support_size);
}

void to_json(json& j, const Witness& w) { j = json::array({w.ell, w.k}); }

void from_json(const json& j, Witness& w) {
  j.at(0).get_to(w.ell);
  j.at(1).get_to(w.k);
}

void to_json(json& j, const RepresentationWitnesses& r) {
  j = json{{"m", r.m},
           {"n", r.n},
           {"a", r.a_count()},
           {"b", r.b_count()},
           {"a_witnesses", r.a_witnesses},
           {"b_witnesses", r.b_witnesses}};
}

void from_json(const json& j, RepresentationWitnesses& r) {
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("a_witnesses").get_to(r.a_witnesses);
  j.at("b_witnesses").get_to(r.b_witnesses);
}

void to_json(json& j, const Counterexample& cx) {
  j = json{{"n", cx.n},
           {"lhs_value", cx.lhs_value},
           {"required_residue", cx.required_residue},
           {"modulus", cx.modulus}};
}

void from_json(const json& j, Counterexample& cx) {
  j.at("n").get_to(cx.n);
  j.at("lhs_value").get_to(cx.lhs_value);
  j.at("required_residue").get_to(cx.required_residue);
  j.at("modulus").get_to(cx.modulus);
}

void to_json(json& j, const CongruenceReport& r) {
  j = json{{"conjecture", static_cast<int>(r.congruence_case.conjecture)},
           {"m", r.congruence_case.m},
           {"n_max", r.n_max},
           {"holds", r.holds},
           {"trivial", r.trivial},
           {"minimal_counterexample", nullptr}};
  if (r.minimal_counterexample) j["minimal_counterexample"] = *r.minimal_counterexample;
}

void from_json(const json& j, CongruenceReport& r) {
  r.congruence_case.conjecture = conjecture_from_int(j.at("conjecture").get<int>());
  j.at("m").get_to(r.congruence_case.m);
  j.at("n_max").get_to(r.n_max);
  j.at("holds").get_to(r.holds);
  j.at("trivial").get_to(r.trivial);
  const auto& cx = j.at("minimal_counterexample");
  r.minimal_counterexample =
      cx.is_null() ? std::nullopt : std::optional<Counterexample>(cx.get<Counterexample>());
}

}  // namespace oddsigma
