#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "oddsigma/convolution.hpp"
#include "oddsigma/representations.hpp"
#include "oddsigma/verify.hpp"

namespace oddsigma {

inline constexpr const char* kSchemaVersion = "1.0";

/// One JSON document per CLI invocation.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::int64_t timing_ms = 0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

void to_json(nlohmann::json& j, const ConvolutionValue& v);
void from_json(const nlohmann::json& j, ConvolutionValue& v);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const RepresentationWitnesses& r);
void from_json(const nlohmann::json& j, RepresentationWitnesses& r);

void to_json(nlohmann::json& j, const Counterexample& cx);
void from_json(const nlohmann::json& j, Counterexample& cx);

void to_json(nlohmann::json& j, const CongruenceReport& r);
void from_json(const nlohmann::json& j, CongruenceReport& r);

}  // namespace oddsigma
