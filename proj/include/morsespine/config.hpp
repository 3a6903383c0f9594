#pragma once

#include <string>

#include <json.hpp>

#include "morsespine/verify.hpp"

namespace morsespine {

enum class OutputFormat { Json, Table };
const char* toString(OutputFormat f);
OutputFormat outputFormatFromString(const std::string& s);

struct RunConfig {
  VerifyOptions verify;
  OutputFormat format = OutputFormat::Table;
  unsigned seed = 1;
  bool timing = false;

  /// Throws BadRange unless every bound is positive and consistent.
  void validate() const;
};

/// Overlays the keys present in j onto base. Keys: ranks, maxVertices,
/// vertexBound, sigmaMin, sigmaMax, maxPartitionsPerVertex, maxVertexDegree,
/// maxElements, compat, sbu, heightConvention, minBasepointDegree, format,
/// jobs, seed, timing. Throws ParseError on unknown keys or wrong types.
RunConfig applyConfig(RunConfig base, const nlohmann::json& j);
RunConfig loadConfig(const std::string& path, RunConfig base = {});

/// Name of the environment variable holding the default config path.
inline constexpr const char* kConfigEnv = "MORSESPINE_CONFIG";

}  // namespace morsespine
