#include "morsespine/config.hpp"

#include "morsespine/error.hpp"
#include "morsespine/io.hpp"

namespace morsespine {

const char* toString(OutputFormat f) { return f == OutputFormat::Json ? "json" : "table"; }

OutputFormat outputFormatFromString(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "table") return OutputFormat::Table;
  throw ParseError("unknown format '" + s + "' (expected json or table)");
}

void RunConfig::validate() const {
  const auto& v = verify;
  if (v.ranks.empty()) throw BadRange("ranks must not be empty");
  for (int r : v.ranks)
    if (r < 2) throw BadRange("every rank must be at least 2");
  if (v.maxVertices < 1 || v.vertexBound < 1) throw BadRange("vertex bounds must be positive");
  if (v.sigmaMin < 4 || v.sigmaMax < v.sigmaMin || v.sigmaMax > 16)
    throw BadRange("sigma range must satisfy 4 <= sigmaMin <= sigmaMax <= 16");
  if (v.caps.maxPartitionsPerVertex < 0 || v.caps.maxVertexDegree < 0)
    throw BadRange("blow-up caps must be non-negative");
  if (v.minBasepointDegree < 1) throw BadRange("minBasepointDegree must be positive");
  if (v.jobs < 1) throw BadRange("jobs must be positive");
}

RunConfig applyConfig(RunConfig c, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      auto& v = c.verify;
      if (key == "ranks") {
        v.ranks = value.is_array() ? value.get<std::vector<int>>() : std::vector<int>{value.get<int>()};
      } else if (key == "maxVertices") {
        v.maxVertices = value.get<int>();
      } else if (key == "vertexBound") {
        v.vertexBound = value.get<int>();
      } else if (key == "sigmaMin") {
        v.sigmaMin = value.get<int>();
      } else if (key == "sigmaMax") {
        v.sigmaMax = value.get<int>();
      } else if (key == "maxPartitionsPerVertex") {
        v.caps.maxPartitionsPerVertex = value.get<int>();
      } else if (key == "maxVertexDegree") {
        v.caps.maxVertexDegree = value.get<int>();
      } else if (key == "maxElements") {
        v.caps.maxElements = value.get<std::size_t>();
      } else if (key == "compat") {
        v.compat = compatModeFromString(value.get<std::string>());
      } else if (key == "sbu") {
        v.sbu = sbuModeFromString(value.get<std::string>());
      } else if (key == "heightConvention") {
        v.height = heightConventionFromString(value.get<std::string>());
      } else if (key == "minBasepointDegree") {
        v.minBasepointDegree = value.get<int>();
      } else if (key == "jobs") {
        v.jobs = value.get<int>();
      } else if (key == "format") {
        c.format = outputFormatFromString(value.get<std::string>());
      } else if (key == "seed") {
        c.seed = value.get<unsigned>();
      } else if (key == "timing") {
        c.timing = value.get<bool>();
      } else {
        throw ParseError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig loadConfig(const std::string& path, RunConfig base) {
  return applyConfig(std::move(base), readJsonFile(path));
}

}  // namespace morsespine
