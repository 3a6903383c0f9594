#pragma once

#include <string>

#include <json.hpp>

#include "morsespine/blowup.hpp"
#include "morsespine/complex.hpp"
#include "morsespine/graph.hpp"
#include "morsespine/height.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/sigma.hpp"
#include "morsespine/verify.hpp"

namespace morsespine {

using Json = nlohmann::ordered_json;

/// {"rank": n, "basepoint": p, "vertexCount": V, "edges": [[u,v], ...]}
Json graphToJson(const BasepointedGraph& g);
/// Checks "rank" against the edge count when present. Throws ParseError or
/// InvalidGraph.
BasepointedGraph graphFromJson(const nlohmann::json& j, GraphOptions options = {});

/// Reads a graph file, or one of the built-in names (see builtinGraphNames).
BasepointedGraph loadGraph(const std::string& pathOrName, const GraphOptions& options = {});
std::vector<std::string> builtinGraphNames();
BasepointedGraph builtinGraph(const std::string& name);

/// "r2v2:0-1,0-1,0-1"
std::string graphKey(const BasepointedGraph& g);

/// "v:1,3|2,4" items, one per partition: the syntax of the CLI's --at flag.
std::string formatBlowUp(const GraphBlowUp& b);
/// Groups items by vertex; ground size is the degree of the vertex. Throws
/// ParseError, InvalidPartition or InvalidBlowUp.
GraphBlowUp parseBlowUp(const BasepointedGraph& g, const std::vector<std::string>& items);

/// "{0,2}"
std::string formatForest(const Forest& f);
/// "0,2" or "{0,2}" or "" (empty forest).
Forest parseForest(const std::string& text);

/// {"vertices": N, "facets": [[...], ...]}
Json complexToJson(const SimplicialComplex& x);
SimplicialComplex complexFromJson(const nlohmann::json& j);
SimplicialComplex loadComplex(const std::string& path);

/// {"degrees": {"-1": {"rank": r, "torsion": [...]}, ...}, "classification": ...}
Json homologyToJson(const HomologyProfile& h);
Json heightToJson(const HeightVector& h);
Json partitionComplexToJson(const PartitionComplex& x);
Json reportToJson(const VerificationReport& r, bool timing);
Json summaryToJson(const VerificationSummary& s);

nlohmann::json readJsonFile(const std::string& path);

}  // namespace morsespine
