#include "morsespine/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "morsespine/error.hpp"

namespace morsespine {

Json graphToJson(const BasepointedGraph& g) {
  Json j;
  j["rank"] = g.rank();
  j["basepoint"] = g.basepoint();
  j["vertexCount"] = g.vertexCount();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

BasepointedGraph graphFromJson(const nlohmann::json& j, GraphOptions options) {
  try {
    if (!j.is_object()) throw ParseError("graph JSON must be an object");
    const int vertexCount = j.at("vertexCount").get<int>();
    const int basepoint = j.value("basepoint", 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("rank")) {
      const int rank = j["rank"].get<int>();
      if (options.expectedRank >= 0 && options.expectedRank != rank)
        throw InvalidGraph("graph file rank " + std::to_string(rank) + " differs from the requested rank");
      options.expectedRank = rank;
    }
    return BasepointedGraph(vertexCount, basepoint, std::move(edges), options);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

namespace {

const std::map<std::string, std::pair<int, std::vector<std::pair<int, int>>>>& builtins() {
  static const std::map<std::string, std::pair<int, std::vector<std::pair<int, int>>>> table{
      {"rose2", {1, {{0, 0}, {0, 0}}}},
      {"rose3", {1, {{0, 0}, {0, 0}, {0, 0}}}},
      {"theta", {2, {{0, 1}, {0, 1}, {0, 1}}}},
      {"G3", {3, {{0, 1}, {1, 2}, {1, 2}, {2, 2}}}},
      {"G4", {2, {{0, 1}, {0, 1}, {1, 1}}}},
      {"ude", {2, {{0, 1}, {1, 1}}}},
      {"ude4", {3, {{0, 1}, {1, 2}, {1, 2}, {1, 2}}}},
      {"square", {4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 3}}}},
      {"collapse-rise", {4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 3}}}},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtinGraphNames() {
  std::vector<std::string> names;
  for (const auto& [name, _] : builtins()) names.push_back(name);
  return names;
}

BasepointedGraph builtinGraph(const std::string& name) {
  const auto it = builtins().find(name);
  if (it == builtins().end()) throw ParseError("unknown built-in graph '" + name + "'");
  return BasepointedGraph(it->second.first, 0, it->second.second);
}

nlohmann::json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

BasepointedGraph loadGraph(const std::string& pathOrName, const GraphOptions& options) {
  if (!std::filesystem::exists(pathOrName) && builtins().count(pathOrName)) {
    auto g = builtinGraph(pathOrName);
    if (options.expectedRank >= 0 && g.rank() != options.expectedRank)
      throw InvalidGraph("built-in graph '" + pathOrName + "' has rank " + std::to_string(g.rank()));
    return g;
  }
  return graphFromJson(readJsonFile(pathOrName), options);
}

std::string graphKey(const BasepointedGraph& g) {
  std::ostringstream out;
  out << 'r' << g.rank() << 'v' << g.vertexCount() << ':';
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out << ',';
    first = false;
    out << u << '-' << v;
  }
  return out.str();
}

Json complexToJson(const SimplicialComplex& x) {
  Json j;
  j["vertices"] = x.vertexCount();
  Json facets = Json::array();
  for (const auto& f : x.facets()) facets.push_back(f);
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex complexFromJson(const nlohmann::json& j) {
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Simplex>());
    return SimplicialComplex::fromFacets(n, std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  }
}

SimplicialComplex loadComplex(const std::string& path) { return complexFromJson(readJsonFile(path)); }

Json homologyToJson(const HomologyProfile& h) {
  Json degrees = Json::object();
  for (int d = -1; d <= h.topDegree(); ++d) {
    const auto& g = h.degree(d);
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    degrees[std::to_string(d)] = Json{{"rank", g.rank}, {"torsion", std::move(torsion)}};
  }
  Json j;
  j["degrees"] = std::move(degrees);
  j["classification"] = classifyProfile(h).toString();
  j["fVector"] = h.simplexCounts;
  return j;
}

Json heightToJson(const HeightVector& h) {
  Json j;
  j["head"] = h.head;
  j["tail"] = {h.tail.first, h.tail.second};
  j["text"] = toString(h);
  return j;
}

Json partitionComplexToJson(const PartitionComplex& x) {
  Json j = complexToJson(x.complex);
  Json labels = Json::array();
  for (const auto& p : x.vertices) labels.push_back(p.toString());
  j["labels"] = std::move(labels);
  return j;
}

Json reportToJson(const VerificationReport& r, bool timing) {
  Json j;
  j["lemma"] = r.lemmaId;
  j["instance"] = r.instance;
  j["data"] = r.instanceData;
  j["expected"] = r.expected;
  j["classification"] = r.classification;
  j["verdict"] = toString(r.verdict);
  if (r.profile) j["homology"] = homologyToJson(*r.profile);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.reproducer.is_null()) j["reproducer"] = r.reproducer;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Json summaryToJson(const VerificationSummary& s) {
  Json lemmas = Json::object();
  for (const auto& [id, c] : s.perLemma)
    lemmas[id] = Json{{"PASS", c.pass},
                      {"PASS-STRONG", c.passStrong},
                      {"FAIL", c.fail},
                      {"INCONCLUSIVE", c.inconclusive},
                      {"total", c.total()}};
  Json j;
  j["lemmas"] = std::move(lemmas);
  j["allPass"] = !s.anyFail();
  return j;
}

std::string formatBlowUp(const GraphBlowUp& b) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, component] : b.perVertex)
    for (const auto& p : component.partitions) {
      if (!first) out << ' ';
      first = false;
      const auto a = labelsOf(p.a());
      const auto abar = labelsOf(p.aBar());
      out << v << ':';
      for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
      out << '|';
      for (std::size_t i = 0; i < abar.size(); ++i) out << (i ? "," : "") << abar[i];
    }
  return out.str();
}

GraphBlowUp parseBlowUp(const BasepointedGraph& g, const std::vector<std::string>& items) {
  std::map<VertexId, std::vector<TwoBlockPartition>> grouped;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("blow-up item '" + item + "' needs the form v:a|b");
    VertexId v = 0;
    try {
      v = std::stoi(item.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad vertex in blow-up item '" + item + "'");
    }
    if (v < 0 || v >= g.vertexCount()) throw InvalidBlowUp("vertex " + std::to_string(v) + " out of range");
    auto p = TwoBlockPartition::parse(item.substr(colon + 1));
    if (p.groundSize() != g.degree(v))
      throw WrongArity("partition " + p.toString() + " does not cover the " +
                       std::to_string(g.degree(v)) + " labels at vertex " + std::to_string(v));
    grouped[v].push_back(p);
  }
  GraphBlowUp b;
  for (auto& [v, ps] : grouped) b.perVertex.emplace(v, BlowUpAtVertex(v, std::move(ps)));
  return b;
}

std::string formatForest(const Forest& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < f.edges.size(); ++i) out << (i ? "," : "") << f.edges[i];
  out << '}';
  return out.str();
}

Forest parseForest(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ') body += c;
  std::vector<EdgeId> ids;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      ids.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad edge id '" + item + "' in forest");
    }
  }
  return Forest(std::move(ids));
}

}  // namespace morsespine
