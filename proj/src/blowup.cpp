#include "morsespine/blowup.hpp"

#include <algorithm>
#include <string>

#include "morsespine/error.hpp"

namespace morsespine {

BlowUpAtVertex::BlowUpAtVertex(VertexId v, std::vector<TwoBlockPartition> ps)
    : vertex(v), partitions(std::move(ps)) {
  std::sort(partitions.begin(), partitions.end());
  partitions.erase(std::unique(partitions.begin(), partitions.end()), partitions.end());
}

bool BlowUpAtVertex::contains(const TwoBlockPartition& p) const {
  return std::binary_search(partitions.begin(), partitions.end(), p);
}

bool BlowUpAtVertex::isSubsetOf(const BlowUpAtVertex& other) const {
  return vertex == other.vertex && std::includes(other.partitions.begin(), other.partitions.end(),
                                                 partitions.begin(), partitions.end());
}

bool GraphBlowUp::lessOrEqual(const GraphBlowUp& other) const {
  for (const auto& [v, component] : perVertex) {
    auto it = other.perVertex.find(v);
    if (it == other.perVertex.end() || !component.isSubsetOf(it->second)) return false;
  }
  return true;
}

LabelSet descendingLabels(const BasepointedGraph& g, VertexId v) {
  return firstLabels(g.descendingCount(v));
}

namespace {

void validate(const BasepointedGraph& g, const GraphBlowUp& b) {
  if (b.trivial()) throw InvalidBlowUp("blow-up has no nontrivial component");
  for (const auto& [v, component] : b.perVertex) {
    if (v < 0 || v >= g.vertexCount()) throw InvalidBlowUp("vertex out of range");
    if (v == g.basepoint()) throw InvalidBlowUp("cannot blow up the basepoint");
    if (component.vertex != v) throw InvalidBlowUp("component vertex does not match its key");
    if (component.partitions.empty())
      throw InvalidBlowUp("empty component at vertex " + std::to_string(v));
    for (const auto& p : component.partitions) {
      if (p.groundSize() != g.degree(v))
        throw WrongArity("partition " + p.toString() + " at vertex " + std::to_string(v) +
                         " of degree " + std::to_string(g.degree(v)));
    }
    const auto& ps = component.partitions;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (!isCompatible(ps[i], ps[j]))
          throw IncompatiblePartitions(ps[i].toString() + " and " + ps[j].toString());
  }
}

}  // namespace

BlowUpResult blowUpDetailed(const BasepointedGraph& g, const GraphBlowUp& b) {
  validate(g, b);

  std::vector<VertexId> halfOwner(g.halfEdgeCount());
  for (HalfEdgeId h = 0; h < g.halfEdgeCount(); ++h) halfOwner[h] = g.owner(h);

  int vertexCount = g.vertexCount();
  std::vector<std::pair<VertexId, VertexId>> pathEdges;
  for (const auto& [v, component] : b.perVertex) {
    auto chain = component.partitions;
    std::sort(chain.begin(), chain.end(), [](const auto& x, const auto& y) {
      return labelCount(x.a()) < labelCount(y.a());
    });
    std::vector<VertexId> path{v};
    for (std::size_t i = 0; i < chain.size(); ++i) {
      path.push_back(vertexCount++);
      pathEdges.emplace_back(path[i], path[i + 1]);
    }
    for (HalfEdgeId h : g.halfEdgesAt(v)) {
      const LabelSet label = 1u << (g.labelOf(h) - 1);
      const auto position = std::count_if(chain.begin(), chain.end(),
                                          [&](const auto& p) { return !(p.a() & label); });
      halfOwner[h] = path[position];
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edgeCount() + pathEdges.size());
  for (EdgeId e = 0; e < g.edgeCount(); ++e) edges.emplace_back(halfOwner[2 * e], halfOwner[2 * e + 1]);
  std::vector<EdgeId> newEdges;
  for (const auto& pe : pathEdges) {
    newEdges.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back(pe);
  }
  return {BasepointedGraph(vertexCount, g.basepoint(), std::move(edges)), std::move(newEdges)};
}

BasepointedGraph blowUp(const BasepointedGraph& g, const GraphBlowUp& b) {
  return blowUpDetailed(g, b).graph;
}

int blowUpHeightLevel(const GraphBlowUp& b, const BasepointedGraph& g) {
  if (b.trivial()) throw InvalidBlowUp("blow-up has no nontrivial component");
  int best = g.maxLevel() + 1;
  for (const auto& entry : b.perVertex) best = std::min(best, g.level(entry.first));
  return best;
}

bool separatesAt(const BasepointedGraph& g, const GraphBlowUp& b, VertexId v) {
  auto it = b.perVertex.find(v);
  if (it == b.perVertex.end()) throw InvalidBlowUp("no nontrivial component at vertex " + std::to_string(v));
  const LabelSet down = descendingLabels(g, v);
  return std::any_of(it->second.partitions.begin(), it->second.partitions.end(),
                     [&](const auto& p) { return splits(p, down); });
}

bool isDescendingBlowUp(const BasepointedGraph& g, const GraphBlowUp& b) {
  const int level = blowUpHeightLevel(b, g);
  for (const auto& entry : b.perVertex)
    if (g.level(entry.first) == level && separatesAt(g, b, entry.first)) return true;
  return false;
}

}  // namespace morsespine
