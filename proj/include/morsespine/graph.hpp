#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace morsespine {

using VertexId = int;
using EdgeId = int;
using HalfEdgeId = int;

struct GraphOptions {
  int minBasepointDegree = 1;
  int expectedRank = -1;  // negative: not checked
};

/// A finite connected multigraph with a distinguished basepoint.
///
/// Edge i owns the half-edges 2i and 2i+1; the pairing is h <-> h^1. Levels
/// (edge-count distance to the basepoint) and the per-vertex half-edge
/// labelling are fixed at construction: at every vertex the descending
/// half-edges carry labels 1..d, the remaining ones d+1..degree, each group
/// ordered by half-edge id.
class BasepointedGraph {
 public:
  BasepointedGraph(int vertexCount, VertexId basepoint,
                   std::vector<std::pair<VertexId, VertexId>> edges,
                   const GraphOptions& options = {});

  int vertexCount() const { return static_cast<int>(incident_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  int halfEdgeCount() const { return 2 * edgeCount(); }
  VertexId basepoint() const { return basepoint_; }
  int rank() const { return edgeCount() - vertexCount() + 1; }

  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_.at(e); }
  bool isLoop(EdgeId e) const { return edges_.at(e).first == edges_.at(e).second; }

  VertexId owner(HalfEdgeId h) const {
    return (h & 1) ? edges_.at(h >> 1).second : edges_.at(h >> 1).first;
  }
  static HalfEdgeId partner(HalfEdgeId h) { return h ^ 1; }
  static EdgeId edgeOf(HalfEdgeId h) { return h >> 1; }

  int degree(VertexId v) const { return static_cast<int>(incident_.at(v).size()); }
  int totalDegree() const { return halfEdgeCount(); }

  int level(VertexId v) const { return levels_.at(v); }
  const std::vector<int>& levels() const { return levels_; }
  int maxLevel() const { return maxLevel_; }

  /// Half-edges at v in label order.
  std::span<const HalfEdgeId> halfEdgesAt(VertexId v) const { return incident_.at(v); }
  /// 1-based label of h at its owner.
  int labelOf(HalfEdgeId h) const { return labels_.at(h); }
  HalfEdgeId halfEdgeWithLabel(VertexId v, int label) const {
    return incident_.at(v).at(label - 1);
  }

  bool isDescendingHalfEdge(HalfEdgeId h) const {
    return levels_[owner(partner(h))] < levels_[owner(h)];
  }
  int descendingCount(VertexId v) const { return descending_.at(v); }

  friend bool operator==(const BasepointedGraph& a, const BasepointedGraph& b) {
    return a.basepoint_ == b.basepoint_ && a.edges_ == b.edges_ &&
           a.vertexCount() == b.vertexCount();
  }

 private:
  VertexId basepoint_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<HalfEdgeId>> incident_;
  std::vector<int> labels_;
  std::vector<int> levels_;
  std::vector<int> descending_;
  int maxLevel_ = 0;
};

/// Edge-count distance of every vertex to the basepoint.
std::vector<int> levelMap(const BasepointedGraph& g);

enum class EdgeKind { Horizontal, VerticalDescending };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Horizontal;
  VertexId from = -1;  // higher level endpoint when vertical
  VertexId to = -1;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

EdgeClass classifyEdge(const BasepointedGraph& g, EdgeId e);

/// Non-basepoint vertices with exactly one descending half-edge.
std::vector<VertexId> uniqueDescendingEdgeVertices(const BasepointedGraph& g);

/// A set of edges, kept sorted and duplicate free.
struct Forest {
  std::vector<EdgeId> edges;

  Forest() = default;
  explicit Forest(std::vector<EdgeId> ids);
  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  bool contains(EdgeId e) const;
  bool isSubsetOf(const Forest& other) const;
  auto operator<=>(const Forest&) const = default;
};

/// True when the edge set is acyclic (no loops, no cycles, no parallel pair).
bool isForest(const BasepointedGraph& g, const Forest& f);

struct CollapseResult {
  BasepointedGraph graph;
  std::vector<VertexId> vertexMap;  // old vertex -> new vertex
  std::vector<EdgeId> edgeMap;      // old edge -> new edge, -1 if collapsed
};

/// Quotient g/F; each component of F becomes one vertex. Throws NotAForest.
CollapseResult collapseForestDetailed(const BasepointedGraph& g, const Forest& f);
BasepointedGraph collapseForest(const BasepointedGraph& g, const Forest& f);

/// D(F): minimum level over the endpoints of F. Throws EmptyForest.
int forestHeight(const BasepointedGraph& g, const Forest& f);

/// True iff no component of F holds two distinct vertices of level D(F).
bool isDescendingForest(const BasepointedGraph& g, const Forest& f);

/// All nonempty forests of g, in increasing bitmask order of their edge sets.
std::vector<Forest> enumerateForests(const BasepointedGraph& g);

/// Isomorphism invariant that determines g up to basepoint-preserving
/// isomorphism.
struct CanonicalForm {
  std::vector<int> code;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonicalForm(const BasepointedGraph& g);
bool isomorphic(const BasepointedGraph& a, const BasepointedGraph& b);

/// Builds the graph with basepoint 0 whose edge multiplicities are given by
/// the symmetric matrix m (diagonal entries count loops).
BasepointedGraph graphFromMultiplicities(const std::vector<std::vector<int>>& m,
                                         const GraphOptions& options = {});
BasepointedGraph graphFromCanonicalForm(const CanonicalForm& form,
                                        const GraphOptions& options = {});

}  // namespace morsespine
