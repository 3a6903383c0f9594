#pragma once

#include <map>
#include <vector>

#include "morsespine/graph.hpp"
#include "morsespine/partition.hpp"

namespace morsespine {

/// A compatible set of two-block partitions of the half-edge labels at one
/// vertex, kept sorted.
struct BlowUpAtVertex {
  VertexId vertex = -1;
  std::vector<TwoBlockPartition> partitions;

  BlowUpAtVertex() = default;
  BlowUpAtVertex(VertexId v, std::vector<TwoBlockPartition> ps);

  bool contains(const TwoBlockPartition& p) const;
  bool isSubsetOf(const BlowUpAtVertex& other) const;
  auto operator<=>(const BlowUpAtVertex&) const = default;
};

/// Per-vertex blow-ups; a vertex that is absent carries the trivial blow-up.
struct GraphBlowUp {
  std::map<VertexId, BlowUpAtVertex> perVertex;

  bool trivial() const { return perVertex.empty(); }
  /// Componentwise order with the trivial component as bottom.
  bool lessOrEqual(const GraphBlowUp& other) const;
  auto operator<=>(const GraphBlowUp&) const = default;
};

/// Labels 1..d of the descending half-edges at v.
LabelSet descendingLabels(const BasepointedGraph& g, VertexId v);

struct BlowUpResult {
  BasepointedGraph graph;
  /// Ids of the edges created along the new paths; collapsing them returns g.
  std::vector<EdgeId> newEdges;
};

/// Replaces every affected vertex by a path whose consecutive vertices carry
/// the difference blocks of the nested chain of 1-blocks. Throws InvalidBlowUp,
/// WrongArity or IncompatiblePartitions.
BlowUpResult blowUpDetailed(const BasepointedGraph& g, const GraphBlowUp& b);
BasepointedGraph blowUp(const BasepointedGraph& g, const GraphBlowUp& b);

/// D(B): minimum level of a vertex with a nontrivial component.
int blowUpHeightLevel(const GraphBlowUp& b, const BasepointedGraph& g);

/// Some partition of B_v splits the descending labels of v.
bool separatesAt(const BasepointedGraph& g, const GraphBlowUp& b, VertexId v);

/// B separates at some vertex of level D(B).
bool isDescendingBlowUp(const BasepointedGraph& g, const GraphBlowUp& b);

}  // namespace morsespine
