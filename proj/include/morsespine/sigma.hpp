#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morsespine/blowup.hpp"
#include "morsespine/complex.hpp"
#include "morsespine/graph.hpp"
#include "morsespine/partition.hpp"
#include "morsespine/poset.hpp"

namespace morsespine {

/// Σ(n), Σ(n,k) or Σ(n,k)_{<m}.
struct PartitionComplexSpec {
  int n = 4;
  std::optional<int> k;
  std::optional<int> m;

  /// Throws BadRange: 3 <= n <= 16, 2 <= k <= n, 2 <= m <= n, m needs k.
  void validate() const;
  /// Parses "sigma:n=6,k=3,m=4" (k and m optional).
  static PartitionComplexSpec parse(const std::string& text);
  /// "sigma:n=6,k=3,m=4"
  std::string toString() const;
  /// Whether partition v is a vertex of this complex.
  bool admits(const TwoBlockPartition& v) const;

  friend bool operator==(const PartitionComplexSpec&, const PartitionComplexSpec&) = default;
};

/// A complex whose vertex i stands for vertices[i].
struct PartitionComplex {
  std::vector<TwoBlockPartition> vertices;
  SimplicialComplex complex;

  /// Simplices written as sets of partitions, for comparisons across
  /// differently indexed complexes.
  std::vector<std::vector<TwoBlockPartition>> labeledSimplices() const;
};

/// Flag complex of the compatibility relation on the admitted partitions.
PartitionComplex sigma(const PartitionComplexSpec& spec, CompatMode mode = CompatMode::Paper);

/// Σ(n,2), then Σ(n,k)_{<2..<n} and Σ(n,k) for k = 3..n-1, then Σ(n).
std::vector<PartitionComplexSpec> sigmaFiltration(int n);

struct RelativeLink {
  PartitionComplex rightToLeft;  // 1-block grows: a_v ⊊ a_w
  PartitionComplex leftToRight;  // 1-block shrinks: a_w ⊊ a_v
  PartitionComplex link;         // both classes together
};

/// The relative link of a size-m vertex v of Σ(n,k) outside Σ(n,k)_{<m}
/// inside Σ(n,k)_{<m}. Throws NotASizeMVertex.
RelativeLink relativeLinkDecomposition(int n, int k, int m, const TwoBlockPartition& v,
                                       CompatMode mode = CompatMode::Paper);

/// Σ(degree(v), d) on the vertex's half-edge labels, d = descending count;
/// void when no partition of the labels splits the descending ones.
PartitionComplex sbuComplex(const BasepointedGraph& g, VertexId v);

/// Blow-ups at one vertex ordered by inclusion.
struct VertexBlowUpPoset {
  std::vector<BlowUpAtVertex> elements;
  Poset poset;
  bool truncated = false;  // maxPartitions cut off larger compatible sets
};

/// BU(v): nonempty compatible sets (chains) of partitions at v with at most
/// maxPartitions members (0 = unbounded).
VertexBlowUpPoset buPoset(const BasepointedGraph& g, VertexId v, int maxPartitions = 0);

/// Elements of BU(v) holding at least one partition that splits the
/// descending labels.
VertexBlowUpPoset sbuWeakPoset(const BasepointedGraph& g, VertexId v, int maxPartitions = 0);

}  // namespace morsespine
