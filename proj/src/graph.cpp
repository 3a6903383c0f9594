#include "morsespine/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "morsespine/error.hpp"

namespace morsespine {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> bfsLevels(int vertexCount, VertexId basepoint,
                           const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> adjacency(vertexCount);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<int> level(vertexCount, -1);
  std::queue<VertexId> queue;
  level[basepoint] = 0;
  queue.push(basepoint);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId w : adjacency[u]) {
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push(w);
      }
    }
  }
  return level;
}

}  // namespace

BasepointedGraph::BasepointedGraph(int vertexCount, VertexId basepoint,
                                   std::vector<std::pair<VertexId, VertexId>> edges,
                                   const GraphOptions& options)
    : basepoint_(basepoint), edges_(std::move(edges)) {
  if (vertexCount < 1) throw InvalidGraph("graph needs at least one vertex");
  if (basepoint < 0 || basepoint >= vertexCount) throw InvalidGraph("basepoint out of range");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertexCount || v >= vertexCount)
      throw InvalidGraph("edge endpoint out of range");
  }

  levels_ = bfsLevels(vertexCount, basepoint_, edges_);
  if (std::any_of(levels_.begin(), levels_.end(), [](int l) { return l < 0; }))
    throw InvalidGraph("graph is not connected");
  maxLevel_ = *std::max_element(levels_.begin(), levels_.end());

  incident_.assign(vertexCount, {});
  for (HalfEdgeId h = 0; h < halfEdgeCount(); ++h) incident_[owner(h)].push_back(h);

  for (VertexId v = 0; v < vertexCount; ++v) {
    if (v == basepoint_) {
      if (degree(v) < options.minBasepointDegree && vertexCount > 1)
        throw InvalidGraph("basepoint degree below " + std::to_string(options.minBasepointDegree));
    } else if (degree(v) < 3) {
      throw InvalidGraph("vertex " + std::to_string(v) + " has degree " +
                         std::to_string(degree(v)) + " < 3");
    }
  }
  if (options.expectedRank >= 0 && rank() != options.expectedRank)
    throw InvalidGraph("rank " + std::to_string(rank()) + " differs from declared rank " +
                       std::to_string(options.expectedRank));

  descending_.assign(vertexCount, 0);
  labels_.assign(halfEdgeCount(), 0);
  for (VertexId v = 0; v < vertexCount; ++v) {
    auto& hs = incident_[v];
    std::stable_partition(hs.begin(), hs.end(),
                          [&](HalfEdgeId h) { return isDescendingHalfEdge(h); });
    descending_[v] = static_cast<int>(
        std::count_if(hs.begin(), hs.end(), [&](HalfEdgeId h) { return isDescendingHalfEdge(h); }));
    for (std::size_t i = 0; i < hs.size(); ++i) labels_[hs[i]] = static_cast<int>(i) + 1;
  }
}

std::vector<int> levelMap(const BasepointedGraph& g) { return g.levels(); }

EdgeClass classifyEdge(const BasepointedGraph& g, EdgeId e) {
  auto [u, v] = g.endpoints(e);
  if (g.level(u) == g.level(v)) return {EdgeKind::Horizontal, -1, -1};
  if (g.level(u) > g.level(v)) return {EdgeKind::VerticalDescending, u, v};
  return {EdgeKind::VerticalDescending, v, u};
}

std::vector<VertexId> uniqueDescendingEdgeVertices(const BasepointedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertexCount(); ++v)
    if (v != g.basepoint() && g.descendingCount(v) == 1) out.push_back(v);
  return out;
}

Forest::Forest(std::vector<EdgeId> ids) : edges(std::move(ids)) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Forest::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool Forest::isSubsetOf(const Forest& other) const {
  return std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

bool isForest(const BasepointedGraph& g, const Forest& f) {
  DisjointSets sets(g.vertexCount());
  for (EdgeId e : f.edges) {
    if (e < 0 || e >= g.edgeCount()) return false;
    auto [u, v] = g.endpoints(e);
    if (!sets.unite(u, v)) return false;
  }
  return true;
}

CollapseResult collapseForestDetailed(const BasepointedGraph& g, const Forest& f) {
  if (!isForest(g, f)) throw NotAForest("edge set contains a cycle, a loop or an unknown edge");
  DisjointSets sets(g.vertexCount());
  for (EdgeId e : f.edges) sets.unite(g.endpoints(e).first, g.endpoints(e).second);

  // Components are numbered by their smallest vertex, in increasing order.
  std::vector<VertexId> vertexMap(g.vertexCount(), -1);
  std::vector<VertexId> rootIndex(g.vertexCount(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    int root = sets.find(v);
    if (rootIndex[root] < 0) rootIndex[root] = next++;
    vertexMap[v] = rootIndex[root];
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<EdgeId> edgeMap(g.edgeCount(), -1);
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    if (f.contains(e)) continue;
    edgeMap[e] = static_cast<EdgeId>(edges.size());
    edges.emplace_back(vertexMap[g.endpoints(e).first], vertexMap[g.endpoints(e).second]);
  }
  BasepointedGraph quotient(next, vertexMap[g.basepoint()], std::move(edges));
  return {std::move(quotient), std::move(vertexMap), std::move(edgeMap)};
}

BasepointedGraph collapseForest(const BasepointedGraph& g, const Forest& f) {
  return collapseForestDetailed(g, f).graph;
}

int forestHeight(const BasepointedGraph& g, const Forest& f) {
  if (f.empty()) throw EmptyForest("forest height of the empty forest");
  int best = g.maxLevel();
  for (EdgeId e : f.edges) {
    auto [u, v] = g.endpoints(e);
    best = std::min({best, g.level(u), g.level(v)});
  }
  return best;
}

bool isDescendingForest(const BasepointedGraph& g, const Forest& f) {
  if (!isForest(g, f)) throw NotAForest("edge set is not a forest");
  const int height = forestHeight(g, f);
  DisjointSets sets(g.vertexCount());
  for (EdgeId e : f.edges) sets.unite(g.endpoints(e).first, g.endpoints(e).second);
  std::vector<int> atHeight(g.vertexCount(), 0);
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (g.level(v) == height && ++atHeight[sets.find(v)] > 1) return false;
  }
  return true;
}

std::vector<Forest> enumerateForests(const BasepointedGraph& g) {
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.edgeCount(); ++e)
    if (!g.isLoop(e)) candidates.push_back(e);
  if (candidates.size() > 24) throw BoundExceeded("too many edges for forest enumeration");

  std::vector<Forest> out;
  const std::uint32_t limit = 1u << candidates.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1u << i)) ids.push_back(candidates[i]);
    Forest f(std::move(ids));
    if (isForest(g, f)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> multiplicities(const BasepointedGraph& g) {
  std::vector<std::vector<int>> m(g.vertexCount(), std::vector<int>(g.vertexCount(), 0));
  for (const auto& [u, v] : g.edges()) {
    ++m[u][v];
    if (u != v) ++m[v][u];
  }
  return m;
}

}  // namespace

CanonicalForm canonicalForm(const BasepointedGraph& g) {
  const int n = g.vertexCount();
  const auto m = multiplicities(g);

  // Refine by invariants, then search permutations only inside each class.
  using Key = std::vector<int>;
  std::vector<Key> keys(n);
  for (VertexId v = 0; v < n; ++v) {
    Key key{v == g.basepoint() ? 0 : 1, g.level(v), g.degree(v), m[v][v]};
    std::vector<int> neighbourhood;
    for (VertexId w = 0; w < n; ++w)
      if (w != v) neighbourhood.insert(neighbourhood.end(), m[v][w], g.level(w) * 1000 + g.degree(w));
    std::sort(neighbourhood.begin(), neighbourhood.end());
    key.insert(key.end(), neighbourhood.begin(), neighbourhood.end());
    keys[v] = std::move(key);
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });

  std::vector<std::pair<int, int>> groups;  // [begin, end) ranges of equal keys
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && keys[order[j]] == keys[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::vector<int> best;
  auto encode = [&](const std::vector<VertexId>& perm) {
    std::vector<int> code;
    code.reserve(1 + n * (n + 1) / 2);
    code.push_back(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) code.push_back(m[perm[i]][perm[j]]);
    return code;
  };

  // Odometer over the permutations of every group.
  std::vector<VertexId> perm = order;
  for (auto& [b, e] : groups) std::sort(perm.begin() + b, perm.begin() + e);
  while (true) {
    auto code = encode(perm);
    if (best.empty() || code < best) best = std::move(code);
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [b, e] = groups[gi];
      if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
    }
    if (gi == groups.size()) break;
  }
  return CanonicalForm{std::move(best)};
}

bool isomorphic(const BasepointedGraph& a, const BasepointedGraph& b) {
  if (a.vertexCount() != b.vertexCount() || a.edgeCount() != b.edgeCount()) return false;
  return canonicalForm(a) == canonicalForm(b);
}

BasepointedGraph graphFromMultiplicities(const std::vector<std::vector<int>>& m,
                                         const GraphOptions& options) {
  const int n = static_cast<int>(m.size());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int c = 0; c < m[i][j]; ++c) edges.emplace_back(i, j);
  return BasepointedGraph(n, 0, std::move(edges), options);
}

BasepointedGraph graphFromCanonicalForm(const CanonicalForm& form, const GraphOptions& options) {
  if (form.code.empty()) throw InvalidGraph("empty canonical form");
  const int n = form.code[0];
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m[i][j] = m[j][i] = form.code.at(pos++);
    }
  return graphFromMultiplicities(m, options);
}

}  // namespace morsespine
