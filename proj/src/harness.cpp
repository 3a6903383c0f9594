#include "morsespine/harness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "morsespine/error.hpp"

namespace morsespine {

namespace {

bool connected(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && m[u][w] > 0) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

void enumerateMatrices(int vertices, int edges, int minBasepointDegree,
                       const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < vertices; ++i)
    for (int j = i; j < vertices; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<int>> m(vertices, std::vector<int>(vertices, 0));
  std::vector<int> degree(vertices, 0);

  // Slots are filled row by row, so vertex i is final once row i is done.
  std::function<void(std::size_t, int)> fill = [&](std::size_t slot, int left) {
    if (slot == slots.size()) {
      if (left != 0) return;
      if (degree[0] < minBasepointDegree) return;
      for (int v = 1; v < vertices; ++v)
        if (degree[v] < 3) return;
      if (connected(m)) emit(m);
      return;
    }
    const auto [i, j] = slots[slot];
    if (j == i && i > 0) {
      // every slot touching vertex i-1 is assigned by now
      if (i - 1 > 0 && degree[i - 1] < 3) return;
      if (i - 1 == 0 && degree[0] < minBasepointDegree) return;
    }
    for (int c = 0; c <= left; ++c) {
      m[i][j] = m[j][i] = c;
      degree[i] += (i == j ? 2 : 1) * c;
      if (i != j) degree[j] += c;
      fill(slot + 1, left - c);
      degree[i] -= (i == j ? 2 : 1) * c;
      if (i != j) degree[j] -= c;
    }
    m[i][j] = m[j][i] = 0;
  };
  fill(0, edges);
}

}  // namespace

std::vector<BasepointedGraph> enumerateGraphs(int rank, int maxVertices,
                                              const EnumerationOptions& options) {
  if (rank < 2) throw BadRange("enumerateGraphs: rank must be at least 2");
  if (maxVertices < 1) throw BadRange("enumerateGraphs: maxVertices must be positive");
  if (maxVertices > options.vertexBound)
    throw BoundExceeded("enumerateGraphs: maxVertices " + std::to_string(maxVertices) +
                        " exceeds the vertex bound " + std::to_string(options.vertexBound));
  GraphOptions graphOptions;
  graphOptions.minBasepointDegree = options.minBasepointDegree;
  graphOptions.expectedRank = rank;

  std::vector<BasepointedGraph> out;
  for (int vertices = 1; vertices <= maxVertices; ++vertices) {
    std::set<CanonicalForm> forms;
    enumerateMatrices(vertices, rank + vertices - 1, options.minBasepointDegree,
                      [&](const std::vector<std::vector<int>>& m) {
                        forms.insert(canonicalForm(graphFromMultiplicities(m, graphOptions)));
                      });
    for (const auto& form : forms) out.push_back(graphFromCanonicalForm(form, graphOptions));
  }
  return out;
}

DownLink downLinkDetailed(const BasepointedGraph& g) {
  DownLink out;
  for (auto& f : enumerateForests(g))
    if (isDescendingForest(g, f)) out.forests.push_back(std::move(f));
  const auto& fs = out.forests;
  out.poset = Poset::fromRelation(static_cast<int>(fs.size()), [&](int a, int b) {
    return fs[a].size() < fs[b].size() && fs[a].isSubsetOf(fs[b]);
  });
  out.complex = orderComplex(out.poset);
  return out;
}

SimplicialComplex downLink(const BasepointedGraph& g) { return downLinkDetailed(g).complex; }

const char* toString(SbuMode m) { return m == SbuMode::Strict ? "strict" : "weak"; }

SbuMode sbuModeFromString(const std::string& s) {
  if (s == "strict") return SbuMode::Strict;
  if (s == "weak") return SbuMode::Weak;
  throw ParseError("unknown SBU mode '" + s + "' (expected strict or weak)");
}

SimplicialComplex upLinkModel(const BasepointedGraph& g, SbuMode mode) {
  SimplicialComplex out;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (v == g.basepoint()) continue;
    if (mode == SbuMode::Strict)
      out = join(out, sbuComplex(g, v).complex);
    else
      out = join(out, orderComplex(sbuWeakPoset(g, v).poset));
  }
  return out;
}

BlowUpEnumeration enumerateBlowUps(const BasepointedGraph& g, const BlowUpCaps& caps) {
  BlowUpEnumeration out;
  std::vector<std::vector<BlowUpAtVertex>> options;
  std::vector<VertexId> where;
  std::size_t product = 1;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (v == g.basepoint() || g.degree(v) < 4) continue;
    if (caps.maxVertexDegree > 0 && g.degree(v) > caps.maxVertexDegree) {
      out.truncated = true;
      continue;
    }
    auto bu = buPoset(g, v, caps.maxPartitionsPerVertex);
    out.truncated = out.truncated || bu.truncated;
    product *= bu.elements.size() + 1;
    if (caps.maxElements > 0 && product > caps.maxElements + 1)
      throw BoundExceeded("blow-up space exceeds " + std::to_string(caps.maxElements) + " elements");
    options.push_back(std::move(bu.elements));
    where.push_back(v);
  }
  std::vector<std::size_t> pick(options.size(), 0);  // 0 = trivial
  while (true) {
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] <= options[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
    GraphBlowUp b;
    for (std::size_t j = 0; j < pick.size(); ++j)
      if (pick[j] > 0) b.perVertex.emplace(where[j], options[j][pick[j] - 1]);
    out.blowUps.push_back(std::move(b));
  }
  std::sort(out.blowUps.begin(), out.blowUps.end());
  return out;
}

const char* toString(UpLinkSelection s) {
  switch (s) {
    case UpLinkSelection::Strict:
      return "strict";
    case UpLinkSelection::Weak:
      return "weak";
    case UpLinkSelection::HeightBased:
      break;
  }
  return "height";
}

bool inUpLink(const BasepointedGraph& g, const GraphBlowUp& f, UpLinkSelection selection,
              HeightConvention convention) {
  if (f.trivial()) return false;
  if (selection == UpLinkSelection::HeightBased)
    return height(blowUp(g, f), convention) < height(g, convention);
  const int bottom = blowUpHeightLevel(f, g);
  for (const auto& [v, component] : f.perVertex) {
    if (g.level(v) != bottom) continue;
    const LabelSet down = descendingLabels(g, v);
    const auto& ps = component.partitions;
    auto split = [&](const TwoBlockPartition& p) { return splits(p, down); };
    const bool ok = selection == UpLinkSelection::Strict ? std::all_of(ps.begin(), ps.end(), split)
                                                         : std::any_of(ps.begin(), ps.end(), split);
    if (ok) return true;
  }
  return false;
}

UpLinkPoset upLinkPosetDetailed(const BasepointedGraph& g, const BlowUpCaps& caps,
                                UpLinkSelection selection, HeightConvention convention) {
  UpLinkPoset out;
  auto space = enumerateBlowUps(g, caps);
  out.truncated = space.truncated;
  for (auto& b : space.blowUps)
    if (inUpLink(g, b, selection, convention)) out.elements.push_back(std::move(b));
  const auto& es = out.elements;
  out.poset = Poset::fromRelation(static_cast<int>(es.size()), [&](int a, int b) {
    return es[a] != es[b] && es[a].lessOrEqual(es[b]);
  });
  out.complex = orderComplex(out.poset);
  return out;
}

SimplicialComplex upLinkPoset(const BasepointedGraph& g, const BlowUpCaps& caps) {
  return upLinkPosetDetailed(g, caps).complex;
}

SimplicialComplex descendingLink(const BasepointedGraph& g, SbuMode mode) {
  return join(upLinkModel(g, mode), downLink(g));
}

}  // namespace morsespine
