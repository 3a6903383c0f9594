#pragma once

#include <cstddef>
#include <vector>

#include "morsespine/blowup.hpp"
#include "morsespine/complex.hpp"
#include "morsespine/graph.hpp"
#include "morsespine/height.hpp"
#include "morsespine/poset.hpp"
#include "morsespine/sigma.hpp"

namespace morsespine {

struct EnumerationOptions {
  int minBasepointDegree = 1;
  int vertexBound = 6;  // largest maxVertices accepted
};

/// One representative per isomorphism class of valid graphs of the given rank
/// with 1..maxVertices vertices, ordered by vertex count, then canonical code.
/// Throws BadRange if rank < 2, BoundExceeded if maxVertices > vertexBound.
std::vector<BasepointedGraph> enumerateGraphs(int rank, int maxVertices,
                                              const EnumerationOptions& options = {});

/// P(Γ): nonempty descending forests ordered by inclusion.
struct DownLink {
  std::vector<Forest> forests;
  Poset poset;
  SimplicialComplex complex;  // order complex
};

DownLink downLinkDetailed(const BasepointedGraph& g);
SimplicialComplex downLink(const BasepointedGraph& g);

enum class SbuMode { Strict, Weak };
const char* toString(SbuMode m);
SbuMode sbuModeFromString(const std::string& s);

/// Join of SBU(v) over the non-basepoint vertices. Strict uses Σ(degree, d);
/// Weak uses the order complex of the some-partition-splits poset.
SimplicialComplex upLinkModel(const BasepointedGraph& g, SbuMode mode = SbuMode::Strict);

struct BlowUpCaps {
  int maxPartitionsPerVertex = 2;  // 0 = unbounded
  int maxVertexDegree = 6;         // vertices above this stay trivial
  std::size_t maxElements = 200000;
};

struct BlowUpEnumeration {
  std::vector<GraphBlowUp> blowUps;  // nontrivial, in lexicographic order
  bool truncated = false;            // some caps cut the space down
};

/// Every nontrivial GraphBlowUp allowed by the caps. Throws BoundExceeded when
/// the product would exceed caps.maxElements.
BlowUpEnumeration enumerateBlowUps(const BasepointedGraph& g, const BlowUpCaps& caps = {});

enum class UpLinkSelection { Strict, Weak, HeightBased };
const char* toString(UpLinkSelection s);

/// f selected when some vertex of level D(f) has a component in SBU(v):
/// every partition splits (Strict), some partition splits (Weak); or when the
/// blow-up lowers the height (HeightBased).
bool inUpLink(const BasepointedGraph& g, const GraphBlowUp& f, UpLinkSelection selection,
              HeightConvention convention = HeightConvention::Literal);

struct UpLinkPoset {
  std::vector<GraphBlowUp> elements;
  Poset poset;
  SimplicialComplex complex;
  bool truncated = false;
};

UpLinkPoset upLinkPosetDetailed(const BasepointedGraph& g, const BlowUpCaps& caps = {},
                                UpLinkSelection selection = UpLinkSelection::Strict,
                                HeightConvention convention = HeightConvention::Literal);
SimplicialComplex upLinkPoset(const BasepointedGraph& g, const BlowUpCaps& caps = {});

/// join(upLinkModel(g), downLink(g)).
SimplicialComplex descendingLink(const BasepointedGraph& g, SbuMode mode = SbuMode::Strict);

}  // namespace morsespine
