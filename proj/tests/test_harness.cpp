#include <doctest.h>

#include "morsespine/collapse.hpp"
#include "morsespine/error.hpp"
#include "morsespine/harness.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/io.hpp"
#include "oracles.hpp"

using namespace morsespine;

namespace {

Classification classOf(const SimplicialComplex& x) { return classifyProfile(reducedHomology(x)); }

int degreeSum(const BasepointedGraph& g) { return static_cast<int>(height(g).head[0]); }

}  // namespace

TEST_CASE("graph enumeration matches brute force") {
  for (int rank : {2, 3})
    for (int V = 1; V <= 4; ++V) {
      const auto expected = oracle::graphClasses(rank, V);
      std::set<std::vector<int>> seen;
      std::size_t count = 0;
      for (const auto& g : enumerateGraphs(rank, V))
        if (g.vertexCount() == V) {
          ++count;
          CHECK(g.rank() == rank);
          seen.insert(oracle::bruteCanonical(g));
        }
      INFO("rank " << rank << " V " << V);
      CHECK(count == expected.size());
      CHECK(seen == expected);
    }
  CHECK(enumerateGraphs(2, 1).size() == 1);
  CHECK(enumerateGraphs(2, 2).size() == 5);
}

TEST_CASE("graph enumeration bounds") {
  CHECK_THROWS_AS(enumerateGraphs(1, 2), BadRange);
  CHECK_THROWS_AS(enumerateGraphs(2, 7), BoundExceeded);
  EnumerationOptions strict;
  strict.minBasepointDegree = 2;
  for (const auto& g : enumerateGraphs(2, 3, strict)) CHECK(g.degree(g.basepoint()) >= 2);
}

TEST_CASE("down-link examples") {
  const auto theta = downLinkDetailed(builtinGraph("theta"));
  CHECK(theta.forests.size() == 3);
  CHECK(theta.complex.fVector() == std::vector<std::size_t>{3});
  CHECK(classOf(theta.complex).toString() == "Wedge(0,2)");
  CHECK(downLink(builtinGraph("rose2")).isVoid());
  const auto ude = downLink(builtinGraph("ude"));
  CHECK(ude.fVector() == std::vector<std::size_t>{1});
  CHECK(collapsesToPoint(ude));
}

TEST_CASE("down-links are spherical or contractible") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 4)) {
      const auto c = classOf(downLink(g));
      INFO(graphKey(g) << " " << c.toString());
      CHECK(c.shape != Shape::Other);
      CHECK((isSphericalOfDimension(c, g.vertexCount() - 2) || isAcyclic(c)));
      if (!uniqueDescendingEdgeVertices(g).empty()) CHECK(isAcyclic(c));
    }
}

TEST_CASE("up-link model examples") {
  CHECK(upLinkModel(builtinGraph("theta")).isVoid());
  CHECK(upLinkModel(builtinGraph("rose3")).isVoid());
  const auto g4 = builtinGraph("G4");
  CHECK(classOf(upLinkModel(g4)).toString() == "Wedge(0,1)");
  CHECK(classOf(upLinkModel(g4, SbuMode::Weak)).toString() == "Wedge(0,1)");
}

TEST_CASE("up-link poset examples") {
  CHECK(upLinkPoset(builtinGraph("theta")).isVoid());
  const auto g4 = builtinGraph("G4");
  const auto l = upLinkPosetDetailed(g4);
  CHECK(l.elements.size() == 2);
  CHECK(reducedHomology(l.complex).sameHomology(reducedHomology(upLinkModel(g4))));
  // degree-4 vertex with a single descending edge
  const auto u = builtinGraph("ude4");
  const auto c = classOf(upLinkPoset(u));
  const int k = degreeSum(u);
  CHECK((c.shape == Shape::Void || c.shape == Shape::AcyclicPoint ||
         (c.shape == Shape::Wedge && c.dimension < k - u.vertexCount())));
}

TEST_CASE("up-link poset matches the model on small graphs") {
  for (const auto& g : enumerateGraphs(2, 3))
    for (auto sel : {UpLinkSelection::Strict, UpLinkSelection::Weak}) {
      const auto l = upLinkPosetDetailed(g, BlowUpCaps{0, 0, 200000}, sel);
      INFO(graphKey(g));
      CHECK_FALSE(l.truncated);
      CHECK(reducedHomology(l.complex).sameHomology(reducedHomology(upLinkModel(g))));
    }
}

TEST_CASE("blow-up enumeration") {
  const auto g4 = builtinGraph("G4");
  const auto all = enumerateBlowUps(g4);
  CHECK(all.blowUps.size() == 3);
  CHECK_FALSE(all.truncated);
  CHECK(enumerateBlowUps(builtinGraph("theta")).blowUps.empty());
  CHECK_THROWS_AS(enumerateBlowUps(builtinGraph("G3"), BlowUpCaps{0, 0, 1}), BoundExceeded);
  const BasepointedGraph five(2, 0, {{0, 1}, {0, 1}, {0, 1}, {1, 1}});
  CHECK(enumerateBlowUps(five, BlowUpCaps{0, 0, 1000}).blowUps.size() == 22);
  CHECK(enumerateBlowUps(five, BlowUpCaps{1, 0, 1000}).blowUps.size() == 10);
  CHECK(enumerateBlowUps(five, BlowUpCaps{1, 4, 1000}).blowUps.empty());
}

TEST_CASE("descending link examples") {
  const auto t = descendingLink(builtinGraph("theta"));
  CHECK(t.fVector() == std::vector<std::size_t>{3});
  CHECK(isAcyclic(classOf(descendingLink(builtinGraph("ude")))));
  const auto g4 = classOf(descendingLink(builtinGraph("G4")));
  CHECK(g4.shape == Shape::Wedge);
  CHECK(g4.dimension == 1);
  CHECK(g4.count >= 1);
}

TEST_CASE("descending links are spherical or contractible") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 4)) {
      const auto c = classOf(descendingLink(g));
      INFO(graphKey(g));
      CHECK((isSphericalOfDimension(c, degreeSum(g) - 1) || isAcyclic(c)));
    }
}
