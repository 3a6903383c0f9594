#include <doctest.h>

#include <random>

#include "morsespine/blowup.hpp"
#include "morsespine/error.hpp"
#include "morsespine/harness.hpp"
#include "morsespine/height.hpp"
#include "morsespine/io.hpp"
#include "oracles.hpp"

using namespace morsespine;

namespace {

HeightVector vec(std::vector<std::int64_t> head) { return HeightVector{std::move(head), {0, 0}}; }

// p-v, v-w twice, loop at v, loop at w: v on level 1 with degree 5, w on level 2 with degree 4
BasepointedGraph twoLevels() { return BasepointedGraph(3, 0, {{0, 1}, {1, 2}, {1, 2}, {1, 1}, {2, 2}}); }

// three p-v edges and a loop at v
BasepointedGraph fivefold() { return BasepointedGraph(2, 0, {{0, 1}, {0, 1}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("height examples") {
  const auto rose = height(builtinGraph("rose2"));
  CHECK(rose.head == std::vector<std::int64_t>{0});
  CHECK(rose.tail == std::pair<std::int64_t, std::int64_t>{0, 4});
  const auto t = height(builtinGraph("theta"));
  CHECK(t.head == std::vector<std::int64_t>{1, -1, 3});
  CHECK(t.tail == std::pair<std::int64_t, std::int64_t>{0, 6});
  const auto g = height(builtinGraph("G3"));
  CHECK(g.head == std::vector<std::int64_t>{3, -1, 5, -1, 4});
  CHECK(g.tail == std::pair<std::int64_t, std::int64_t>{0, 8});
  CHECK(toString(t) == "(1, -1, 3) tail (0,6)");
  const auto reduced = height(builtinGraph("G3"), HeightConvention::ReducedDegree);
  CHECK(reduced.head == std::vector<std::int64_t>{3, -1, 1, -1, 0});
  CHECK(reduced.tail == std::pair<std::int64_t, std::int64_t>{0, 2});
}

TEST_CASE("height agrees with direct evaluation") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 5))
      for (bool reduced : {false, true}) {
        const auto h = height(g, reduced ? HeightConvention::ReducedDegree : HeightConvention::Literal);
        const int length = 2 * g.vertexCount() + 6;
        const auto expected = oracle::heightPrefix(g, reduced, length);
        for (int i = 0; i < length; ++i) CHECK(h.at(static_cast<std::size_t>(i)) == expected[i]);
      }
}

TEST_CASE("lexicographic chain (2,-5,4) > (1,-3,6) > (1,-3,3)") {
  CHECK(compareHeights(vec({2, -5, 4}), vec({1, -3, 6})) == std::strong_ordering::greater);
  CHECK(compareHeights(vec({1, -3, 6}), vec({1, -3, 3})) == std::strong_ordering::greater);
  CHECK(compareHeights(vec({2, -5, 4}), vec({1, -3, 3})) == std::strong_ordering::greater);
  CHECK(compareHeights(vec({1, -3, 3}), vec({1, -3, 3})) == std::strong_ordering::equal);
}

TEST_CASE("comparison reaches into the tail") {
  HeightVector a{{1}, {0, 6}}, b{{1, 0}, {0, 4}};
  CHECK((a > b));
  HeightVector c{{1, 0, 6}, {0, 6}};
  CHECK((a == c));
}

TEST_CASE("height comparison is a total order on random vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 4), entry(-2, 2);
  auto draw = [&] {
    HeightVector h;
    for (int i = len(rng); i > 0; --i) h.head.push_back(entry(rng));
    h.tail = {entry(rng), entry(rng)};
    return h;
  };
  auto expand = [](const HeightVector& h) {
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < 12; ++i) s.push_back(h.at(i));
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = draw(), b = draw(), c = draw();
    const auto ab = compareHeights(a, b), ba = compareHeights(b, a);
    CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
    CHECK((ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal));
    CHECK((ab == std::strong_ordering::less) == (expand(a) < expand(b)));
    if (a < b && b < c) CHECK((a < c));
    if (a == b && b == c) CHECK((a == c));
  }
}

TEST_CASE("blow-ups of G4") {
  const auto g4 = builtinGraph("G4");
  const auto sep = parseBlowUp(g4, {"1:1,3|2,4"});
  const auto sepGraph = blowUp(g4, sep);
  CHECK(sepGraph.vertexCount() == 3);
  CHECK(sepGraph.level(1) == 1);
  CHECK(sepGraph.level(2) == 1);
  CHECK(height(g4).at(1) == -1);
  CHECK(height(sepGraph).at(1) == -2);
  CHECK(separatesAt(g4, sep, 1));
  CHECK(isDescendingBlowUp(g4, sep));
  CHECK(blowUpHeightLevel(sep, g4) == 1);

  const auto stay = parseBlowUp(g4, {"1:1,2|3,4"});
  const auto stayGraph = blowUp(g4, stay);
  std::vector<int> levels = stayGraph.levels();
  std::sort(levels.begin(), levels.end());
  CHECK(levels == std::vector<int>{0, 1, 2});
  CHECK(height(g4).at(2) == 2);
  CHECK(height(stayGraph).at(2) == 5);
  CHECK_FALSE(separatesAt(g4, stay, 1));
  CHECK_FALSE(isDescendingBlowUp(g4, stay));
}

TEST_CASE("blow-up errors") {
  const auto t = builtinGraph("theta");
  CHECK_THROWS_AS(blowUp(t, GraphBlowUp{}), InvalidBlowUp);
  const auto g4 = builtinGraph("G4");
  CHECK_THROWS_AS(parseBlowUp(g4, {"1:1,3|2,4,5"}), WrongArity);
  CHECK_THROWS_AS(parseBlowUp(g4, {"1:1,3|2"}), InvalidPartition);
  CHECK_THROWS_AS(parseBlowUp(g4, {"1-1,3|2,4"}), ParseError);
  CHECK_THROWS_AS(blowUp(g4, parseBlowUp(g4, {"1:1,3|2,4", "1:1,2|3,4"})), IncompatiblePartitions);
  const auto rose = builtinGraph("rose3");
  CHECK_THROWS_AS(blowUp(rose, parseBlowUp(rose, {"0:1,2|3,4,5,6"})), InvalidBlowUp);
  CHECK_THROWS_AS(parseBlowUp(g4, {"5:1,3|2,4"}), InvalidBlowUp);
}

TEST_CASE("separation and blow-up height level") {
  const auto five = fivefold();
  CHECK(five.descendingCount(1) == 3);
  CHECK(separatesAt(five, parseBlowUp(five, {"1:1,4|2,3,5"}), 1));
  CHECK_FALSE(separatesAt(five, parseBlowUp(five, {"1:1,2,3|4,5"}), 1));

  const auto g = twoLevels();
  REQUIRE(g.level(1) == 1);
  REQUIRE(g.level(2) == 2);
  const auto both = parseBlowUp(g, {"1:1,2|3,4,5", "2:1,3|2,4"});
  CHECK(blowUpHeightLevel(both, g) == 1);
  CHECK(separatesAt(g, both, 2));
  CHECK_FALSE(isDescendingBlowUp(g, both));
  CHECK((height(blowUp(g, both), HeightConvention::ReducedDegree) > height(g, HeightConvention::ReducedDegree)));
  const auto upper = parseBlowUp(g, {"2:1,3|2,4"});
  CHECK(blowUpHeightLevel(upper, g) == 2);
  CHECK(isDescendingBlowUp(g, upper));
}

TEST_CASE("collapsing the new edges undoes a blow-up") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 4))
      for (const auto& b : enumerateBlowUps(g).blowUps) {
        const auto r = blowUpDetailed(g, b);
        INFO(graphKey(g) << " " << formatBlowUp(b));
        std::size_t parts = 0;
        for (const auto& [v, c] : b.perVertex) parts += c.partitions.size();
        CHECK(r.newEdges.size() == parts);
        CHECK(r.graph.vertexCount() == g.vertexCount() + static_cast<int>(parts));
        CHECK(r.graph.rank() == rank);
        CHECK(isomorphic(collapseForest(r.graph, Forest(r.newEdges)), g));
      }
}

TEST_CASE("blow-up height lemma under the reduced convention") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 4))
      for (const auto& b : enumerateBlowUps(g).blowUps) {
        INFO(graphKey(g) << " " << formatBlowUp(b));
        const int sign = oracle::compareGraphHeights(blowUp(g, b), g, true);
        CHECK(sign == (isDescendingBlowUp(g, b) ? -1 : 1));
      }
}

TEST_CASE("literal convention counterexamples") {
  // separating blow-up whose literal height goes up
  const auto g3 = builtinGraph("G3");
  const auto b = parseBlowUp(g3, {"2:1,3|2,4"});
  CHECK(isDescendingBlowUp(g3, b));
  CHECK((height(blowUp(g3, b)) > height(g3)));
  CHECK((height(blowUp(g3, b), HeightConvention::ReducedDegree) < height(g3, HeightConvention::ReducedDegree)));

  // collapse of a level-1 edge touching both level-2 vertices
  const auto rise = builtinGraph("collapse-rise");
  const Forest f({3});
  CHECK(isDescendingForest(rise, f) == false);
  CHECK((height(collapseForest(rise, f)) < height(rise)));
  CHECK((height(collapseForest(rise, f), HeightConvention::ReducedDegree) >
        height(rise, HeightConvention::ReducedDegree)));
}

TEST_CASE("forest height lemma under the reduced convention") {
  for (int rank : {2, 3})
    for (const auto& g : enumerateGraphs(rank, 4))
      for (const auto& f : enumerateForests(g)) {
        const int sign = oracle::compareGraphHeights(collapseForest(g, f), g, true);
        CHECK(sign == (isDescendingForest(g, f) ? -1 : 1));
      }
}
