#include <doctest.h>

#include <random>

#include "morsespine/collapse.hpp"
#include "morsespine/complex.hpp"
#include "morsespine/error.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/poset.hpp"
#include "morsespine/smith.hpp"
#include "oracles.hpp"

using namespace morsespine;

namespace {

std::string shape(const SimplicialComplex& x) { return classifyProfile(reducedHomology(x)).toString(); }

std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// six-vertex triangulation of the projective plane
SimplicialComplex projectivePlane() {
  return SimplicialComplex::fromFacets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

SimplicialComplex randomComplex(std::mt19937& rng, int vertices, int facets, int maxDim) {
  std::uniform_int_distribution<int> pick(0, vertices - 1), dim(0, maxDim);
  std::vector<Simplex> fs;
  for (int i = 0; i < facets; ++i) {
    std::set<int> s;
    const int d = dim(rng);
    while (static_cast<int>(s.size()) < d + 1) s.insert(pick(rng));
    fs.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex::fromFacets(vertices, fs);
}

}  // namespace

TEST_CASE("complex construction") {
  const auto x = SimplicialComplex::fromFacets(4, {{0, 1, 2}, {2, 3}});
  CHECK(x.fVector() == std::vector<std::size_t>{4, 4, 1});
  auto facets = x.facets();
  std::sort(facets.begin(), facets.end());
  CHECK(facets == std::vector<Simplex>{{0, 1, 2}, {2, 3}});
  CHECK(x.contains({0, 2}));
  CHECK_FALSE(x.contains({1, 3}));
  CHECK(SimplicialComplex(3).isVoid());
  CHECK_THROWS_AS(SimplicialComplex::fromFacets(2, {{0, 5}}), InvalidComplex);
  CHECK(fullSimplex(3).fVector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(simplexBoundary(3).fVector() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("order complexes") {
  CHECK(orderComplex(Poset(3, {{0, 1}, {1, 2}})).fVector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(orderComplex(Poset(3, {})).fVector() == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), InvalidPoset);
  const Poset p(4, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(p.above(0) == std::vector<int>{1, 2});
  // face poset of a complex realizes its barycentric subdivision
  const auto sd = orderComplex(facePoset(simplexBoundary(3)));
  CHECK(sd.fVector() == std::vector<std::size_t>{6, 6});
  CHECK(shape(sd) == "Wedge(1,1)");
}

TEST_CASE("joins") {
  const auto s0 = SimplicialComplex::fromFacets(2, {{0}, {1}});
  CHECK(join(SimplicialComplex(0), s0) == s0);
  CHECK(join(s0, SimplicialComplex(0)).fVector() == s0.fVector());
  const auto circle = join(s0, s0);
  CHECK(circle.fVector() == std::vector<std::size_t>{4, 4});
  CHECK(shape(circle) == "Wedge(1,1)");
  const auto three = SimplicialComplex::fromFacets(3, {{0}, {1}, {2}});
  CHECK(shape(join(three, three)) == "Wedge(1,4)");
}

TEST_CASE("join multiplies wedge counts and adds dimensions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(0, 2), count(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int i = dim(rng), a = count(rng), j = dim(rng), b = count(rng);
    const auto x = oracle::wedgeOfSpheres(i, a), y = oracle::wedgeOfSpheres(j, b);
    REQUIRE(shape(x) == Classification{Shape::Wedge, i, static_cast<std::size_t>(a)}.toString());
    const auto c = classifyProfile(reducedHomology(join(x, y)));
    CHECK(c == Classification{Shape::Wedge, i + j + 1, static_cast<std::size_t>(a * b)});
  }
}

TEST_CASE("links and stars") {
  const auto tri = simplexBoundary(3);
  CHECK(link(tri, {0}).fVector() == std::vector<std::size_t>{2});
  CHECK(collapsesToPoint(star(tri, {1})));
  CHECK_THROWS_AS(link(tri, {0, 1, 2}), SimplexAbsent);
  const auto rp2 = projectivePlane();
  for (int v = 0; v < 6; ++v) CHECK(shape(link(rp2, {v})) == "Wedge(1,1)");
}

TEST_CASE("Smith normal form examples") {
  CHECK(smithNormalForm(IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).factors == big({1, 1, 1}));
  CHECK(smithNormalForm(IntegerMatrix{{0, 0}, {0, 0}}).rank() == 0);
  CHECK(smithNormalForm(IntegerMatrix{{2, 4}, {6, 8}}).factors == big({2, 4}));
  CHECK(smithNormalForm(IntegerMatrix{}).rank() == 0);
  CHECK(smithNormalForm(IntegerMatrix{{6}}).factors == big({6}));
}

TEST_CASE("Smith normal form agrees with both oracles") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = oracle::randomMatrix(rng, 5, 10);
    const auto expected = oracle::smithByReduction(m);
    CHECK(smithNormalForm(m).factors == expected);
    CHECK(oracle::smithByMinors(m) == expected);
    SparseMatrix s;
    s.rows = static_cast<int>(m.size());
    s.columns.resize(m[0].size());
    for (std::size_t j = 0; j < m[0].size(); ++j)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][j] != 0) s.columns[j].emplace_back(static_cast<int>(i), m[i][j]);
    CHECK(smithNormalForm(s).factors == expected);
  }
}

TEST_CASE("Smith normal form survives 64-bit overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  const IntegerMatrix m{{big, big + 1, 3}, {big - 7, big, 5}, {11, 13, big}};
  CHECK(smithNormalForm(m).factors == oracle::smithByReduction(m));
}

TEST_CASE("reduced homology examples") {
  const auto tri = simplexBoundary(3);
  auto h = reducedHomology(tri);
  CHECK(h.degree(1).rank == 1);
  CHECK(h.degree(0).isZero());
  CHECK(h.degree(-1).isZero());
  CHECK(shape(SimplicialComplex::fromFacets(2, {{0}, {1}})) == "Wedge(0,1)");
  CHECK(shape(SimplicialComplex::fromFacets(3, {{0}, {1}, {2}})) == "Wedge(0,2)");
  CHECK(shape(SimplicialComplex(0)) == "Void");
  CHECK(reducedHomology(SimplicialComplex(0)).degree(-1).rank == 1);
  CHECK(shape(fullSimplex(4)) == "AcyclicPoint");
  const auto rp2 = reducedHomology(projectivePlane());
  CHECK(rp2.degree(1).rank == 0);
  CHECK(rp2.degree(1).torsion == big({2}));
  CHECK(classifyProfile(rp2).shape == Shape::Other);
  CHECK(eulerConsistent(rp2));
}

TEST_CASE("sphericity predicate") {
  CHECK(isSphericalOfDimension({Shape::Void, -1, 1}, -1));
  CHECK_FALSE(isSphericalOfDimension({Shape::Void, -1, 1}, 0));
  CHECK(isSphericalOfDimension({Shape::AcyclicPoint, 0, 0}, 3));
  CHECK(isSphericalOfDimension({Shape::Wedge, 2, 5}, 2));
  CHECK_FALSE(isSphericalOfDimension({Shape::Wedge, 1, 5}, 2));
  CHECK_FALSE(isSphericalOfDimension({Shape::Other, 0, 0}, 0));
}

TEST_CASE("homology agrees with rational Betti numbers on random complexes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = randomComplex(rng, 7, 6, 3);
    const auto h = reducedHomology(x);
    const auto betti = oracle::reducedBetti(x);
    for (int d = -1; d + 1 < static_cast<int>(betti.size()); ++d)
      CHECK(static_cast<long long>(h.degree(d).rank) == betti[d + 1]);
    CHECK(eulerConsistent(h));
  }
}

TEST_CASE("free-face collapse") {
  CHECK(freeFaceCollapse(fullSimplex(4)).fVector() == std::vector<std::size_t>{1});
  CHECK(freeFaceCollapse(simplexBoundary(3)) == simplexBoundary(3));
  CHECK(collapsesToPoint(SimplicialComplex::fromFacets(1, {{0}})));
  CHECK_FALSE(collapsesToPoint(SimplicialComplex(0)));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = randomComplex(rng, 7, 6, 3);
    CHECK(reducedHomology(freeFaceCollapse(x)).sameHomology(reducedHomology(x)));
  }
}

TEST_CASE("homology is invariant under relabelling") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = randomComplex(rng, 6, 5, 2);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(reducedHomology(relabel(x, perm, 6)).sameHomology(reducedHomology(x)));
  }
}
