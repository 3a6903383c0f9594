// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "morsespine/blowup.hpp"
#include "morsespine/collapse.hpp"
#include "morsespine/harness.hpp"
#include "morsespine/height.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/io.hpp"
#include "morsespine/sigma.hpp"
#include "morsespine/verify.hpp"
#include "oracles.hpp"

using namespace morsespine;

namespace {

std::size_t profilesBuilt = 0;
std::size_t eulerFailures = 0;

HomologyProfile profile(const SimplicialComplex& x) {
  auto h = reducedHomology(x);
  ++profilesBuilt;
  if (!eulerConsistent(h)) ++eulerFailures;
  return h;
}

Classification classify(const SimplicialComplex& x) { return classifyProfile(profile(x)); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d %s  %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

void supplement(const std::string& title, const Outcome& o) {
  std::printf("  supplementary %s  %s: %s\n", o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
}

std::vector<BasepointedGraph> family(std::vector<int> ranks, int maxV) {
  std::vector<BasepointedGraph> out;
  for (int r : ranks)
    for (auto& g : enumerateGraphs(r, maxV)) out.push_back(std::move(g));
  return out;
}

long long d0(const BasepointedGraph& g) { return oracle::heightPrefix(g, false, 1)[0]; }

bool oracleSeparates(const BasepointedGraph& g, const GraphBlowUp& b) {
  const auto level = oracle::bfsLevels(g.vertexCount(), g.basepoint(), g.edges());
  int bottom = 1 << 30;
  for (const auto& [v, c] : b.perVertex) bottom = std::min(bottom, level[v]);
  for (const auto& [v, c] : b.perVertex) {
    if (level[v] != bottom) continue;
    int down = 0;
    for (auto [x, y] : g.edges()) {
      if (x == v && level[y] < level[v]) ++down;
      if (y == v && level[x] < level[v]) ++down;
    }
    const unsigned s = (1u << down) - 1;
    for (const auto& p : c.partitions)
      if ((s & p.a()) != 0 && (s & p.aBar()) != 0) return true;
  }
  return false;
}

Outcome forestLemma(bool reduced, const std::vector<BasepointedGraph>& graphs) {
  std::size_t forests = 0, mismatches = 0, zero = 0;
  std::string witness;
  for (const auto& g : graphs)
    for (const auto& f : enumerateForests(g)) {
      ++forests;
      const bool connects = oracle::connectsTopLevel(g, f.edges);
      const int sign = oracle::compareGraphHeights(collapseForest(g, f), g, reduced);
      if (sign == 0) ++zero;
      if (isDescendingForest(g, f) == connects || sign != (connects ? 1 : -1)) {
        if (mismatches++ == 0) witness = ", first " + graphKey(g) + " forest " + formatForest(f);
      }
    }
  std::ostringstream d;
  d << graphs.size() << " graphs, " << forests << " forests, " << mismatches << " mismatches, " << zero
    << " ties" << witness;
  return {mismatches == 0 && zero == 0, d.str()};
}

Outcome blowUpLemma(bool reduced, const std::vector<BasepointedGraph>& graphs) {
  std::size_t total = 0, mismatches = 0, zero = 0, truncated = 0;
  std::string witness;
  for (const auto& g : graphs) {
    const auto e = enumerateBlowUps(g);
    truncated += e.truncated;
    for (const auto& b : e.blowUps) {
      ++total;
      const bool separates = oracleSeparates(g, b);
      const int sign = oracle::compareGraphHeights(blowUp(g, b), g, reduced);
      if (sign == 0) ++zero;
      if (isDescendingBlowUp(g, b) != separates || sign != (separates ? -1 : 1)) {
        if (mismatches++ == 0) witness = ", first " + graphKey(g) + " at " + formatBlowUp(b);
      }
    }
  }
  std::ostringstream d;
  d << graphs.size() << " graphs (" << truncated << " capped), " << total << " blow-ups, " << mismatches
    << " mismatches, " << zero << " ties" << witness;
  return {mismatches == 0 && zero == 0, d.str()};
}

bool concentratedIn(const HomologyProfile& h, int degree) {
  for (int d = -1; d <= h.topDegree(); ++d) {
    const auto& g = h.degree(d);
    if (!g.torsion.empty()) return false;
    if (d != degree && g.rank != 0) return false;
  }
  return true;
}

Outcome sigmaSpherical(const std::vector<PartitionComplexSpec>& specs) {
  std::size_t bad = 0;
  std::string list;
  for (const auto& s : specs) {
    const auto x = sigma(s).complex;
    const auto h = profile(x);
    if (!concentratedIn(h, s.n - 4)) {
      ++bad;
      list += (bad <= 8 ? " " + s.toString() + "=" + classifyProfile(h).toString() : "");
    }
  }
  std::ostringstream d;
  d << specs.size() << " complexes, " << bad << " not (n-4)-spherical";
  if (bad) d << ":" << list << (bad > 8 ? " ..." : "");
  return {bad == 0, d.str()};
}

}  // namespace

int main() {
  const auto graphs = family({2, 3}, 5);

  {
    std::size_t expected = 0;
    for (int r : {2, 3})
      for (int V = 1; V <= 5; ++V) expected += oracle::graphClasses(r, V).size();
    std::set<std::vector<int>> codes;
    for (const auto& g : graphs) codes.insert(oracle::bruteCanonical(g));
    std::ostringstream d;
    d << graphs.size() << " enumerated, " << expected << " by brute force, " << codes.size() << " distinct";
    supplement("graph family against brute-force enumeration",
               Outcome{graphs.size() == expected && codes.size() == graphs.size(), d.str()});
  }

  report(1, "forest height lemma, literal height, ranks 2-3, V<=5", [&] { return forestLemma(false, graphs); });
  supplement("same family, reduced-degree height", forestLemma(true, graphs));

  report(2, "blow-up height lemma, literal height, ranks 2-3, V<=5", [&] { return blowUpLemma(false, graphs); });
  supplement("same family, reduced-degree height", blowUpLemma(true, graphs));

  {
    std::vector<PartitionComplexSpec> all, stages;
    for (int n = 4; n <= 7; ++n) {
      for (int k = 2; k <= n - 1; ++k) {
        all.push_back({n, k, {}});
        for (int m = 2; m <= n; ++m) all.push_back({n, k, m});
      }
      all.push_back({n, {}, {}});
      for (const auto& s : sigmaFiltration(n)) stages.push_back(s);
    }
    report(3, "Sigma(n,k)_{<m} is (n-4)-spherical, 4<=n<=7, 2<=k<=n-1, 2<=m<=n", [&] { return sigmaSpherical(all); });
    supplement("filtration stages Sigma(n,2), Sigma(n,k)_{<m} for k>=3, Sigma(n,k), Sigma(n)", sigmaSpherical(stages));
  }

  report(4, "Sigma(n,2) f-vector and homology of the subdivided boundary, 4<=n<=7", [&] {
    std::size_t bad = 0;
    std::ostringstream d;
    for (int n = 4; n <= 7; ++n) {
      const auto x = sigma({n, 2, {}}).complex;
      const auto expected = oracle::subdividedBoundaryFVector(n - 2);
      const auto c = classify(x);
      const bool ok = x.fVector() == expected && c == Classification{Shape::Wedge, n - 4, 1};
      bad += !ok;
      d << " n=" << n << (ok ? " ok" : " mismatch");
    }
    return Outcome{bad == 0, std::to_string(bad) + " mismatches;" + d.str()};
  });

  report(5, "down-link dichotomy, ranks 2-3, V<=5", [&] {
    std::size_t bad = 0, ude = 0, acyclic = 0, certified = 0, other = 0;
    for (const auto& g : graphs) {
      const auto x = downLink(g);
      const auto c = classify(x);
      other += c.shape == Shape::Other;
      const bool hasUde = !uniqueDescendingEdgeVertices(g).empty();
      ude += hasUde;
      if (!(isSphericalOfDimension(c, g.vertexCount() - 2) || isAcyclic(c))) ++bad;
      if (hasUde && !isAcyclic(c)) ++bad;
      if (isAcyclic(c)) {
        ++acyclic;
        certified += collapsesToPoint(x);
      }
    }
    std::ostringstream d;
    d << graphs.size() << " graphs, " << bad << " violations, " << other << " Other, " << ude
      << " with a unique descending edge, " << certified << "/" << acyclic << " acyclic ones collapse to a point";
    return Outcome{bad == 0 && other == 0, d.str()};
  });

  auto upLink = [&](const std::vector<BasepointedGraph>& gs, const BlowUpCaps& caps,
                    std::vector<UpLinkSelection> selections) {
    std::size_t bad = 0, wedge = 0, noUde = 0, truncated = 0;
    std::string witness;
    for (const auto& g : gs) {
      const auto a = profile(upLinkModel(g));
      for (auto sel : selections) {
        const auto l = upLinkPosetDetailed(g, caps, sel);
        truncated += l.truncated;
        if (!profile(l.complex).sameHomology(a)) {
          if (bad++ == 0) witness = ", first " + graphKey(g) + " (" + toString(sel) + ")";
        }
      }
      if (uniqueDescendingEdgeVertices(g).empty()) {
        ++noUde;
        if (isSphericalOfDimension(classifyProfile(a), static_cast<int>(d0(g)) - g.vertexCount()))
          ++wedge;
        else
          ++bad;
      }
    }
    std::ostringstream d;
    d << gs.size() << " graphs, " << bad << " mismatches, " << wedge << "/" << noUde
      << " without unique descending edges are (k-V)-spherical, " << truncated << " truncated posets" << witness;
    return Outcome{bad == 0, d.str()};
  };

  report(6, "up-link L versus A, rank 2, V<=3, default caps", [&] {
    return upLink(family({2}, 3), BlowUpCaps{}, {UpLinkSelection::Strict});
  });
  supplement("ranks 2-3, V<=5, uncapped, strict and weak selection",
             upLink(graphs, BlowUpCaps{0, 0, 200000}, {UpLinkSelection::Strict, UpLinkSelection::Weak}));

  report(7, "descending link is Wedge(d0-1) or acyclic, ranks 2-3, V<=5", [&] {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& g : graphs) {
      const auto c = classify(descendingLink(g));
      if (!(isSphericalOfDimension(c, static_cast<int>(d0(g)) - 1) || isAcyclic(c))) {
        if (bad++ == 0) witness = ", first " + graphKey(g) + " " + c.toString();
      }
    }
    return Outcome{bad == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " violations" + witness};
  });

  report(8, "engine oracles: Smith form, join rule, Euler characteristic", [&] {
    std::mt19937 rng(20240601);
    std::size_t snfBad = 0, minorsChecked = 0;
    for (int t = 0; t < 200; ++t) {
      const auto m = oracle::randomMatrix(rng, 8, 10);
      const auto expected = oracle::smithByReduction(m);
      if (smithNormalForm(m).factors != expected) ++snfBad;
      if (m.size() <= 5 && m[0].size() <= 5) {
        ++minorsChecked;
        if (oracle::smithByMinors(m) != expected) ++snfBad;
      }
    }
    std::size_t joinBad = 0;
    std::uniform_int_distribution<int> dim(0, 2), cnt(1, 3);
    for (int t = 0; t < 50; ++t) {
      const int i = dim(rng), a = cnt(rng), j = dim(rng), b = cnt(rng);
      const auto x = oracle::wedgeOfSpheres(i, a), y = oracle::wedgeOfSpheres(j, b);
      const bool inputs = classify(x) == Classification{Shape::Wedge, i, static_cast<std::size_t>(a)} &&
                          classify(y) == Classification{Shape::Wedge, j, static_cast<std::size_t>(b)};
      const auto c = classify(join(x, y));
      if (!inputs || c != Classification{Shape::Wedge, i + j + 1, static_cast<std::size_t>(a * b)}) ++joinBad;
    }
    VerifyOptions o;
    o.ranks = {2, 3};
    o.maxVertices = 5;
    o.sigmaMin = 4;
    o.sigmaMax = 7;
    o.jobs = 4;
    std::size_t registryProfiles = 0;
    for (const auto& r : verifyLemma("all", o))
      if (r.profile) {
        ++registryProfiles;
        if (!eulerConsistent(*r.profile)) ++eulerFailures;
      }
    std::ostringstream d;
    d << "SNF " << snfBad << "/200 mismatches (" << minorsChecked << " also by minors), join " << joinBad
      << "/50 mismatches, Euler " << eulerFailures << " failures over " << profilesBuilt + registryProfiles
      << " complexes";
    return Outcome{snfBad == 0 && joinBad == 0 && eulerFailures == 0, d.str()};
  });

  report(9, "lexicographic chain (2,-5,4) > (1,-3,6) > (1,-3,3)", [] {
    const HeightVector a{{2, -5, 4}, {0, 0}}, b{{1, -3, 6}, {0, 0}}, c{{1, -3, 3}, {0, 0}};
    const bool ok = compareHeights(a, b) == std::strong_ordering::greater &&
                    compareHeights(b, c) == std::strong_ordering::greater &&
                    compareHeights(a, c) == std::strong_ordering::greater &&
                    compareHeights(c, a) == std::strong_ordering::less && compareHeights(b, b) == std::strong_ordering::equal;
    return Outcome{ok, ok ? "strict chain reproduced" : "order differs"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
