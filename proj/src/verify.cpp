#include "morsespine/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "morsespine/collapse.hpp"
#include "morsespine/error.hpp"
#include "morsespine/io.hpp"

namespace morsespine {

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::PassStrong:
      return "PASS-STRONG";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

bool VerificationSummary::anyFail() const {
  return std::any_of(perLemma.begin(), perLemma.end(), [](const auto& kv) { return kv.second.fail > 0; });
}

VerificationSummary summarize(const std::vector<VerificationReport>& reports) {
  VerificationSummary s;
  for (const auto& r : reports) {
    auto& c = s.perLemma[r.lemmaId];
    switch (r.verdict) {
      case Verdict::Pass:
        ++c.pass;
        break;
      case Verdict::PassStrong:
        ++c.passStrong;
        break;
      case Verdict::Fail:
        ++c.fail;
        break;
      case Verdict::Inconclusive:
        ++c.inconclusive;
        break;
    }
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;
using Reports = std::vector<VerificationReport>;

/// Runs work(i) for i in [0, count) on `jobs` threads and concatenates the
/// results in index order.
Reports parallelMap(std::size_t count, int jobs, const std::function<Reports(std::size_t)>& work) {
  std::vector<Reports> slots(count);
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < count;) slots[i] = work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Reports out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

VerificationReport graphReport(const std::string& lemma, const BasepointedGraph& g) {
  VerificationReport r;
  r.lemmaId = lemma;
  r.instance = graphKey(g);
  r.instanceData = graphToJson(g);
  return r;
}

VerificationReport sigmaReport(const std::string& lemma, const std::string& key, Json data) {
  VerificationReport r;
  r.lemmaId = lemma;
  r.instance = key;
  r.instanceData = std::move(data);
  return r;
}

void fail(VerificationReport& r, std::string note, Json witness = {}) {
  if (r.verdict != Verdict::Fail) {
    r.verdict = Verdict::Fail;
    r.reproducer = r.instanceData;
    if (!witness.is_null())
      for (auto& [k, v] : witness.items()) r.reproducer[k] = v;
  }
  r.notes.push_back(std::move(note));
}

/// Homology with the Euler check every computed profile goes through.
HomologyProfile profile(const SimplicialComplex& x, VerificationReport& r, const std::string& what) {
  auto h = reducedHomology(x);
  if (!eulerConsistent(h)) fail(r, what + ": Euler characteristic disagrees with the f-vector");
  return h;
}

std::string sphereText(int d) { return "S^" + std::to_string(d); }

const char* sign(std::strong_ordering o) {
  return o < 0 ? "lower" : (o > 0 ? "higher" : "equal");
}

// --- graph lemmas -----------------------------------------------------------

Reports forestHeight(const BasepointedGraph& g, const VerifyOptions& o) {
  auto r = graphReport("forest-height", g);
  r.expected = "h(G/F) != h(G), lower exactly when F does not connect two level-D(F) vertices";
  const auto h = height(g, o.height);
  std::size_t checked = 0, bad = 0;
  for (const auto& f : enumerateForests(g)) {
    ++checked;
    const auto after = height(collapseForest(g, f), o.height);
    const auto cmp = compareHeights(after, h);
    const bool descending = isDescendingForest(g, f);
    if (cmp == 0 || (cmp < 0) != descending) {
      if (bad++ == 0)
        fail(r,
             "forest " + formatForest(f) + ": predicate " + (descending ? "descending" : "ascending") +
                 ", height " + toString(h) + " -> " + toString(after) + " (" + sign(cmp) + ")",
             Json{{"forest", f.edges}});
    }
  }
  r.classification = std::to_string(checked) + " forests, " + std::to_string(bad) + " mismatches";
  r.notes.insert(r.notes.begin(), std::string("height convention ") + toString(o.height));
  return {std::move(r)};
}

Reports blowupHeight(const BasepointedGraph& g, const VerifyOptions& o) {
  auto r = graphReport("blowup-height", g);
  r.expected = "h(G^B) != h(G), lower exactly when B separates at a vertex of level D(B)";
  r.notes.push_back(std::string("height convention ") + toString(o.height));
  BlowUpEnumeration space;
  try {
    space = enumerateBlowUps(g, o.caps);
  } catch (const BoundExceeded& e) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back(e.what());
    return {std::move(r)};
  }
  const auto h = height(g, o.height);
  std::size_t bad = 0;
  for (const auto& b : space.blowUps) {
    const auto after = height(blowUp(g, b), o.height);
    const auto cmp = compareHeights(after, h);
    const bool descending = isDescendingBlowUp(g, b);
    if (cmp == 0 || (cmp < 0) != descending) {
      if (bad++ == 0)
        fail(r,
             "blow-up " + formatBlowUp(b) + ": predicate " + (descending ? "descending" : "ascending") +
                 ", height " + toString(h) + " -> " + toString(after) + " (" + sign(cmp) + ")",
             Json{{"blowup", formatBlowUp(b)}});
    }
  }
  r.classification = std::to_string(space.blowUps.size()) + " blow-ups, " + std::to_string(bad) + " mismatches";
  if (space.truncated) r.notes.push_back("enumeration limited by the blow-up caps");
  return {std::move(r)};
}

void contractibleVerdict(VerificationReport& r, const SimplicialComplex& x) {
  if (collapsesToPoint(x)) {
    r.verdict = Verdict::PassStrong;
    r.notes.push_back("collapses to a point");
  } else {
    r.notes.push_back("acyclic, collapse inconclusive");
  }
}

Reports downlinkWedge(const BasepointedGraph& g, const VerifyOptions&) {
  auto r = graphReport("downlink-wedge", g);
  const int d = g.vertexCount() - 2;
  r.expected = "Wedge(" + std::to_string(d) + ",r) or acyclic";
  const auto x = downLink(g);
  auto h = profile(x, r, "down-link");
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  if (r.verdict == Verdict::Fail) return {std::move(r)};
  if (isAcyclic(c))
    contractibleVerdict(r, x);
  else if (!isSphericalOfDimension(c, d))
    fail(r, "down-link is " + c.toString() + ", not a wedge of " + sphereText(d));
  return {std::move(r)};
}

Reports downlinkUnique(const BasepointedGraph& g, const VerifyOptions&) {
  const auto ude = uniqueDescendingEdgeVertices(g);
  if (ude.empty()) return {};
  auto r = graphReport("downlink-unique-descending", g);
  r.expected = "acyclic";
  const auto x = downLink(g);
  auto h = profile(x, r, "down-link");
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  if (r.verdict == Verdict::Fail) return {std::move(r)};
  if (isAcyclic(c))
    contractibleVerdict(r, x);
  else
    fail(r, "down-link is " + c.toString() + " although vertex " + std::to_string(ude.front()) +
                " has a unique descending edge");
  return {std::move(r)};
}

Reports forestLinkBijection(const BasepointedGraph& g, const VerifyOptions&) {
  auto r = graphReport("forest-link-bijection", g);
  r.expected = "forests properly containing a vertical farthest edge e correspond to P(G/e) via F -> F/e";
  // distance of an edge: (nearer endpoint level, farther endpoint level)
  auto key = [&](EdgeId e) {
    const auto [u, v] = g.endpoints(e);
    return std::pair<int, int>(std::min(g.level(u), g.level(v)), std::max(g.level(u), g.level(v)));
  };
  std::pair<int, int> best{-1, -1};
  for (EdgeId e = 0; e < g.edgeCount(); ++e)
    if (!g.isLoop(e)) best = std::max(best, key(e));
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.edgeCount(); ++e)
    if (!g.isLoop(e) && key(e) == best && best.first != best.second) candidates.push_back(e);
  if (candidates.empty()) {
    r.classification = "no vertical farthest edge";
    return {std::move(r)};
  }
  const auto down = downLinkDetailed(g);
  for (EdgeId e : candidates) {
    const auto quotient = collapseForestDetailed(g, Forest({e}));
    const auto target = downLinkDetailed(quotient.graph);
    std::set<Forest> images;
    bool ok = true;
    for (const auto& f : down.forests) {
      if (!f.contains(e) || f.size() < 2) continue;
      std::vector<EdgeId> mapped;
      for (EdgeId x : f.edges)
        if (x != e) mapped.push_back(quotient.edgeMap[x]);
      Forest image(std::move(mapped));
      if (std::find(target.forests.begin(), target.forests.end(), image) == target.forests.end()) {
        fail(r, "edge " + std::to_string(e) + ": " + formatForest(f) + " maps outside P(G/e)",
             Json{{"edge", e}});
        ok = false;
        break;
      }
      if (!images.insert(image).second) {
        fail(r, "edge " + std::to_string(e) + ": map is not injective", Json{{"edge", e}});
        ok = false;
        break;
      }
    }
    if (ok && images.size() != target.forests.size())
      fail(r,
           "edge " + std::to_string(e) + ": hits " + std::to_string(images.size()) + " of " +
               std::to_string(target.forests.size()) + " forests of G/e",
           Json{{"edge", e}});
  }
  r.classification = std::to_string(candidates.size()) + " vertical farthest edges";
  return {std::move(r)};
}

Reports sbuSpherical(const BasepointedGraph& g, const VerifyOptions&) {
  auto r = graphReport("sbu-spherical", g);
  r.expected = "SBU(v) = Sigma(degree, d), a wedge of S^(degree-4) or empty";
  std::ostringstream cls;
  for (VertexId v = 0; v < g.vertexCount(); ++v) {
    if (v == g.basepoint()) continue;
    const auto s = sbuComplex(g, v);
    const LabelSet down = descendingLabels(g, v);
    std::vector<TwoBlockPartition> expected;
    if (g.degree(v) >= 4)
      for (const auto& p : allPartitions(g.degree(v)))
        if (splits(p, down)) expected.push_back(p);
    if (s.vertices != expected)
      fail(r, "vertex " + std::to_string(v) + ": SBU vertices differ from the splitting partitions");
    for (const auto& p : s.vertices) {
      GraphBlowUp b;
      b.perVertex.emplace(v, BlowUpAtVertex(v, {p}));
      if (!separatesAt(g, b, v))
        fail(r, "vertex " + std::to_string(v) + ": " + p.toString() + " does not separate");
    }
    const auto h = profile(s.complex, r, "SBU(" + std::to_string(v) + ")");
    const auto c = classifyProfile(h);
    cls << (cls.tellp() > 0 ? " " : "") << 'v' << v << ':' << c.toString();
    if (c.shape != Shape::Void && !isSphericalOfDimension(c, g.degree(v) - 4))
      fail(r, "vertex " + std::to_string(v) + ": SBU is " + c.toString());
  }
  r.classification = cls.str();
  return {std::move(r)};
}

int degreeEntry(const BasepointedGraph& g) { return static_cast<int>(height(g).head.front()); }

Reports uplinkModel(const BasepointedGraph& g, const VerifyOptions& o) {
  if (!uniqueDescendingEdgeVertices(g).empty()) return {};
  auto r = graphReport("uplink-model", g);
  const int d = degreeEntry(g) - g.vertexCount();
  r.expected = "wedge of " + sphereText(d);
  auto h = profile(upLinkModel(g, o.sbu), r, "A");
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  r.notes.push_back(std::string("SBU mode ") + toString(o.sbu));
  if (!isSphericalOfDimension(c, d)) fail(r, "A is " + c.toString() + ", not a wedge of " + sphereText(d));
  return {std::move(r)};
}

Reports uplinkPoset(const BasepointedGraph& g, const VerifyOptions& o) {
  auto r = graphReport("uplink-poset", g);
  r.expected = "H(order complex of L) = H(A)";
  const auto model = profile(upLinkModel(g, o.sbu), r, "A");
  const auto primary = o.sbu == SbuMode::Strict ? UpLinkSelection::Strict : UpLinkSelection::Weak;
  const std::vector<UpLinkSelection> order{primary,
                                           primary == UpLinkSelection::Strict ? UpLinkSelection::Weak
                                                                              : UpLinkSelection::Strict,
                                           UpLinkSelection::HeightBased};
  r.notes.push_back("A: " + classifyProfile(model).toString());
  for (auto sel : order) {
    UpLinkPoset l;
    try {
      l = upLinkPosetDetailed(g, o.caps, sel, o.height);
    } catch (const BoundExceeded& e) {
      if (sel == primary) {
        r.verdict = Verdict::Inconclusive;
        r.notes.push_back(e.what());
        return {std::move(r)};
      }
      r.notes.push_back(std::string(toString(sel)) + " L: " + e.what());
      continue;
    }
    auto h = profile(l.complex, r, std::string(toString(sel)) + " L");
    const bool same = h.sameHomology(model);
    const auto c = classifyProfile(h);
    if (sel == primary) {
      r.classification = c.toString();
      r.profile = h;
      if (l.truncated) {
        r.notes.push_back("blow-up caps cut BU(v); comparison inconclusive");
        if (r.verdict != Verdict::Fail) r.verdict = Verdict::Inconclusive;
      } else if (!same) {
        fail(r, std::string(toString(sel)) + " L is " + c.toString() + " with " +
                    std::to_string(l.elements.size()) + " elements, A is " +
                    classifyProfile(model).toString());
      }
    } else {
      std::string label = toString(sel);
      if (sel == UpLinkSelection::HeightBased) label += std::string(" (") + toString(o.height) + ")";
      r.notes.push_back(label + " L: " + c.toString() + (same ? ", matches A" : ", differs from A"));
    }
  }
  return {std::move(r)};
}

Reports descendingLinkCheck(const BasepointedGraph& g, const VerifyOptions& o) {
  auto r = graphReport("descending-link", g);
  const int d = degreeEntry(g) - 1;
  r.expected = "wedge of " + sphereText(d) + " or acyclic";
  const auto x = descendingLink(g, o.sbu);
  auto h = profile(x, r, "descending link");
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  if (r.verdict == Verdict::Fail) return {std::move(r)};
  if (isAcyclic(c))
    contractibleVerdict(r, x);
  else if (!isSphericalOfDimension(c, d))
    fail(r, "descending link is " + c.toString() + ", not a wedge of " + sphereText(d));
  return {std::move(r)};
}

// --- partition-complex lemmas -----------------------------------------------

Json specJson(const PartitionComplexSpec& s) {
  Json j{{"n", s.n}};
  if (s.k) j["k"] = *s.k;
  if (s.m) j["m"] = *s.m;
  return j;
}

/// Barycentric subdivision of the boundary of the simplex on `vertices`
/// points, as the order complex of its face poset.
SimplicialComplex subdividedBoundary(int vertices) {
  if (vertices <= 1) return {};
  return orderComplex(facePoset(simplexBoundary(vertices)));
}

std::vector<PartitionComplexSpec> sphericitySpecs(int n) {
  std::vector<PartitionComplexSpec> specs;
  for (int k = 2; k <= n - 1; ++k) {
    specs.push_back({n, k, std::nullopt});
    for (int m = 2; m <= n; ++m) specs.push_back({n, k, m});
  }
  specs.push_back({n, std::nullopt, std::nullopt});
  return specs;
}

Reports sigmaSpherical(const PartitionComplexSpec& spec, const VerifyOptions& o) {
  auto r = sigmaReport("sigma-spherical", spec.toString(), specJson(spec));
  const int d = spec.n - 4;
  r.expected = "torsion-free, concentrated in degree " + std::to_string(d);
  const auto x = sigma(spec, o.compat);
  auto h = profile(x.complex, r, spec.toString());
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  r.notes.push_back(std::string("compatibility ") + toString(o.compat));
  if (!isSphericalOfDimension(c, d)) fail(r, spec.toString() + " is " + c.toString());
  return {std::move(r)};
}

Reports sigmaBaseCase(int n, const VerifyOptions& o) {
  const PartitionComplexSpec spec{n, 2, std::nullopt};
  auto r = sigmaReport("sigma-base-case", spec.toString(), specJson(spec));
  r.expected = "f-vector of the subdivided boundary of a " + std::to_string(n - 3) + "-simplex, homology " +
               sphereText(n - 4);
  const auto x = sigma(spec, o.compat);
  auto h = profile(x.complex, r, spec.toString());
  const auto reference = subdividedBoundary(n - 2);
  if (x.complex.fVector() != reference.fVector()) fail(r, "f-vector differs from the subdivided boundary");
  const auto c = classifyProfile(h);
  r.classification = c.toString();
  r.profile = std::move(h);
  if (!(c == Classification{Shape::Wedge, n - 4, 1})) fail(r, "homology is " + c.toString());
  return {std::move(r)};
}

bool isSubcomplexOf(const PartitionComplex& x, const PartitionComplex& y) {
  const auto xs = x.labeledSimplices();
  const auto ys = y.labeledSimplices();
  return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
}

Reports sigmaFiltrationCheck(int n, const VerifyOptions& o) {
  auto r = sigmaReport("sigma-filtration", "sigma:n=" + std::to_string(n), Json{{"n", n}});
  r.expected = "each stage a subcomplex of the next; new size-m vertices pairwise incompatible";
  const auto chain = sigmaFiltration(n);
  std::vector<PartitionComplex> stages;
  for (const auto& s : chain) stages.push_back(sigma(s, o.compat));
  for (std::size_t i = 0; i + 1 < stages.size(); ++i)
    if (!isSubcomplexOf(stages[i], stages[i + 1]))
      fail(r, chain[i].toString() + " is not inside " + chain[i + 1].toString());
  if (n >= 4 && sigma({n, 3, 2}, o.compat).labeledSimplices() != stages.front().labeledSimplices())
    fail(r, "sigma(n,2) differs from sigma(n,3)_{<2}");
  if (sigma({n, n - 1, std::nullopt}, o.compat).labeledSimplices() != stages.back().labeledSimplices())
    fail(r, "sigma(n,n-1) differs from sigma(n)");
  std::size_t pairs = 0;
  for (int k = 3; k <= n - 1; ++k)
    for (int m = 2; m <= n; ++m) {
      std::vector<TwoBlockPartition> fresh;
      for (const auto& p : allPartitions(n))
        if (p.size() == m && splits(p, firstLabels(k)) && !splits(p, firstLabels(k - 1))) fresh.push_back(p);
      for (std::size_t i = 0; i < fresh.size(); ++i)
        for (std::size_t j = i + 1; j < fresh.size(); ++j) {
          ++pairs;
          if (isCompatible(fresh[i], fresh[j], o.compat))
            fail(r, "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ": " + fresh[i].toString() +
                        " and " + fresh[j].toString() + " are compatible");
        }
    }
  r.classification = std::to_string(chain.size()) + " stages, " + std::to_string(pairs) + " new-vertex pairs";
  return {std::move(r)};
}

Reports sigmaRelativeLink(const PartitionComplexSpec& spec, const VerifyOptions& o) {
  const int n = spec.n, k = *spec.k, m = *spec.m;
  auto r = sigmaReport("sigma-relative-link", spec.toString(), specJson(spec));
  r.expected = "link = right-to-left * left-to-right, right-to-left = subdivided " + sphereText(m - 3) +
               ", link " + std::to_string(n - 5) + "-spherical";
  const auto rightRef = subdividedBoundary(m - 1);
  const PartitionComplexSpec smaller{n - m + 1, k - 1, std::nullopt};
  const bool smallerValid = smaller.n >= 4 && *smaller.k >= 2 && *smaller.k <= smaller.n;
  std::optional<HomologyProfile> smallerProfile;
  if (smallerValid) smallerProfile = reducedHomology(sigma(smaller, o.compat).complex);
  std::size_t count = 0, leftMatches = 0;
  std::set<std::string> linkShapes;
  for (const auto& v : allPartitions(n)) {
    if (v.size() != m || !splits(v, firstLabels(k)) || splits(v, firstLabels(k - 1))) continue;
    ++count;
    const auto parts = relativeLinkDecomposition(n, k, m, v, o.compat);
    const auto joined = join(parts.rightToLeft.complex, parts.leftToRight.complex);
    std::vector<TwoBlockPartition> joinedLabels = parts.rightToLeft.vertices;
    joinedLabels.insert(joinedLabels.end(), parts.leftToRight.vertices.begin(), parts.leftToRight.vertices.end());
    const PartitionComplex joinedComplex{joinedLabels, joined};
    if (joinedComplex.labeledSimplices() != parts.link.labeledSimplices())
      fail(r, v.toString() + ": relative link is not the join of its two vertex classes");
    if (parts.rightToLeft.complex.fVector() != rightRef.fVector())
      fail(r, v.toString() + ": right-to-left part is not the subdivided " + sphereText(m - 3));
    const auto right = classifyProfile(profile(parts.rightToLeft.complex, r, "right-to-left"));
    const bool rightSphere = m == 2 ? right.shape == Shape::Void : right == Classification{Shape::Wedge, m - 3, 1};
    if (!rightSphere) fail(r, v.toString() + ": right-to-left part is " + right.toString());
    const auto left = profile(parts.leftToRight.complex, r, "left-to-right");
    if (smallerProfile && left.sameHomology(*smallerProfile)) ++leftMatches;
    const auto link = classifyProfile(profile(parts.link.complex, r, "relative link"));
    linkShapes.insert(link.toString());
    if (!isSphericalOfDimension(link, n - 5)) fail(r, v.toString() + ": relative link is " + link.toString());
  }
  std::ostringstream cls;
  for (const auto& s : linkShapes) cls << (cls.tellp() > 0 ? " " : "") << s;
  r.classification = std::to_string(count) + " vertices; links " + (linkShapes.empty() ? "-" : cls.str());
  if (smallerValid)
    r.notes.push_back("left-to-right part has the homology of " + smaller.toString() + " for " +
                      std::to_string(leftMatches) + " of " + std::to_string(count) + " vertices");
  return {std::move(r)};
}

// --- registry ----------------------------------------------------------------

using GraphCheck = Reports (*)(const BasepointedGraph&, const VerifyOptions&);

struct Entry {
  LemmaInfo info;
  GraphCheck graphCheck = nullptr;  // null for the partition-complex lemmas
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"forest-height", "If F connects two vertices of height D(F), then h(G/F) > h(G); otherwise lower"},
       forestHeight},
      {{"blowup-height", "If B separates at a vertex on level D(B), then h(G^B) < h(G); otherwise higher"},
       blowupHeight},
      {{"downlink-wedge", "P(G) is a (possibly empty) wedge of spheres of dimension V-2"}, downlinkWedge},
      {{"downlink-unique-descending", "P(G) is contractible if G has a unique descending edge"}, downlinkUnique},
      {{"forest-link-bijection", "link of a vertical farthest edge e in P(G) is isomorphic to P(G/e)"},
       forestLinkBijection},
      {{"sigma-spherical", "Sigma(n,k)_{<m} is (n-4)-spherical"}, nullptr},
      {{"sigma-base-case", "Sigma(n,2) is the subdivided boundary of an (n-3)-simplex"}, nullptr},
      {{"sigma-filtration", "the filtration from Sigma(n,2) to Sigma(n) is a chain of subcomplexes"}, nullptr},
      {{"sigma-relative-link", "relative links of size-m vertices are joins of an (m-3)-sphere and the left part"},
       nullptr},
      {{"sbu-spherical", "SBU(v) is Sigma(degree(v), d), a wedge of (degree(v)-4)-spheres"}, sbuSpherical},
      {{"uplink-model", "A = join of SBU(v) is a wedge of (k-V)-spheres without unique descending edges"},
       uplinkModel},
      {{"uplink-poset", "the up-link poset L has the homotopy type of A"}, uplinkPoset},
      {{"descending-link", "the descending link is a wedge of (k-1)-spheres or contractible"},
       descendingLinkCheck},
  };
  return table;
}

Reports runGraphLemma(GraphCheck check, const VerifyOptions& o) {
  EnumerationOptions eo;
  eo.minBasepointDegree = o.minBasepointDegree;
  eo.vertexBound = o.vertexBound;
  std::vector<BasepointedGraph> graphs;
  for (int rank : o.ranks)
    for (auto& g : enumerateGraphs(rank, o.maxVertices, eo)) graphs.push_back(std::move(g));
  return parallelMap(graphs.size(), o.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    auto out = check(graphs[i], o);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& r : out) r.seconds = seconds;
    return out;
  });
}

Reports runSigmaLemma(const std::string& id, const VerifyOptions& o) {
  if (o.sigmaMin < 4 || o.sigmaMax < o.sigmaMin) throw BadRange("sigma range must satisfy 4 <= min <= max");
  std::vector<std::function<Reports()>> tasks;
  for (int n = o.sigmaMin; n <= o.sigmaMax; ++n) {
    if (id == "sigma-spherical") {
      for (const auto& s : sphericitySpecs(n)) tasks.push_back([s, &o] { return sigmaSpherical(s, o); });
    } else if (id == "sigma-base-case") {
      tasks.push_back([n, &o] { return sigmaBaseCase(n, o); });
    } else if (id == "sigma-filtration") {
      tasks.push_back([n, &o] { return sigmaFiltrationCheck(n, o); });
    } else {
      for (int k = 3; k <= n - 1; ++k)
        for (int m = 2; m <= n; ++m) {
          const PartitionComplexSpec s{n, k, m};
          tasks.push_back([s, &o] { return sigmaRelativeLink(s, o); });
        }
    }
  }
  return parallelMap(tasks.size(), o.jobs, [&](std::size_t i) {
    const auto start = Clock::now();
    auto out = tasks[i]();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& r : out) r.seconds = seconds;
    return out;
  });
}

}  // namespace

const std::vector<LemmaInfo>& lemmaRegistry() {
  static const std::vector<LemmaInfo> infos = [] {
    std::vector<LemmaInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<VerificationReport> verifyLemma(const std::string& lemmaId, const VerifyOptions& options) {
  if (options.ranks.empty()) throw BadRange("at least one rank is required");
  Reports out;
  bool found = false;
  for (const auto& e : entries()) {
    if (lemmaId != "all" && lemmaId != e.info.id) continue;
    found = true;
    auto part = e.graphCheck ? runGraphLemma(e.graphCheck, options) : runSigmaLemma(e.info.id, options);
    for (auto& r : part) out.push_back(std::move(r));
  }
  if (!found) throw UnknownLemma("unknown lemma id '" + lemmaId + "'");
  return out;
}

}  // namespace morsespine
