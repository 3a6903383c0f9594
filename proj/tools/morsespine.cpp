#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "morsespine/blowup.hpp"
#include "morsespine/config.hpp"
#include "morsespine/error.hpp"
#include "morsespine/harness.hpp"
#include "morsespine/height.hpp"
#include "morsespine/homology.hpp"
#include "morsespine/io.hpp"
#include "morsespine/sigma.hpp"
#include "morsespine/verify.hpp"

using namespace morsespine;

namespace {

struct Flags {
  std::string config;
  std::string format;
  int jobs = 0;
  bool timing = false;
  std::string compat;
  std::string sbu;
  std::string heightConvention;
  int minBasepointDegree = 0;
  unsigned seed = 0;
  std::string ranks;
  int maxVertices = 0;
  int vertexBound = 0;
  int sigmaMin = 0;
  int sigmaMax = 0;
  int maxPartitions = -1;
  int maxVertexDegree = -1;
  std::size_t maxElements = 0;

  std::string graph;
  std::string forest;
  std::vector<std::string> at;
  std::string complexPath;
  std::string spec;
  int n = 0, k = 0, m = 0;
  bool homology = false;
  bool filtration = false;
  bool poset = false;
  std::string selection = "strict";
  std::string lemma = "all";
};

std::vector<int> parseRanks(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad rank '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("--rank needs at least one value");
  return out;
}

RunConfig buildConfig(const Flags& f, const CLI::App& app) {
  RunConfig c;
  if (const char* env = std::getenv(kConfigEnv); env && *env && f.config.empty()) c = loadConfig(env, c);
  if (!f.config.empty()) c = loadConfig(f.config, c);
  auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
  auto& v = c.verify;
  if (given("--format")) c.format = outputFormatFromString(f.format);
  if (given("--jobs")) v.jobs = f.jobs;
  if (given("--timing")) c.timing = true;
  if (given("--compat")) v.compat = compatModeFromString(f.compat);
  if (given("--sbu")) v.sbu = sbuModeFromString(f.sbu);
  if (given("--height-convention")) v.height = heightConventionFromString(f.heightConvention);
  if (given("--min-basepoint-degree")) v.minBasepointDegree = f.minBasepointDegree;
  if (given("--seed")) c.seed = f.seed;
  if (given("--rank")) v.ranks = parseRanks(f.ranks);
  if (given("--max-vertices")) v.maxVertices = f.maxVertices;
  if (given("--vertex-bound")) v.vertexBound = f.vertexBound;
  if (given("--sigma-min")) v.sigmaMin = f.sigmaMin;
  if (given("--sigma-max")) v.sigmaMax = f.sigmaMax;
  if (given("--max-partitions")) v.caps.maxPartitionsPerVertex = f.maxPartitions;
  if (given("--max-vertex-degree")) v.caps.maxVertexDegree = f.maxVertexDegree;
  if (given("--max-elements")) v.caps.maxElements = f.maxElements;
  c.validate();
  return c;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

GraphOptions graphOptions(const RunConfig& c) {
  GraphOptions o;
  o.minBasepointDegree = c.verify.minBasepointDegree;
  return o;
}

std::string fVectorText(const std::vector<std::size_t>& f) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << f[i];
  out << ')';
  return out.str();
}

void printHomologyTable(const HomologyProfile& h) {
  for (int d = -1; d <= h.topDegree(); ++d) {
    const auto& g = h.degree(d);
    if (g.isZero()) continue;
    std::cout << "  H~" << d << ": Z^" << g.rank;
    for (const auto& t : g.torsion) std::cout << " + Z/" << t;
    std::cout << '\n';
  }
  std::cout << "classification " << classifyProfile(h).toString() << '\n';
}

void emitComplex(const RunConfig& c, const std::string& title, const SimplicialComplex& x, bool withHomology,
                 Json extra = Json::object()) {
  std::optional<HomologyProfile> h;
  if (withHomology) h = reducedHomology(x);
  if (c.format == OutputFormat::Json) {
    Json j = extra;
    j["complex"] = complexToJson(x);
    if (h) j["homology"] = homologyToJson(*h);
    print(j);
    return;
  }
  std::cout << title << '\n';
  std::cout << "f-vector " << fVectorText(x.fVector()) << ", dimension " << x.dimension() << '\n';
  if (h) printHomologyTable(*h);
}

void printGraphTable(const BasepointedGraph& g) {
  std::cout << "graph " << graphKey(g) << '\n';
  std::cout << "levels";
  for (VertexId v = 0; v < g.vertexCount(); ++v) std::cout << ' ' << v << ':' << g.level(v);
  std::cout << '\n';
}

int runHeight(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  const auto h = height(g, c.verify.height);
  if (c.format == OutputFormat::Json) {
    Json j = heightToJson(h);
    j["convention"] = toString(c.verify.height);
    print(j);
  } else {
    std::cout << toString(h) << '\n';
  }
  return 0;
}

int runCollapse(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  const auto forest = parseForest(f.forest);
  const auto q = collapseForest(g, forest);
  const auto before = height(g, c.verify.height);
  const auto after = height(q, c.verify.height);
  const bool predicate = forest.empty() ? false : isDescendingForest(g, forest);
  if (c.format == OutputFormat::Json) {
    Json j;
    j["graph"] = graphToJson(q);
    j["heightBefore"] = heightToJson(before);
    j["heightAfter"] = heightToJson(after);
    if (!forest.empty()) {
      j["forestHeight"] = forestHeight(g, forest);
      j["descending"] = predicate;
    }
    print(j);
  } else {
    printGraphTable(q);
    std::cout << "height " << toString(before) << " -> " << toString(after) << '\n';
    if (!forest.empty())
      std::cout << "D(F) " << forestHeight(g, forest) << ", descending " << (predicate ? "yes" : "no") << '\n';
  }
  return 0;
}

int runBlowUp(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  const auto b = parseBlowUp(g, f.at);
  const auto result = blowUpDetailed(g, b);
  const auto before = height(g, c.verify.height);
  const auto after = height(result.graph, c.verify.height);
  const bool predicate = isDescendingBlowUp(g, b);
  if (c.format == OutputFormat::Json) {
    Json j;
    j["graph"] = graphToJson(result.graph);
    j["newEdges"] = result.newEdges;
    j["blowUpLevel"] = blowUpHeightLevel(b, g);
    j["descending"] = predicate;
    j["heightBefore"] = heightToJson(before);
    j["heightAfter"] = heightToJson(after);
    print(j);
  } else {
    printGraphTable(result.graph);
    std::cout << "D(B) " << blowUpHeightLevel(b, g) << ", descending " << (predicate ? "yes" : "no") << '\n';
    std::cout << "height " << toString(before) << " -> " << toString(after) << '\n';
  }
  return 0;
}

int runDownLink(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  const auto d = downLinkDetailed(g);
  Json forests = Json::array();
  for (const auto& fo : d.forests) forests.push_back(fo.edges);
  emitComplex(c, "down-link of " + graphKey(g) + ": " + std::to_string(d.forests.size()) + " descending forests",
              d.complex, f.homology, Json{{"forests", forests}});
  return 0;
}

int runUpLink(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  if (!f.poset) {
    emitComplex(c, std::string("up-link model (") + toString(c.verify.sbu) + ") of " + graphKey(g),
                upLinkModel(g, c.verify.sbu), f.homology);
    return 0;
  }
  UpLinkSelection sel = UpLinkSelection::Strict;
  if (f.selection == "weak")
    sel = UpLinkSelection::Weak;
  else if (f.selection == "height")
    sel = UpLinkSelection::HeightBased;
  else if (f.selection != "strict")
    throw ParseError("--selection must be strict, weak or height");
  const auto l = upLinkPosetDetailed(g, c.verify.caps, sel, c.verify.height);
  Json elements = Json::array();
  for (const auto& e : l.elements) elements.push_back(formatBlowUp(e));
  emitComplex(c,
              std::string("up-link poset (") + toString(sel) + ") of " + graphKey(g) + ": " +
                  std::to_string(l.elements.size()) + " blow-ups" + (l.truncated ? ", truncated by caps" : ""),
              l.complex, f.homology, Json{{"elements", elements}, {"truncated", l.truncated}});
  return 0;
}

int runDescLink(const Flags& f, const RunConfig& c) {
  const auto g = loadGraph(f.graph, graphOptions(c));
  emitComplex(c, "descending link of " + graphKey(g), descendingLink(g, c.verify.sbu), f.homology);
  return 0;
}

int runSigma(const Flags& f, const RunConfig& c, const CLI::App& sub) {
  PartitionComplexSpec spec;
  if (!f.spec.empty()) {
    spec = PartitionComplexSpec::parse(f.spec);
  } else {
    if (sub.get_option("--n")->count() == 0) throw ParseError("sigma needs --n or --spec");
    spec.n = f.n;
    if (sub.get_option("--k")->count()) spec.k = f.k;
    if (sub.get_option("--m")->count()) spec.m = f.m;
    spec.validate();
  }
  if (f.filtration) {
    const auto chain = sigmaFiltration(spec.n);
    for (const auto& s : chain) {
      const auto x = sigma(s, c.verify.compat);
      emitComplex(c, s.toString() + ": " + std::to_string(x.vertices.size()) + " vertices", x.complex,
                  f.homology, Json{{"spec", s.toString()}});
    }
    return 0;
  }
  const auto x = sigma(spec, c.verify.compat);
  Json labels = Json::array();
  for (const auto& p : x.vertices) labels.push_back(p.toString());
  emitComplex(c, spec.toString() + ": " + std::to_string(x.vertices.size()) + " vertices", x.complex, f.homology,
              Json{{"spec", spec.toString()}, {"compat", toString(c.verify.compat)}, {"labels", labels}});
  return 0;
}

int runHomology(const Flags& f, const RunConfig& c) {
  const auto x = loadComplex(f.complexPath);
  emitComplex(c, f.complexPath, x, true);
  return 0;
}

int runEnumerate(const RunConfig& c) {
  EnumerationOptions eo;
  eo.minBasepointDegree = c.verify.minBasepointDegree;
  eo.vertexBound = c.verify.vertexBound;
  std::size_t total = 0;
  for (int rank : c.verify.ranks) {
    const auto graphs = enumerateGraphs(rank, c.verify.maxVertices, eo);
    total += graphs.size();
    for (const auto& g : graphs) {
      if (c.format == OutputFormat::Json)
        print(graphToJson(g));
      else
        std::cout << graphKey(g) << "  " << toString(height(g, c.verify.height)) << '\n';
    }
  }
  if (c.format == OutputFormat::Table) std::cout << total << " graphs\n";
  return 0;
}

int runVerify(const Flags& f, const RunConfig& c) {
  const auto reports = verifyLemma(f.lemma, c.verify);
  const auto summary = summarize(reports);
  if (c.format == OutputFormat::Json) {
    for (const auto& r : reports) print(reportToJson(r, c.timing));
    print(Json{{"summary", summaryToJson(summary)}});
  } else {
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(13) << toString(r.verdict) << std::setw(28) << r.lemmaId << r.instance
                << "  " << r.classification;
      if (c.timing) std::cout << "  " << std::fixed << std::setprecision(3) << r.seconds << "s";
      std::cout << '\n';
      if (r.verdict == Verdict::Fail)
        for (const auto& n : r.notes) std::cout << "    " << n << '\n';
    }
    std::cout << '\n'
              << std::left << std::setw(28) << "lemma" << std::right << std::setw(6) << "PASS" << std::setw(8)
              << "STRONG" << std::setw(6) << "FAIL" << std::setw(8) << "INCONC" << '\n';
    for (const auto& [id, s] : summary.perLemma)
      std::cout << std::left << std::setw(28) << id << std::right << std::setw(6) << s.pass << std::setw(8)
                << s.passStrong << std::setw(6) << s.fail << std::setw(8) << s.inconclusive << '\n';
    std::cout << (summary.anyFail() ? "result: FAIL" : "result: all PASS") << '\n';
  }
  return summary.anyFail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse-theoretic complexes of basepointed graphs: heights, links, partition complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;

  app.add_option("--config", f.config, std::string("JSON run config (default: $") + kConfigEnv + ")");
  app.add_option("--format", f.format, "Output format: json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", f.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);
  app.add_flag("--timing", f.timing, "Include per-instance timings");
  app.add_option("--compat", f.compat, "Partition compatibility: paper or classical")
      ->check(CLI::IsMember({"paper", "classical"}));
  app.add_option("--sbu", f.sbu, "SBU variant: strict or weak")->check(CLI::IsMember({"strict", "weak"}));
  app.add_option("--height-convention", f.heightConvention, "Degree entries d_i: literal or reduced")
      ->check(CLI::IsMember({"literal", "reduced"}));
  app.add_option("--min-basepoint-degree", f.minBasepointDegree, "Smallest accepted basepoint degree");
  app.add_option("--seed", f.seed, "Random seed");
  app.add_option("--rank", f.ranks, "Ranks, comma separated");
  app.add_option("--max-vertices", f.maxVertices, "Largest vertex count enumerated");
  app.add_option("--vertex-bound", f.vertexBound, "Hard limit for --max-vertices");
  app.add_option("--sigma-min", f.sigmaMin, "Smallest n for partition-complex lemmas");
  app.add_option("--sigma-max", f.sigmaMax, "Largest n for partition-complex lemmas");
  app.add_option("--max-partitions", f.maxPartitions, "Blow-up partitions per vertex (0 = unbounded)");
  app.add_option("--max-vertex-degree", f.maxVertexDegree, "Vertices above this degree are not blown up");
  app.add_option("--max-elements", f.maxElements, "Largest blow-up space enumerated");

  auto* height = app.add_subcommand("height", "Height vector of a graph");
  height->add_option("--graph", f.graph, "Graph file or built-in name")->required();

  auto* collapse = app.add_subcommand("collapse", "Collapse a forest");
  collapse->add_option("--graph", f.graph, "Graph file or built-in name")->required();
  collapse->add_option("--forest", f.forest, "Edge ids, e.g. 0,2")->required();

  auto* blowup = app.add_subcommand("blowup", "Blow up compatible partitions at vertices");
  blowup->add_option("--graph", f.graph, "Graph file or built-in name")->required();
  blowup->add_option("--at", f.at, "Partition at a vertex, e.g. \"1:1,3|2,4\" (repeatable)")->required();

  auto* downlink = app.add_subcommand("downlink", "Complex of descending forests");
  downlink->add_option("--graph", f.graph, "Graph file or built-in name")->required();
  downlink->add_flag("--homology", f.homology, "Compute reduced homology");

  auto* uplink = app.add_subcommand("uplink", "Up-link model or up-link poset");
  uplink->add_option("--graph", f.graph, "Graph file or built-in name")->required();
  uplink->add_flag("--homology", f.homology, "Compute reduced homology");
  uplink->add_flag("--poset", f.poset, "Order complex of the blow-up poset instead of the model");
  uplink->add_option("--selection", f.selection, "Poset selection: strict, weak or height")
      ->check(CLI::IsMember({"strict", "weak", "height"}));

  auto* desclink = app.add_subcommand("desclink", "Descending link (up-link model joined with down-link)");
  desclink->add_option("--graph", f.graph, "Graph file or built-in name")->required();
  desclink->add_flag("--homology", f.homology, "Compute reduced homology");

  auto* sigmaCmd = app.add_subcommand("sigma", "Partition complexes");
  sigmaCmd->add_option("--spec", f.spec, "e.g. sigma:n=6,k=3,m=4");
  sigmaCmd->add_option("--n", f.n, "Ground set size");
  sigmaCmd->add_option("--k", f.k, "Split set {1..k}");
  sigmaCmd->add_option("--m", f.m, "Size bound");
  sigmaCmd->add_flag("--homology", f.homology, "Compute reduced homology");
  sigmaCmd->add_flag("--filtration", f.filtration, "Emit every stage of the filtration of Sigma(n)");

  auto* homology = app.add_subcommand("homology", "Reduced homology of a complex file");
  homology->add_option("--complex", f.complexPath, "Simplicial JSON file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate graphs up to isomorphism");

  auto* verify = app.add_subcommand("verify", "Run lemma checks");
  std::vector<std::string> ids{"all"};
  for (const auto& l : lemmaRegistry()) ids.push_back(l.id);
  verify->add_option("--lemma", f.lemma, "Lemma id or all")->check(CLI::IsMember(ids));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto c = buildConfig(f, app);
    if (*height) return runHeight(f, c);
    if (*collapse) return runCollapse(f, c);
    if (*blowup) return runBlowUp(f, c);
    if (*downlink) return runDownLink(f, c);
    if (*uplink) return runUpLink(f, c);
    if (*desclink) return runDescLink(f, c);
    if (*sigmaCmd) return runSigma(f, c, *sigmaCmd);
    if (*homology) return runHomology(f, c);
    if (*enumerate) return runEnumerate(c);
    if (*verify) return runVerify(f, c);
  } catch (const morsespine::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
