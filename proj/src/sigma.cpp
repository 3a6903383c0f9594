#include "morsespine/sigma.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "morsespine/error.hpp"

namespace morsespine {

void PartitionComplexSpec::validate() const {
  if (n < 3 || n > 16) throw BadRange("sigma: n must be in [3, 16]");
  if (k && (*k < 2 || *k > n)) throw BadRange("sigma: k must be in [2, n]");
  if (m && !k) throw BadRange("sigma: m requires k");
  if (m && (*m < 2 || *m > n)) throw BadRange("sigma: m must be in [2, n]");
}

PartitionComplexSpec PartitionComplexSpec::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("sigma:", 0) == 0) body = body.substr(6);
  PartitionComplexSpec spec;
  bool haveN = false;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad sigma spec item '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad sigma spec value in '" + item + "'");
    }
    if (key == "n") {
      spec.n = value;
      haveN = true;
    } else if (key == "k") {
      spec.k = value;
    } else if (key == "m") {
      spec.m = value;
    } else {
      throw ParseError("unknown sigma spec key '" + key + "'");
    }
  }
  if (!haveN) throw ParseError("sigma spec needs n");
  spec.validate();
  return spec;
}

std::string PartitionComplexSpec::toString() const {
  std::ostringstream out;
  out << "sigma:n=" << n;
  if (k) out << ",k=" << *k;
  if (m) out << ",m=" << *m;
  return out.str();
}

bool PartitionComplexSpec::admits(const TwoBlockPartition& v) const {
  if (!k) return true;
  const LabelSet split = firstLabels(*k);
  if (!m) return splits(v, split);
  return splits(v, firstLabels(*k - 1)) || (splits(v, split) && v.size() < *m);
}

std::vector<std::vector<TwoBlockPartition>> PartitionComplex::labeledSimplices() const {
  std::vector<std::vector<TwoBlockPartition>> out;
  for (const auto& s : complex.allSimplices()) {
    std::vector<TwoBlockPartition> labeled;
    for (int i : s) labeled.push_back(vertices[i]);
    std::sort(labeled.begin(), labeled.end());
    out.push_back(std::move(labeled));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PartitionComplex flagComplexOn(std::vector<TwoBlockPartition> vertices, CompatMode mode) {
  PartitionComplex out;
  out.complex = cliqueComplex(static_cast<int>(vertices.size()), [&](int i, int j) {
    return isCompatible(vertices[i], vertices[j], mode);
  });
  out.vertices = std::move(vertices);
  return out;
}

PartitionComplex restrictTo(const PartitionComplex& base,
                            const std::function<bool(const TwoBlockPartition&)>& keep) {
  std::vector<int> map(base.vertices.size(), -1);
  PartitionComplex out;
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    if (!keep(base.vertices[i])) continue;
    map[i] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(base.vertices[i]);
  }
  auto induced = inducedSubcomplex(base.complex, [&](int i) { return map[i] >= 0; });
  out.complex = relabel(induced, map, static_cast<int>(out.vertices.size()));
  return out;
}

bool properSubset(LabelSet x, LabelSet y) { return x != y && (x & ~y) == 0; }

}  // namespace

PartitionComplex sigma(const PartitionComplexSpec& spec, CompatMode mode) {
  spec.validate();
  std::vector<TwoBlockPartition> vertices;
  for (const auto& p : allPartitions(spec.n))
    if (spec.admits(p)) vertices.push_back(p);
  return flagComplexOn(std::move(vertices), mode);
}

std::vector<PartitionComplexSpec> sigmaFiltration(int n) {
  if (n < 4 || n > 16) throw BadRange("sigma filtration needs 4 <= n <= 16");
  std::vector<PartitionComplexSpec> chain;
  chain.push_back({n, 2, std::nullopt});
  for (int k = 3; k <= n - 1; ++k) {
    for (int m = 2; m <= n; ++m) chain.push_back({n, k, m});
    chain.push_back({n, k, std::nullopt});
  }
  chain.push_back({n, std::nullopt, std::nullopt});
  return chain;
}

RelativeLink relativeLinkDecomposition(int n, int k, int m, const TwoBlockPartition& v, CompatMode mode) {
  const PartitionComplexSpec spec{n, k, m};
  spec.validate();
  if (v.groundSize() != n || !splits(v, firstLabels(k)) || splits(v, firstLabels(k - 1)) ||
      v.size() != m)
    throw NotASizeMVertex(v.toString() + " is not a size-" + std::to_string(m) +
                          " vertex of sigma(" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside the <m stage");
  const auto base = sigma(spec, mode);
  RelativeLink out;
  out.link = restrictTo(base, [&](const TwoBlockPartition& w) { return isCompatible(w, v, mode); });
  out.rightToLeft = restrictTo(base, [&](const TwoBlockPartition& w) { return properSubset(v.a(), w.a()); });
  out.leftToRight = restrictTo(base, [&](const TwoBlockPartition& w) { return properSubset(w.a(), v.a()); });
  return out;
}

PartitionComplex sbuComplex(const BasepointedGraph& g, VertexId v) {
  const int degree = g.degree(v);
  const int descending = g.descendingCount(v);
  if (degree < 4 || descending < 2) return {};
  return sigma({degree, descending, std::nullopt});
}

VertexBlowUpPoset buPoset(const BasepointedGraph& g, VertexId v, int maxPartitions) {
  VertexBlowUpPoset out;
  const int degree = g.degree(v);
  if (degree < 4) return out;
  const auto full = sigma({degree, std::nullopt, std::nullopt});
  out.truncated = maxPartitions > 0 && full.complex.dimension() + 1 > maxPartitions;

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> kept;
  for (const auto& s : full.complex.allSimplices()) {
    if (maxPartitions > 0 && static_cast<int>(s.size()) > maxPartitions) continue;
    std::vector<TwoBlockPartition> ps;
    for (int i : s) ps.push_back(full.vertices[i]);
    id.emplace(s, static_cast<int>(kept.size()));
    kept.push_back(s);
    out.elements.emplace_back(v, std::move(ps));
  }
  std::vector<std::pair<int, int>> less;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& s = kept[i];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      less.emplace_back(id.at(face), static_cast<int>(i));
    }
  }
  out.poset = Poset(static_cast<int>(kept.size()), less);
  return out;
}

VertexBlowUpPoset sbuWeakPoset(const BasepointedGraph& g, VertexId v, int maxPartitions) {
  const auto all = buPoset(g, v, maxPartitions);
  const LabelSet down = descendingLabels(g, v);
  std::vector<int> map(all.elements.size(), -1);
  VertexBlowUpPoset out;
  out.truncated = all.truncated;
  for (std::size_t i = 0; i < all.elements.size(); ++i) {
    const auto& ps = all.elements[i].partitions;
    if (std::none_of(ps.begin(), ps.end(), [&](const auto& p) { return splits(p, down); })) continue;
    map[i] = static_cast<int>(out.elements.size());
    out.elements.push_back(all.elements[i]);
  }
  std::vector<std::pair<int, int>> less;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = 0; j < map.size(); ++j)
      if (map[i] >= 0 && map[j] >= 0 && all.poset.less(static_cast<int>(i), static_cast<int>(j)))
        less.emplace_back(map[i], map[j]);
  out.poset = Poset(static_cast<int>(out.elements.size()), less);
  return out;
}

}  // namespace morsespine
