#include "morsespine/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "morsespine/error.hpp"

namespace morsespine {

namespace {

const std::vector<Simplex>& emptySimplexList() {
  static const std::vector<Simplex> empty;
  return empty;
}

}  // namespace

SimplicialComplex SimplicialComplex::fromSimplices(int vertexCount, std::vector<Simplex> simplices) {
  std::vector<std::set<Simplex>> levels;
  for (auto& s : simplices) {
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidComplex("simplex repeats a vertex");
    if (s.front() < 0 || s.back() >= vertexCount)
      throw InvalidComplex("simplex vertex outside 0.." + std::to_string(vertexCount - 1));
    if (levels.size() < s.size()) levels.resize(s.size());
    levels[s.size() - 1].insert(std::move(s));
  }
  for (std::size_t d = levels.size(); d-- > 1;) {
    for (const auto& s : levels[d]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        levels[d - 1].insert(std::move(face));
      }
    }
  }
  SimplicialComplex out(vertexCount);
  for (auto& level : levels) out.byDimension_.emplace_back(level.begin(), level.end());
  return out;
}

SimplicialComplex SimplicialComplex::fromClosedSimplices(int vertexCount, std::vector<Simplex> simplices) {
  SimplicialComplex out(vertexCount);
  for (auto& s : simplices) {
    if (s.empty()) continue;
    if (out.byDimension_.size() < s.size()) out.byDimension_.resize(s.size());
    out.byDimension_[s.size() - 1].push_back(std::move(s));
  }
  for (auto& level : out.byDimension_) std::sort(level.begin(), level.end());
  return out;
}

std::size_t SimplicialComplex::simplexCount() const {
  std::size_t total = 0;
  for (const auto& level : byDimension_) total += level.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::fVector() const {
  std::vector<std::size_t> f;
  for (const auto& level : byDimension_) f.push_back(level.size());
  return f;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > dimension()) return emptySimplexList();
  return byDimension_[d];
}

std::vector<Simplex> SimplicialComplex::allSimplices() const {
  std::vector<Simplex> out;
  for (const auto& level : byDimension_) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    for (const auto& s : simplices(d + 1)) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(face));
      }
    }
    for (const auto& s : simplices(d))
      if (!covered.count(s)) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const { return indexOf(s).has_value(); }

std::optional<std::size_t> SimplicialComplex::indexOf(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<int> SimplicialComplex::realizedVertices() const {
  std::vector<int> out;
  for (const auto& s : simplices(0)) out.push_back(s[0]);
  return out;
}

SimplicialComplex cliqueComplex(int n, const std::function<bool(int, int)>& adjacent) {
  std::vector<std::vector<int>> higher(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(i, j)) higher[i].push_back(j);

  std::vector<Simplex> out;
  Simplex current;
  // candidates: vertices greater than the last one and adjacent to all chosen
  std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& candidates) {
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const int v = candidates[idx];
      current.push_back(v);
      out.push_back(current);
      std::vector<int> next;
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(idx) + 1, candidates.end(),
                            higher[v].begin(), higher[v].end(), std::back_inserter(next));
      extend(next);
      current.pop_back();
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  extend(all);
  return SimplicialComplex::fromClosedSimplices(n, std::move(out));
}

SimplicialComplex fullSimplex(int n) {
  return cliqueComplex(n, [](int, int) { return true; });
}

SimplicialComplex simplexBoundary(int n) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip < n; ++skip) {
    Simplex s;
    for (int v = 0; v < n; ++v)
      if (v != skip) s.push_back(v);
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::fromFacets(n, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  const int shift = x.vertexCount();
  std::vector<Simplex> ys;
  for (auto s : y.allSimplices()) {
    for (int& v : s) v += shift;
    ys.push_back(std::move(s));
  }
  const auto xs = x.allSimplices();
  std::vector<Simplex> out;
  out.reserve(xs.size() + ys.size() + xs.size() * ys.size());
  out.insert(out.end(), xs.begin(), xs.end());
  out.insert(out.end(), ys.begin(), ys.end());
  for (const auto& s : xs) {
    for (const auto& t : ys) {
      Simplex u = s;
      u.insert(u.end(), t.begin(), t.end());
      out.push_back(std::move(u));
    }
  }
  return SimplicialComplex::fromClosedSimplices(x.vertexCount() + y.vertexCount(), std::move(out));
}

namespace {

void requireSimplex(const SimplicialComplex& x, const Simplex& sigma) {
  if (!x.contains(sigma)) throw SimplexAbsent("simplex is not in the complex");
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma) {
  requireSimplex(x, sigma);
  std::vector<Simplex> out;
  for (int d = static_cast<int>(sigma.size()); d <= x.dimension(); ++d) {
    for (const auto& rho : x.simplices(d)) {
      if (!std::includes(rho.begin(), rho.end(), sigma.begin(), sigma.end())) continue;
      Simplex tau;
      std::set_difference(rho.begin(), rho.end(), sigma.begin(), sigma.end(), std::back_inserter(tau));
      out.push_back(std::move(tau));
    }
  }
  return SimplicialComplex::fromClosedSimplices(x.vertexCount(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& x, const Simplex& sigma) {
  requireSimplex(x, sigma);
  std::vector<Simplex> cofaces;
  for (int d = static_cast<int>(sigma.size()) - 1; d <= x.dimension(); ++d)
    for (const auto& rho : x.simplices(d))
      if (std::includes(rho.begin(), rho.end(), sigma.begin(), sigma.end())) cofaces.push_back(rho);
  return SimplicialComplex::fromSimplices(x.vertexCount(), std::move(cofaces));
}

SimplicialComplex inducedSubcomplex(const SimplicialComplex& x, const std::function<bool(int)>& keep) {
  std::vector<Simplex> out;
  for (int d = 0; d <= x.dimension(); ++d)
    for (const auto& s : x.simplices(d))
      if (std::all_of(s.begin(), s.end(), keep)) out.push_back(s);
  return SimplicialComplex::fromClosedSimplices(x.vertexCount(), std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& x, const std::vector<int>& map, int newVertexCount) {
  std::vector<Simplex> out;
  for (auto s : x.allSimplices()) {
    for (int& v : s) v = map.at(v);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return SimplicialComplex::fromSimplices(newVertexCount, std::move(out));
}

}  // namespace morsespine
