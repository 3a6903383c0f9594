#include "morsespine/poset.hpp"

#include <algorithm>
#include <map>

#include "morsespine/error.hpp"

namespace morsespine {

Poset::Poset(int size, const std::vector<std::pair<int, int>>& less)
    : size_(size), rows_(size, std::vector<std::uint64_t>((size + 63) / 64, 0)) {
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= size || b >= size) throw InvalidPoset("relation pair out of range");
    rows_[a][b >> 6] |= std::uint64_t{1} << (b & 63);
  }
  close();
}

Poset Poset::fromRelation(int size, const std::function<bool(int, int)>& less) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && less(a, b)) pairs.emplace_back(a, b);
  return Poset(size, pairs);
}

void Poset::close() {
  // Warshall on bit rows: if a < k then a inherits everything above k.
  for (int k = 0; k < size_; ++k) {
    for (int a = 0; a < size_; ++a) {
      if (!less(a, k)) continue;
      for (std::size_t w = 0; w < rows_[a].size(); ++w) rows_[a][w] |= rows_[k][w];
    }
  }
  for (int a = 0; a < size_; ++a)
    if (less(a, a)) throw InvalidPoset("order relation contains a cycle");
}

std::vector<int> Poset::above(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size_; ++b)
    if (less(a, b)) out.push_back(b);
  return out;
}

SimplicialComplex orderComplex(const Poset& p) {
  std::vector<std::vector<int>> up(p.size());
  for (int a = 0; a < p.size(); ++a) up[a] = p.above(a);

  std::vector<Simplex> chains;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int top) {
    for (int b : up[top]) {
      chain.push_back(b);
      Simplex s = chain;
      std::sort(s.begin(), s.end());
      chains.push_back(std::move(s));
      extend(b);
      chain.pop_back();
    }
  };
  for (int a = 0; a < p.size(); ++a) {
    chain.assign(1, a);
    chains.push_back({a});
    extend(a);
  }
  return SimplicialComplex::fromClosedSimplices(p.size(), std::move(chains));
}

Poset facePoset(const SimplicialComplex& x) {
  const auto simplices = x.allSimplices();
  std::map<Simplex, int> id;
  for (std::size_t i = 0; i < simplices.size(); ++i) id.emplace(simplices[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> less;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      less.emplace_back(id.at(face), static_cast<int>(i));
    }
  }
  return Poset(static_cast<int>(simplices.size()), less);
}

}  // namespace morsespine
