#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace morsespine {

/// Sorted, duplicate-free list of vertex indices.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex on the ambient vertex set
/// {0..vertexCount-1}, stored as every nonempty simplex, grouped by dimension
/// and sorted lexicographically inside each dimension.
///
/// The void complex has no simplices at all; it may still carry ambient
/// vertices that are not realized as 0-simplices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(int vertexCount) : vertexCount_(vertexCount) {}

  /// Downward closure of the given simplices. Throws InvalidComplex.
  static SimplicialComplex fromSimplices(int vertexCount, std::vector<Simplex> simplices);
  static SimplicialComplex fromFacets(int vertexCount, std::vector<Simplex> facets) {
    return fromSimplices(vertexCount, std::move(facets));
  }
  /// Trusts that `simplices` is already face closed and duplicate free.
  static SimplicialComplex fromClosedSimplices(int vertexCount, std::vector<Simplex> simplices);

  int vertexCount() const { return vertexCount_; }
  int dimension() const { return static_cast<int>(byDimension_.size()) - 1; }
  bool isVoid() const { return byDimension_.empty(); }
  std::size_t simplexCount() const;
  std::vector<std::size_t> fVector() const;

  /// Simplices of dimension d (empty when d is out of range).
  const std::vector<Simplex>& simplices(int d) const;
  std::vector<Simplex> allSimplices() const;
  std::vector<Simplex> facets() const;

  bool contains(const Simplex& s) const;
  /// Position of s inside simplices(s.size() - 1).
  std::optional<std::size_t> indexOf(const Simplex& s) const;

  /// Vertices that are 0-simplices.
  std::vector<int> realizedVertices() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertexCount_ == b.vertexCount_ && a.byDimension_ == b.byDimension_;
  }

 private:
  int vertexCount_ = 0;
  std::vector<std::vector<Simplex>> byDimension_;
};

/// Every clique of the graph on {0..n-1} given by `adjacent` (called with
/// i < j), i.e. the flag complex.
SimplicialComplex cliqueComplex(int n, const std::function<bool(int, int)>& adjacent);

/// Full simplex on {0..n-1}.
SimplicialComplex fullSimplex(int n);
/// Boundary of the simplex on {0..n-1}.
SimplicialComplex simplexBoundary(int n);

/// Simplicial join; y's vertices are shifted by x.vertexCount().
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

/// Throws SimplexAbsent when sigma is not a simplex of x.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& x, const Simplex& sigma);

/// Subcomplex of simplices whose vertices all satisfy `keep`.
SimplicialComplex inducedSubcomplex(const SimplicialComplex& x, const std::function<bool(int)>& keep);

/// Renumbers vertices by `map` (old -> new, injective on realized vertices).
SimplicialComplex relabel(const SimplicialComplex& x, const std::vector<int>& map, int newVertexCount);

}  // namespace morsespine
