#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "morsespine/complex.hpp"

namespace morsespine {

/// Finite strict partial order on {0..size-1}, transitively closed at
/// construction.
class Poset {
 public:
  Poset() = default;
  /// Throws InvalidPoset if the closure of `less` is not irreflexive.
  Poset(int size, const std::vector<std::pair<int, int>>& less);
  static Poset fromRelation(int size, const std::function<bool(int, int)>& less);

  int size() const { return size_; }
  bool less(int a, int b) const { return (rows_[a][b >> 6] >> (b & 63)) & 1u; }
  /// Strictly greater elements of a, increasing.
  std::vector<int> above(int a) const;

 private:
  void close();

  int size_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Chains of p as simplices on the element indices.
SimplicialComplex orderComplex(const Poset& p);

/// Nonempty simplices of x ordered by inclusion, in the order of
/// x.allSimplices().
Poset facePoset(const SimplicialComplex& x);

}  // namespace morsespine
