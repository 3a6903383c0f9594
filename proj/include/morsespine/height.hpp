#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "morsespine/graph.hpp"

namespace morsespine {

/// How the per-level degree entries d_i (i >= 1) are counted.
///
/// Literal:       d_i = sum of degree(v) over v outside level i; tail (0, 2E).
/// ReducedDegree: d_i = sum of (degree(v) - 2) over v outside level i, the
///                same summand d_0 uses; tail (0, 2E - 2V).
enum class HeightConvention { Literal, ReducedDegree };

const char* toString(HeightConvention c);
HeightConvention heightConventionFromString(const std::string& s);

/// (d_0, n_1, d_1, ..., n_L, d_L) followed by tail repeated forever.
struct HeightVector {
  std::vector<std::int64_t> head;
  std::pair<std::int64_t, std::int64_t> tail{0, 0};

  /// Entry at index i of the infinite sequence.
  std::int64_t at(std::size_t i) const;
};

HeightVector height(const BasepointedGraph& g,
                    HeightConvention convention = HeightConvention::Literal);

/// Lexicographic comparison of the infinite sequences.
std::strong_ordering compareHeights(const HeightVector& a, const HeightVector& b);

inline bool operator==(const HeightVector& a, const HeightVector& b) {
  return compareHeights(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const HeightVector& a, const HeightVector& b) {
  return compareHeights(a, b);
}

/// "(1, -1, 3) tail (0,6)"
std::string toString(const HeightVector& h);

}  // namespace morsespine
