#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace morsespine {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

/// Column-major sparse integer matrix; each column is sorted by row.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
struct SmithResult {
  std::vector<BigInt> factors;
  std::size_t rank() const { return factors.size(); }
};

/// Exact Smith normal form. Works in checked 64-bit arithmetic and restarts
/// in arbitrary precision on overflow.
SmithResult smithNormalForm(const IntegerMatrix& m);

/// Same result for a sparse matrix: eliminates unit pivots without fill-in
/// control beyond a Markowitz-style choice, then runs the dense algorithm on
/// whatever is left.
SmithResult smithNormalForm(const SparseMatrix& m);

}  // namespace morsespine
