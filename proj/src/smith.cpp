#include "morsespine/smith.hpp"

#include <algorithm>
#include <limits>

namespace morsespine {

namespace {

struct Overflow {};

std::int64_t mulSub(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t product = 0;
  std::int64_t result = 0;
  if (__builtin_mul_overflow(q, b, &product) || __builtin_sub_overflow(a, product, &result))
    throw Overflow{};
  return result;
}
BigInt mulSub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t result = 0;
  if (__builtin_add_overflow(a, b, &result)) throw Overflow{};
  return result;
}
BigInt checkedAdd(const BigInt& a, const BigInt& b) { return a + b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

bool isUnit(std::int64_t a) { return a == 1 || a == -1; }
bool isUnit(const BigInt& a) { return a == 1 || a == -1; }

template <class Int>
using Dense = std::vector<std::vector<Int>>;

template <class Int>
std::vector<BigInt> denseFactors(Dense<Int> a) {
  std::vector<BigInt> diagonal;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;

  auto swapInto = [&](std::size_t t, std::size_t i, std::size_t j) {
    if (i != t) std::swap(a[i], a[t]);
    if (j != t)
      for (auto& row : a) std::swap(row[j], row[t]);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // smallest nonzero magnitude in the trailing block
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || magnitude(a[i][j]) < best)) {
          best = magnitude(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swapInto(t, pi, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] = mulSub(a[i][j], q, a[t][j]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] = mulSub(a[i][j], q, a[i][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot sits in row t or column t
        std::size_t bi = t, bj = t;
        Int small = magnitude(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && magnitude(a[i][t]) < small) {
            small = magnitude(a[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && magnitude(a[t][j]) < small) {
            small = magnitude(a[t][j]);
            bi = t;
            bj = j;
          }
        swapInto(t, bi, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] = checkedAdd(a[t][k], a[i][k]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diagonal.emplace_back(magnitude(a[t][t]));
  }
  return diagonal;
}

template <class Int>
using Column = std::vector<std::pair<int, Int>>;

template <class Int>
std::vector<BigInt> sparseFactors(const SparseMatrix& m) {
  const std::size_t ncols = m.columns.size();
  std::vector<Column<Int>> cols(ncols);
  std::vector<std::vector<int>> rowColumns(m.rows);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (auto [r, v] : m.columns[c]) {
      if (v == 0) continue;
      cols[c].emplace_back(r, Int(v));
      rowColumns[r].push_back(static_cast<int>(c));
    }
  }

  std::vector<char> activeColumn(ncols, 1);
  std::vector<std::size_t> order(ncols);
  for (std::size_t c = 0; c < ncols; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cols[x].size() < cols[y].size(); });

  std::size_t units = 0;
  Column<Int> merged;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c : order) {
      if (!activeColumn[c]) continue;
      if (cols[c].empty()) {
        activeColumn[c] = 0;
        continue;
      }
      int pivotRow = -1;
      Int pivot = 0;
      for (const auto& [r, v] : cols[c]) {
        if (isUnit(v) && (pivotRow < 0 || rowColumns[r].size() < rowColumns[pivotRow].size())) {
          pivotRow = r;
          pivot = v;
        }
      }
      if (pivotRow < 0) continue;

      const std::vector<int> touched = rowColumns[pivotRow];
      for (int j : touched) {
        if (j == static_cast<int>(c) || !activeColumn[j]) continue;
        auto& target = cols[j];
        auto hit = std::lower_bound(target.begin(), target.end(), pivotRow,
                                    [](const auto& e, int r) { return e.first < r; });
        if (hit == target.end() || hit->first != pivotRow) continue;
        const Int factor = hit->second * pivot;  // pivot is its own inverse
        merged.clear();
        auto x = target.begin();
        auto y = cols[c].begin();
        while (x != target.end() || y != cols[c].end()) {
          if (y == cols[c].end() || (x != target.end() && x->first < y->first)) {
            merged.push_back(*x++);
          } else if (x == target.end() || y->first < x->first) {
            Int v = mulSub(Int(0), factor, y->second);
            rowColumns[y->first].push_back(j);
            merged.emplace_back(y->first, std::move(v));
            ++y;
          } else {
            Int v = mulSub(x->second, factor, y->second);
            if (v != 0) merged.emplace_back(x->first, std::move(v));
            ++x;
            ++y;
          }
        }
        target.swap(merged);
      }
      activeColumn[c] = 0;
      rowColumns[pivotRow].clear();
      ++units;
      progress = true;
    }
  }

  // Whatever survives has no unit entries left; finish densely.
  std::vector<int> rowIndex(m.rows, -1);
  std::vector<std::size_t> residualColumns;
  int residualRows = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!activeColumn[c] || cols[c].empty()) continue;
    residualColumns.push_back(c);
    for (const auto& e : cols[c])
      if (rowIndex[e.first] < 0) rowIndex[e.first] = residualRows++;
  }
  std::vector<BigInt> factors(units, BigInt(1));
  if (!residualColumns.empty()) {
    Dense<Int> dense(residualRows, std::vector<Int>(residualColumns.size(), Int(0)));
    for (std::size_t k = 0; k < residualColumns.size(); ++k)
      for (const auto& [r, v] : cols[residualColumns[k]]) dense[rowIndex[r]][k] = v;
    auto rest = denseFactors<Int>(std::move(dense));
    factors.insert(factors.end(), rest.begin(), rest.end());
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

SmithResult smithNormalForm(const IntegerMatrix& m) {
  try {
    return {denseFactors<std::int64_t>(m)};
  } catch (const Overflow&) {
    Dense<BigInt> big;
    for (const auto& row : m) big.emplace_back(row.begin(), row.end());
    return {denseFactors<BigInt>(std::move(big))};
  }
}

SmithResult smithNormalForm(const SparseMatrix& m) {
  try {
    return {sparseFactors<std::int64_t>(m)};
  } catch (const Overflow&) {
    return {sparseFactors<BigInt>(m)};
  }
}

}  // namespace morsespine
