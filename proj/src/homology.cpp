#include "morsespine/homology.hpp"

#include <algorithm>
#include <sstream>

namespace morsespine {

const HomologyGroup& HomologyProfile::degree(int d) const {
  static const HomologyGroup zero;
  if (d + 1 < 0 || d + 1 >= static_cast<int>(groups.size())) return zero;
  return groups[d + 1];
}

bool HomologyProfile::sameHomology(const HomologyProfile& other) const {
  const int top = std::max(topDegree(), other.topDegree());
  for (int d = -1; d <= top; ++d)
    if (!(degree(d) == other.degree(d))) return false;
  return true;
}

namespace {

SparseMatrix boundaryMatrix(const SimplicialComplex& x, int d) {
  SparseMatrix m;
  m.rows = static_cast<int>(x.simplices(d - 1).size());
  const auto& cells = x.simplices(d);
  m.columns.resize(cells.size());
  Simplex face;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& s = cells[c];
    auto& column = m.columns[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto row = x.indexOf(face);
      column.emplace_back(static_cast<int>(*row), (i % 2 == 0) ? 1 : -1);
    }
    std::sort(column.begin(), column.end());
  }
  return m;
}

}  // namespace

HomologyProfile reducedHomology(const SimplicialComplex& x) {
  HomologyProfile h;
  h.simplexCounts = x.fVector();
  const int dim = x.dimension();

  // ranks[d + 1] = rank of the boundary C_d -> C_{d-1}; C_{-1} = Z.
  std::vector<std::size_t> ranks(dim + 3, 0);
  std::vector<std::vector<BigInt>> factors(dim + 3);
  if (dim >= 0) ranks[1] = 1;  // augmentation
  for (int d = 1; d <= dim; ++d) {
    auto snf = smithNormalForm(boundaryMatrix(x, d));
    ranks[d + 1] = snf.rank();
    factors[d + 1] = std::move(snf.factors);
  }

  h.groups.resize(dim + 2);
  for (int d = -1; d <= dim; ++d) {
    const std::size_t cells = d < 0 ? 1 : h.simplexCounts[d];
    auto& group = h.groups[d + 1];
    group.rank = cells - ranks[d + 1] - ranks[d + 2];
    for (const auto& f : factors[d + 2])
      if (f > 1) group.torsion.push_back(f);
  }
  return h;
}

bool eulerConsistent(const HomologyProfile& h) {
  long long chi = -1;
  for (std::size_t d = 0; d < h.simplexCounts.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h.simplexCounts[d]);
  long long homological = 0;
  for (int d = -1; d <= h.topDegree(); ++d)
    homological += ((d + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(h.degree(d).rank);
  return chi == homological;
}

std::string Classification::toString() const {
  switch (shape) {
    case Shape::Void:
      return "Void";
    case Shape::AcyclicPoint:
      return "AcyclicPoint";
    case Shape::Wedge: {
      std::ostringstream out;
      out << "Wedge(" << dimension << ',' << count << ')';
      return out.str();
    }
    case Shape::Other:
      break;
  }
  return "Other";
}

Classification classifyProfile(const HomologyProfile& h) {
  if (h.isVoid()) return {Shape::Void, -1, 1};
  int nonzero = 0;
  int where = 0;
  bool torsion = false;
  for (int d = -1; d <= h.topDegree(); ++d) {
    const auto& g = h.degree(d);
    if (g.isZero()) continue;
    ++nonzero;
    where = d;
    torsion = torsion || !g.torsion.empty();
  }
  if (nonzero == 0) return {Shape::AcyclicPoint, 0, 0};
  if (nonzero == 1 && !torsion) return {Shape::Wedge, where, h.degree(where).rank};
  return {Shape::Other, 0, 0};
}

bool isSphericalOfDimension(const Classification& c, int d) {
  switch (c.shape) {
    case Shape::Void:
      return d == -1;
    case Shape::AcyclicPoint:
      return true;
    case Shape::Wedge:
      return c.dimension == d;
    case Shape::Other:
      break;
  }
  return false;
}

}  // namespace morsespine
