#pragma once

#include <string>
#include <vector>

#include "morsespine/complex.hpp"
#include "morsespine/smith.hpp"

namespace morsespine {

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool isZero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology in degrees -1..dim, plus the f-vector it was
/// computed from.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;       // groups[d + 1] is degree d
  std::vector<std::size_t> simplexCounts;  // f-vector, index 0 = vertices

  int topDegree() const { return static_cast<int>(groups.size()) - 2; }
  /// Zero group outside the stored range.
  const HomologyGroup& degree(int d) const;
  bool isVoid() const { return simplexCounts.empty(); }

  /// Groups agree in every degree (the f-vectors may differ).
  bool sameHomology(const HomologyProfile& other) const;
};

HomologyProfile reducedHomology(const SimplicialComplex& x);

/// Reduced Euler characteristic of the f-vector equals the alternating sum of
/// the free ranks.
bool eulerConsistent(const HomologyProfile& h);

enum class Shape { Void, AcyclicPoint, Wedge, Other };

struct Classification {
  Shape shape = Shape::Other;
  int dimension = 0;  // Wedge only
  std::size_t count = 0;

  /// "Void", "AcyclicPoint", "Wedge(1,3)", "Other"
  std::string toString() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classifyProfile(const HomologyProfile& h);

/// Homotopy-type target "(possibly empty) wedge of spheres of dimension d":
/// Wedge(d, r), or acyclic; Void stands for the single (-1)-sphere, so it
/// qualifies exactly when d == -1.
bool isSphericalOfDimension(const Classification& c, int d);
inline bool isAcyclic(const Classification& c) { return c.shape == Shape::AcyclicPoint; }

}  // namespace morsespine
