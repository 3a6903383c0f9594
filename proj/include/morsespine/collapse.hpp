#pragma once

#include "morsespine/complex.hpp"

namespace morsespine {

/// Greedy elementary collapses: repeatedly removes a face contained in exactly
/// one other simplex together with that simplex, higher dimensions first,
/// until no free face remains. The result is a deformation retract of x.
SimplicialComplex freeFaceCollapse(const SimplicialComplex& x);

/// The greedy collapse ends in a single vertex.
bool collapsesToPoint(const SimplicialComplex& x);

}  // namespace morsespine
