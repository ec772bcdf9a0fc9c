#pragma once

#include <optional>
#include <utility>

#include "lpc/weyl.hpp"

namespace lpc {

// The rational span of the invariant lattice of a standard Levi subset I,
// together with a symmetric positive-definite pairing on the ambient space
// that every simple reflection preserves.  The default pairing is the
// coordinate dot product for a GL_n-shaped datum, and the average of the
// dot product over the full Weyl group otherwise.
struct AStarSpace {
  BasedRootDatum datum;
  ParabolicSubset I;
  InvariantLattice lattice;
  RatMat gram;

  static AStarSpace create(const BasedRootDatum& datum, const ParabolicSubset& I,
                           std::optional<RatMat> gram = std::nullopt);

  int dim() const { return static_cast<int>(lattice.basis.size()); }
};

// A rational point of the span, in ambient coordinates.  Construction
// rejects vectors not fixed by W_I (equivalently, outside the span).
struct NuVector {
  RatVec coords;

  static NuVector create(const AStarSpace& space, RatVec coords);
  bool operator==(const NuVector& o) const = default;
};

// A diagonalizable conjugacy datum with rational exponents of q, encoded by
// the exponent multiset (descending).
struct HyperbolicElement {
  RatVec exponents;
  bool operator==(const HyperbolicElement& o) const = default;
};

// Orthogonal projections, with respect to the gram form, of the simple
// roots outside I onto the span.  Paired with projection indices ascending.
std::vector<RatVec> projected_simple_roots(const AStarSpace& space);

// Strict positivity against every projected simple root.
bool is_regular(const NuVector& nu, const AStarSpace& space);

// The dominant point of the relative-Weyl orbit of nu, with the
// minimal-length element w achieving it.  space0 must sit over the same I0
// the relative group was built from.
std::pair<WeylElement, NuVector> dominant_conjugate(const NuVector& nu,
                                                    const RelativeWeylGroup& relW,
                                                    const AStarSpace& space0,
                                                    const WeylGroup& W);

// I(nu) = I0 plus every simple root outside I0 whose projection pairs to
// zero with the (dominant) nu.  Enlargement happens only by whole action
// orbits; a partially vanishing orbit raises PartialGaloisOrbit.
ParabolicSubset maximal_levi_of(const NuVector& nu_dominant, const AStarSpace& space0,
                                const GaloisAction* action = nullptr);

// The central hyperbolic datum attached to nu: its ambient coordinates read
// as exponents of q.
HyperbolicElement z_of_nu(const NuVector& nu, const AStarSpace& space);

}  // namespace lpc
