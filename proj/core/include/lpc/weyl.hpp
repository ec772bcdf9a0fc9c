#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lpc/root_datum.hpp"

namespace lpc {

// One Weyl group element: its action on the character lattice plus its
// canonical word, the ShortLex-least shortest word in the simple
// reflections (generator indices are 0-based).  The matrix is the product
// of the simple-reflection matrices along the word, left to right.
// Equality of elements is equality of matrices.
struct WeylElement {
  IntMat matrix;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// Matrix of s_i: x -> x - <x, alpha_i^vee> alpha_i.
IntMat simple_reflection_matrix(const BasedRootDatum& datum, int i);
WeylElement simple_reflection(const BasedRootDatum& datum, int i);

// x -> x*s_i and x -> s_i*x as rank-1 updates.
IntMat right_mul_reflection(const BasedRootDatum& datum, const IntMat& m, int i);
IntMat left_mul_reflection(const BasedRootDatum& datum, const IntMat& m, int i);

// Sorted, duplicate-free set of simple-root indices (0-based).
struct ParabolicSubset {
  std::vector<int> indices;

  static ParabolicSubset make(std::vector<int> idx, int ssrank);
  bool contains(int i) const;
  bool operator==(const ParabolicSubset& o) const = default;
};

// The full Weyl group, enumerated once by breadth-first closure from the
// simple reflections.  Elements are stored in the canonical order (length,
// then ShortLex on canonical words); element 0 is the identity.  The right
// Cayley table elem * s_i is kept for all elements.  Immutable after
// generation.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  // Raises GroupTooLarge past `cap` elements.
  static WeylGroup generate(const BasedRootDatum& datum,
                            std::size_t cap = kDefaultCap);

  const BasedRootDatum& datum() const { return datum_; }
  std::size_t order() const { return elems_.size(); }
  const WeylElement& element(int e) const { return elems_[e]; }
  const std::vector<WeylElement>& elements() const { return elems_; }

  // Index of elem * s_i.
  int right_mul(int e, int i) const { return cayley_[e][i]; }
  int mul(int a, int b) const;
  int inverse(int e) const;
  int index_of(const IntMat& m) const;  // -1 when not a member
  std::optional<int> try_index_of(const IntMat& m) const;

 private:
  BasedRootDatum datum_;
  std::vector<WeylElement> elems_;
  std::vector<std::vector<int>> cayley_;
  std::unordered_map<std::string, int> index_;
};

// The image of w under the duality isomorphism W -> W^vee, i.e. the element
// of the dual datum's Weyl group acting by transpose-inverse.  Its canonical
// word equals w's.
WeylElement weyl_dual_iso(const WeylElement& w);

// Element indices of W_I, in canonical order.
std::vector<int> parabolic_subgroup(const WeylGroup& W, const ParabolicSubset& I);

// A coset w * W_I, stored by its unique minimal-length representative.
struct WeylCoset {
  int rep;  // element index in the ambient group
  ParabolicSubset I;
  bool operator==(const WeylCoset& o) const = default;
};

// Minimal-length representative of w * W_I via repeated right-descent.
WeylCoset coset_min_rep(const WeylGroup& W, int w, const ParabolicSubset& I);

// A diagram action: each generator permutes the simple roots preserving the
// Cartan matrix, together with its extension to the character lattice.  The
// extension is taken from explicit matrices when supplied; otherwise it is
// resolved as the identity (trivial permutation), the unique extension when
// the roots span (semisimple rank == rank), or the coordinate reversal for
// the flip of a standard-basis datum.  Unresolvable cases raise
// ActionBasisUndefined.
class GaloisAction {
 public:
  static GaloisAction trivial(const BasedRootDatum& datum);
  static GaloisAction create(const BasedRootDatum& datum,
                             std::vector<std::vector<int>> perms,
                             std::vector<IntMat> lattice_matrices = {});

  int num_generators() const { return static_cast<int>(perms_.size()); }
  bool is_trivial() const;
  const std::vector<int>& perm(int g) const;
  const IntMat& matrix(int g) const;
  const IntMat& inverse_matrix(int g) const;
  int rank() const { return rank_; }
  int ssrank() const { return static_cast<int>(perms_.empty() ? 0 : perms_[0].size()); }

  // Orbit partition of {0..l-1} under all generator permutations.
  std::vector<std::vector<int>> root_orbits(int l) const;

  // sigma(I) == I for every generator.
  bool stabilizes(const ParabolicSubset& I) const;

  // The transported action on the dual datum: same permutations, lattice
  // matrices replaced by transpose-inverse.
  GaloisAction dual_action() const;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<IntMat> mats_;
  std::vector<IntMat> inv_mats_;
};

// Conjugate w by the action of the word `gamma` in the action generators.
WeylElement galois_conjugate(const WeylGroup& W, const GaloisAction& action,
                             const std::vector<int>& gamma, const WeylElement& w);

// Indices of the elements fixed by every action generator.
std::vector<int> fixed_subgroup(const WeylGroup& W, const GaloisAction& action);

// Saturated fixed lattice {x : w x = x for all w in the subgroup}, with its
// canonical Hermite-reduced basis (rows).
struct InvariantLattice {
  int ambient_rank = 0;
  std::vector<IntVec> basis;
  bool operator==(const InvariantLattice& o) const = default;
};

InvariantLattice invariant_lattice(const BasedRootDatum& datum,
                                   const std::vector<IntMat>& subgroup);

// The relative Weyl group of a standard Levi given by I0: cosets of
// N_W(W_{I0})^mu modulo W_{I0}^mu.  Each coset is stored by its minimal
// canonical representative together with the induced integer action on the
// invariant lattice of I0.  Construction cross-checks the coset count
// against the count of action-stable cosets of N_W(W_{I0})/W_{I0} and
// raises RelativeWeylMismatch if the two descriptions ever disagree.
struct RelativeWeylGroup {
  ParabolicSubset base;           // I0
  InvariantLattice lattice;       // invariant lattice of W_{I0}
  std::vector<int> reps;          // element indices, canonical order
  std::vector<IntMat> induced;    // action of each rep on the lattice basis
  bool full_weyl = false;         // trivial action and empty I0

  std::size_t order() const { return reps.size(); }
};

RelativeWeylGroup relative_weyl(const WeylGroup& W, const ParabolicSubset& I0,
                                const GaloisAction& action);

// Whether the parabolic attached to the coset supports a Levi defined over
// the base: I contains I0, I is action-stable, and some element of the
// coset normalizes W_{I0} and is fixed by the action.
bool is_relevant_coset(const WeylGroup& W, const WeylCoset& coset,
                       const ParabolicSubset& I0, const GaloisAction& action);

// Element indices of rep * W_I * rep^{-1}, sorted.
std::vector<int> levi_of_coset(const WeylGroup& W, const WeylCoset& coset);

}  // namespace lpc
