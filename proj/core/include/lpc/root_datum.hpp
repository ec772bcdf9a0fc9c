#pragma once

#include <vector>

#include "lpc/matrix.hpp"

namespace lpc {

// Cartan pairing table C[i][j] = <alpha_i, alpha_j^vee>; diagonal is 2.
struct CartanMatrix {
  IntMat entries;
  bool operator==(const CartanMatrix& o) const = default;
};

// A based root datum: the character lattice is Z^rank in fixed coordinates,
// simple roots live in it, simple coroots in the dual copy, and the pairing
// is the coordinate dot product.  Construction validates every axiom and
// rejects with a specific error; instances are immutable afterwards.
class BasedRootDatum {
 public:
  // Validates: coordinate lengths, <alpha_i, alpha_i^vee> = 2, off-diagonal
  // pairings <= 0 with symmetric vanishing, linear independence of the roots
  // and of the coroots.
  static BasedRootDatum create(int rank, std::vector<IntVec> simple_roots,
                               std::vector<IntVec> simple_coroots);

  // Diagonal-torus datum of GL_n: rank n, roots e_i - e_{i+1}, coroots the
  // same coordinates.
  static BasedRootDatum gln(int n);

  // Swaps roots with coroots.  An involution; the Cartan matrix transposes.
  BasedRootDatum dual() const;

  CartanMatrix cartan() const;

  int rank() const { return rank_; }
  // Semisimple rank: the number of simple roots.
  int ssrank() const { return static_cast<int>(roots_.size()); }

  const std::vector<IntVec>& simple_roots() const { return roots_; }
  const std::vector<IntVec>& simple_coroots() const { return coroots_; }
  const IntVec& root(int i) const;
  const IntVec& coroot(int i) const;

  // <x, y> for x in the character lattice, y in the cocharacter lattice.
  static std::int64_t pairing(const IntVec& x, const IntVec& y) { return ivec_dot(x, y); }

  // True when the simple roots are exactly e_i - e_{i+1} for i = 1..rank-1
  // with coroots in the same coordinates (the GL_n shape).  Galois actions
  // on such a datum extend to the lattice as coordinate permutations.
  bool standard_basis() const { return standard_basis_; }

  bool operator==(const BasedRootDatum& o) const {
    return rank_ == o.rank_ && roots_ == o.roots_ && coroots_ == o.coroots_;
  }

  // The empty datum: the zero-dimensional torus.  Also what containers and
  // factory functions start from before filling in a validated datum.
  BasedRootDatum() = default;

 private:
  int rank_ = 0;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  bool standard_basis_ = false;
};

}  // namespace lpc
