#include "lpc/chamber.hpp"

#include <algorithm>
#include <string>

namespace lpc {

namespace {

bool is_positive_definite(RatMat a) {
  if (a.rows != a.cols) return false;
  int n = a.rows;
  for (int k = 0; k < n; ++k) {
    if (!(a.at(k, k) > Rational(0))) return false;
    for (int r = k + 1; r < n; ++r) {
      if (a.at(r, k).is_zero()) continue;
      Rational f = a.at(r, k) / a.at(k, k);
      for (int c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
    }
  }
  return true;
}

RatMat reflection_invariance_checked(const BasedRootDatum& datum, RatMat g) {
  if (g.rows != datum.rank() || g.cols != datum.rank())
    fail(errc::dimension_mismatch, "gram matrix has wrong shape");
  for (int r = 0; r < g.rows; ++r)
    for (int c = 0; c < r; ++c)
      if (!(g.at(r, c) == g.at(c, r)))
        fail(errc::gram_not_invariant, "gram matrix is not symmetric");
  if (!is_positive_definite(g))
    fail(errc::gram_not_invariant, "gram matrix is not positive definite");
  for (int i = 0; i < datum.ssrank(); ++i) {
    RatMat s = RatMat::from_int(simple_reflection_matrix(datum, i));
    RatMat conj = rmat_mul(rmat_mul(s.transpose(), g), s);
    if (!(conj == g))
      fail(errc::gram_not_invariant,
           "gram matrix is not invariant under s_" + std::to_string(i + 1));
  }
  return g;
}

}  // namespace

AStarSpace AStarSpace::create(const BasedRootDatum& datum, const ParabolicSubset& I,
                              std::optional<RatMat> gram) {
  for (int i : I.indices)
    if (i >= datum.ssrank())
      fail(errc::index_out_of_range, "simple root index " + std::to_string(i + 1));
  AStarSpace s;
  s.datum = datum;
  s.I = I;
  std::vector<IntMat> gens;
  for (int i : I.indices) gens.push_back(simple_reflection_matrix(datum, i));
  s.lattice = invariant_lattice(datum, gens);
  if (gram) {
    s.gram = reflection_invariance_checked(datum, std::move(*gram));
  } else if (datum.standard_basis() || datum.ssrank() == 0) {
    s.gram = RatMat::identity(datum.rank());
  } else {
    // Average the dot product over the Weyl group to force invariance.
    WeylGroup W = WeylGroup::generate(datum);
    int n = datum.rank();
    RatMat acc(n, n);
    for (const auto& w : W.elements()) {
      IntMat wtw = imat_mul(w.matrix.transpose(), w.matrix);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) acc.at(r, c) += Rational(wtw.at(r, c));
    }
    Rational inv_order(1, static_cast<std::int64_t>(W.order()));
    for (auto& x : acc.a) x *= inv_order;
    s.gram = reflection_invariance_checked(datum, std::move(acc));
  }
  return s;
}

NuVector NuVector::create(const AStarSpace& space, RatVec coords) {
  if (static_cast<int>(coords.size()) != space.datum.rank())
    fail(errc::dimension_mismatch,
         "nu has length " + std::to_string(coords.size()) + ", expected " +
             std::to_string(space.datum.rank()));
  for (int i : space.I.indices) {
    RatVec image = imat_apply(simple_reflection_matrix(space.datum, i), coords);
    if (image != coords)
      fail(errc::nu_outside_space,
           "nu is not fixed by s_" + std::to_string(i + 1));
  }
  return NuVector{std::move(coords)};
}

std::vector<RatVec> projected_simple_roots(const AStarSpace& space) {
  int n = space.datum.rank();
  int k = space.dim();
  RatMat B(n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) B.at(r, c) = Rational(space.lattice.basis[c][r]);
  RatMat BtG = rmat_mul(B.transpose(), space.gram);
  RatMat M0 = rmat_mul(BtG, B);
  std::vector<RatVec> out;
  for (int j = 0; j < space.datum.ssrank(); ++j) {
    if (space.I.contains(j)) continue;
    RatVec alpha(n);
    for (int r = 0; r < n; ++r) alpha[r] = Rational(space.datum.root(j)[r]);
    auto c = solve_linear(M0, rmat_apply(BtG, alpha));
    if (!c) fail(errc::internal_error, "projection system is inconsistent");
    out.push_back(rmat_apply(B, *c));
  }
  return out;
}

bool is_regular(const NuVector& nu, const AStarSpace& space) {
  for (const RatVec& bar : projected_simple_roots(space))
    if (!(pair_with_gram(nu.coords, space.gram, bar) > Rational(0))) return false;
  return true;
}

namespace {

bool dominant_against(const RatVec& x, const RatMat& gram,
                      const std::vector<RatVec>& projections) {
  for (const RatVec& bar : projections)
    if (pair_with_gram(x, gram, bar) < Rational(0)) return false;
  return true;
}

}  // namespace

std::pair<WeylElement, NuVector> dominant_conjugate(const NuVector& nu,
                                                    const RelativeWeylGroup& relW,
                                                    const AStarSpace& space0,
                                                    const WeylGroup& W) {
  if (!(space0.I == relW.base))
    fail(errc::dimension_mismatch,
         "space and relative group were built over different Levi subsets");
  std::vector<RatVec> projections = projected_simple_roots(space0);

  if (relW.full_weyl) {
    // Strict descent: cross only walls with strictly negative pairing.  The
    // resulting w is the unique minimal-length achiever of the dominant
    // point.
    RatVec cur = nu.coords;
    IntMat acc = IntMat::identity(space0.datum.rank());
    bool moved = true;
    std::size_t guard = 0;
    while (moved) {
      if (++guard > 4 * W.order() + 16)
        fail(errc::internal_error, "descent failed to terminate");
      moved = false;
      for (int j = 0; j < space0.datum.ssrank(); ++j) {
        if (pair_with_gram(cur, space0.gram, projections[j]) < Rational(0)) {
          IntMat s = simple_reflection_matrix(space0.datum, j);
          cur = imat_apply(s, cur);
          acc = imat_mul(s, acc);
          moved = true;
          break;
        }
      }
    }
    int idx = W.index_of(acc);
    if (idx < 0) fail(errc::internal_error, "descent left the group");
    return {W.element(idx), NuVector{std::move(cur)}};
  }

  std::optional<RatVec> best;
  int best_rep = -1;
  for (std::size_t r = 0; r < relW.reps.size(); ++r) {
    RatVec x = imat_apply(W.element(relW.reps[r]).matrix, nu.coords);
    if (!dominant_against(x, space0.gram, projections)) continue;
    if (!best) {
      best = std::move(x);
      best_rep = relW.reps[r];
    } else if (*best != x) {
      fail(errc::internal_error, "orbit contains two distinct dominant points");
    }
  }
  if (!best)
    fail(errc::no_dominant_point, "orbit contains no dominant point");
  return {W.element(best_rep), NuVector{std::move(*best)}};
}

ParabolicSubset maximal_levi_of(const NuVector& nu_dominant, const AStarSpace& space0,
                                const GaloisAction* action) {
  std::vector<RatVec> projections = projected_simple_roots(space0);
  std::vector<int> outside;
  for (int j = 0; j < space0.datum.ssrank(); ++j)
    if (!space0.I.contains(j)) outside.push_back(j);

  std::vector<int> enlarged = space0.I.indices;
  std::vector<char> zero(outside.size(), 0);
  for (size_t t = 0; t < outside.size(); ++t) {
    Rational p = pair_with_gram(nu_dominant.coords, space0.gram, projections[t]);
    if (p < Rational(0))
      fail(errc::not_dominant,
           "nu pairs negatively with projected root " + std::to_string(outside[t] + 1));
    if (p.is_zero()) {
      zero[t] = 1;
      enlarged.push_back(outside[t]);
    }
  }

  if (action && !action->is_trivial()) {
    std::vector<int> pos_of(space0.datum.ssrank(), -1);
    for (size_t t = 0; t < outside.size(); ++t) pos_of[outside[t]] = static_cast<int>(t);
    for (const auto& orbit : action->root_orbits(space0.datum.ssrank())) {
      int zeros = 0, members = 0;
      for (int j : orbit) {
        if (pos_of[j] < 0) continue;  // inside I0
        ++members;
        zeros += zero[pos_of[j]];
      }
      if (zeros != 0 && zeros != members)
        fail(errc::partial_galois_orbit,
             "an action orbit of simple roots pairs to zero only partially");
    }
  }
  return ParabolicSubset::make(std::move(enlarged), space0.datum.ssrank());
}

HyperbolicElement z_of_nu(const NuVector& nu, const AStarSpace& space) {
  (void)space;
  return HyperbolicElement{nu.coords};
}

}  // namespace lpc
