#include "lpc/weyl.hpp"

#include <algorithm>
#include <string>

namespace lpc {

IntMat simple_reflection_matrix(const BasedRootDatum& datum, int i) {
  const IntVec& alpha = datum.root(i);
  const IntVec& covee = datum.coroot(i);
  int n = datum.rank();
  IntMat m = IntMat::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) = chk_add(m.at(r, c), -chk_mul(alpha[r], covee[c]));
  return m;
}

WeylElement simple_reflection(const BasedRootDatum& datum, int i) {
  return WeylElement{simple_reflection_matrix(datum, i), {i}};
}

IntMat right_mul_reflection(const BasedRootDatum& datum, const IntMat& m, int i) {
  // m * s_i: column j becomes col_j(m) - alpha^vee[j] * (m alpha).
  const IntVec& alpha = datum.root(i);
  const IntVec& covee = datum.coroot(i);
  IntVec ma = imat_apply(m, alpha);
  IntMat out = m;
  for (int c = 0; c < m.cols; ++c) {
    if (covee[c] == 0) continue;
    for (int r = 0; r < m.rows; ++r)
      out.at(r, c) = chk_add(out.at(r, c), -chk_mul(covee[c], ma[r]));
  }
  return out;
}

IntMat left_mul_reflection(const BasedRootDatum& datum, const IntMat& m, int i) {
  // s_i * m: row r becomes row_r(m) - alpha[r] * (alpha^vee^T m).
  const IntVec& alpha = datum.root(i);
  const IntVec& covee = datum.coroot(i);
  IntVec vm(m.cols, 0);
  for (int c = 0; c < m.cols; ++c) {
    std::int64_t acc = 0;
    for (int r = 0; r < m.rows; ++r)
      acc = chk_add(acc, chk_mul(covee[r], m.at(r, c)));
    vm[c] = acc;
  }
  IntMat out = m;
  for (int r = 0; r < m.rows; ++r) {
    if (alpha[r] == 0) continue;
    for (int c = 0; c < m.cols; ++c)
      out.at(r, c) = chk_add(out.at(r, c), -chk_mul(alpha[r], vm[c]));
  }
  return out;
}

ParabolicSubset ParabolicSubset::make(std::vector<int> idx, int ssrank) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || i >= ssrank)
      fail(errc::index_out_of_range,
           "simple root index " + std::to_string(i + 1) + " outside 1.." +
               std::to_string(ssrank));
  return ParabolicSubset{std::move(idx)};
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

WeylGroup WeylGroup::generate(const BasedRootDatum& datum, std::size_t cap) {
  WeylGroup W;
  W.datum_ = datum;
  int l = datum.ssrank();
  IntMat id = IntMat::identity(datum.rank());
  W.elems_.push_back(WeylElement{id, {}});
  W.cayley_.push_back(std::vector<int>(l, -1));
  W.index_.emplace(id.key(), 0);
  // Processing elements in storage order with generators ascending emits
  // candidate words in (length, ShortLex) order, so the first discovery of a
  // matrix carries its canonical word.
  for (std::size_t e = 0; e < W.elems_.size(); ++e) {
    for (int i = 0; i < l; ++i) {
      IntMat m = right_mul_reflection(datum, W.elems_[e].matrix, i);
      std::string k = m.key();
      auto it = W.index_.find(k);
      int idx;
      if (it == W.index_.end()) {
        idx = static_cast<int>(W.elems_.size());
        if (static_cast<std::size_t>(idx) >= cap)
          fail(errc::group_too_large,
               "group enumeration exceeds cap of " + std::to_string(cap));
        std::vector<int> word = W.elems_[e].word;
        word.push_back(i);
        W.elems_.push_back(WeylElement{std::move(m), std::move(word)});
        W.cayley_.push_back(std::vector<int>(l, -1));
        W.index_.emplace(std::move(k), idx);
      } else {
        idx = it->second;
      }
      W.cayley_[e][i] = idx;
    }
  }
  return W;
}

int WeylGroup::mul(int a, int b) const {
  int e = a;
  for (int i : elems_[b].word) e = cayley_[e][i];
  return e;
}

int WeylGroup::inverse(int e) const {
  int r = 0;
  const auto& w = elems_[e].word;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = cayley_[r][*it];
  return r;
}

int WeylGroup::index_of(const IntMat& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> WeylGroup::try_index_of(const IntMat& m) const {
  int i = index_of(m);
  if (i < 0) return std::nullopt;
  return i;
}

WeylElement weyl_dual_iso(const WeylElement& w) {
  auto inv = int_inverse(w.matrix);
  if (!inv) fail(errc::internal_error, "group element is not unimodular");
  return WeylElement{inv->transpose(), w.word};
}

std::vector<int> parabolic_subgroup(const WeylGroup& W, const ParabolicSubset& I) {
  for (int i : I.indices)
    if (i >= W.datum().ssrank())
      fail(errc::index_out_of_range, "simple root index " + std::to_string(i + 1));
  std::vector<char> seen(W.order(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int i : I.indices) {
      int e2 = W.right_mul(queue[q], i);
      if (!seen[e2]) {
        seen[e2] = 1;
        queue.push_back(e2);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

WeylCoset coset_min_rep(const WeylGroup& W, int w, const ParabolicSubset& I) {
  if (w < 0 || static_cast<std::size_t>(w) >= W.order())
    fail(errc::index_out_of_range, "element index " + std::to_string(w));
  int e = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : I.indices) {
      int e2 = W.right_mul(e, i);
      if (W.element(e2).length() < W.element(e).length()) {
        e = e2;
        moved = true;
        break;
      }
    }
  }
  return WeylCoset{e, I};
}

namespace {

bool is_identity_perm(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_flip_perm(const std::vector<int>& p) {
  int l = static_cast<int>(p.size());
  for (int i = 0; i < l; ++i)
    if (p[i] != l - 1 - i) return false;
  return true;
}

void check_conjugation(const BasedRootDatum& datum, const std::vector<int>& perm,
                       const IntMat& m, const IntMat& minv) {
  for (int i = 0; i < datum.ssrank(); ++i) {
    IntMat lhs = imat_mul(imat_mul(m, simple_reflection_matrix(datum, i)), minv);
    if (!(lhs == simple_reflection_matrix(datum, perm[i])))
      fail(errc::action_basis_undefined,
           "lattice matrix does not conjugate s_" + std::to_string(i + 1) +
               " to s_" + std::to_string(perm[i] + 1));
  }
}

}  // namespace

GaloisAction GaloisAction::trivial(const BasedRootDatum& datum) {
  GaloisAction a;
  a.rank_ = datum.rank();
  return a;
}

GaloisAction GaloisAction::create(const BasedRootDatum& datum,
                                  std::vector<std::vector<int>> perms,
                                  std::vector<IntMat> lattice_matrices) {
  GaloisAction a;
  a.rank_ = datum.rank();
  int l = datum.ssrank();
  CartanMatrix cartan = datum.cartan();
  if (!lattice_matrices.empty() && lattice_matrices.size() != perms.size())
    fail(errc::dimension_mismatch,
         "one lattice matrix per action generator is required");
  for (size_t g = 0; g < perms.size(); ++g) {
    const auto& p = perms[g];
    if (static_cast<int>(p.size()) != l)
      fail(errc::dimension_mismatch,
           "action generator " + std::to_string(g) + " has length " +
               std::to_string(p.size()) + ", expected " + std::to_string(l));
    std::vector<char> hit(l, 0);
    for (int v : p) {
      if (v < 0 || v >= l)
        fail(errc::index_out_of_range,
             "action generator " + std::to_string(g) + " maps outside 0.." +
                 std::to_string(l - 1));
      hit[v] = 1;
    }
    for (int i = 0; i < l; ++i)
      if (!hit[i])
        fail(errc::index_out_of_range,
             "action generator " + std::to_string(g) + " is not a permutation");
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (cartan.entries.at(p[i], p[j]) != cartan.entries.at(i, j))
          fail(errc::cartan_sign_violation,
               "action generator " + std::to_string(g) +
                   " does not preserve the Cartan matrix");

    IntMat m;
    if (!lattice_matrices.empty()) {
      m = lattice_matrices[g];
      if (m.rows != datum.rank() || m.cols != datum.rank())
        fail(errc::dimension_mismatch, "lattice matrix has wrong shape");
    } else if (is_identity_perm(p)) {
      m = IntMat::identity(datum.rank());
    } else if (l == datum.rank()) {
      // Roots form a Q-basis; the extension is forced.  Solve M A = A_sigma
      // columnwise, where A has the roots as columns.
      RatMat A(datum.rank(), l);
      for (int i = 0; i < l; ++i)
        for (int r = 0; r < datum.rank(); ++r)
          A.at(r, i) = Rational(datum.root(i)[r]);
      // M = A_sigma A^{-1}: column c of M solves A^T y = (row c of A_sigma)^T.
      RatMat At = A.transpose();
      m = IntMat(datum.rank(), datum.rank());
      for (int r = 0; r < datum.rank(); ++r) {
        RatVec rhs(l);
        for (int i = 0; i < l; ++i) rhs[i] = Rational(datum.root(p[i])[r]);
        auto y = solve_linear(At, rhs);
        if (!y)
          fail(errc::action_basis_undefined,
               "permutation does not extend to the lattice");
        for (int c = 0; c < datum.rank(); ++c) {
          if (!(*y)[c].is_integer())
            fail(errc::action_basis_undefined,
                 "forced lattice extension is not integral");
          m.at(r, c) = (*y)[c].num();
        }
      }
    } else if (datum.standard_basis() && is_flip_perm(p)) {
      // Coordinate reversal extends the diagram flip of the GL_n shape.
      m = IntMat(datum.rank(), datum.rank());
      for (int r = 0; r < datum.rank(); ++r) m.at(r, datum.rank() - 1 - r) = 1;
    } else {
      fail(errc::action_basis_undefined,
           "no lattice extension known for action generator " + std::to_string(g));
    }

    auto minv = int_inverse(m);
    if (!minv)
      fail(errc::action_basis_undefined, "lattice matrix is not unimodular");
    check_conjugation(datum, p, m, *minv);
    a.perms_.push_back(p);
    a.mats_.push_back(std::move(m));
    a.inv_mats_.push_back(std::move(*minv));
  }
  return a;
}

bool GaloisAction::is_trivial() const {
  for (const auto& p : perms_)
    if (!is_identity_perm(p)) return false;
  for (const auto& m : mats_)
    if (!(m == IntMat::identity(rank_))) return false;
  return true;
}

const std::vector<int>& GaloisAction::perm(int g) const {
  if (g < 0 || g >= num_generators())
    fail(errc::index_out_of_range, "action generator " + std::to_string(g));
  return perms_[g];
}

const IntMat& GaloisAction::matrix(int g) const {
  if (g < 0 || g >= num_generators())
    fail(errc::index_out_of_range, "action generator " + std::to_string(g));
  return mats_[g];
}

const IntMat& GaloisAction::inverse_matrix(int g) const {
  if (g < 0 || g >= num_generators())
    fail(errc::index_out_of_range, "action generator " + std::to_string(g));
  return inv_mats_[g];
}

std::vector<std::vector<int>> GaloisAction::root_orbits(int l) const {
  std::vector<int> owner(l, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < l; ++start) {
    if (owner[start] >= 0) continue;
    std::vector<int> orbit{start};
    owner[start] = static_cast<int>(orbits.size());
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (const auto& p : perms_) {
        int img = p[orbit[q]];
        if (owner[img] < 0) {
          owner[img] = static_cast<int>(orbits.size());
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool GaloisAction::stabilizes(const ParabolicSubset& I) const {
  for (const auto& p : perms_)
    for (int i : I.indices)
      if (!I.contains(p[i])) return false;
  return true;
}

GaloisAction GaloisAction::dual_action() const {
  GaloisAction d;
  d.rank_ = rank_;
  d.perms_ = perms_;
  for (size_t g = 0; g < mats_.size(); ++g) {
    d.mats_.push_back(inv_mats_[g].transpose());
    d.inv_mats_.push_back(mats_[g].transpose());
  }
  return d;
}

WeylElement galois_conjugate(const WeylGroup& W, const GaloisAction& action,
                             const std::vector<int>& gamma, const WeylElement& w) {
  IntMat m = w.matrix;
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it)
    m = imat_mul(imat_mul(action.matrix(*it), m), action.inverse_matrix(*it));
  int idx = W.index_of(m);
  if (idx < 0)
    fail(errc::internal_error, "conjugated element left the group");
  return W.element(idx);
}

std::vector<int> fixed_subgroup(const WeylGroup& W, const GaloisAction& action) {
  std::vector<int> out;
  for (std::size_t e = 0; e < W.order(); ++e) {
    const IntMat& m = W.element(static_cast<int>(e)).matrix;
    bool ok = true;
    for (int g = 0; g < action.num_generators() && ok; ++g)
      ok = imat_mul(action.matrix(g), m) == imat_mul(m, action.matrix(g));
    if (ok) out.push_back(static_cast<int>(e));
  }
  return out;
}

InvariantLattice invariant_lattice(const BasedRootDatum& datum,
                                   const std::vector<IntMat>& subgroup) {
  int n = datum.rank();
  std::vector<IntVec> constraints;
  for (const IntMat& m : subgroup) {
    if (m.rows != n || m.cols != n)
      fail(errc::dimension_mismatch, "subgroup matrix has wrong shape");
    for (int r = 0; r < n; ++r) {
      IntVec row(n);
      bool nonzero = false;
      for (int c = 0; c < n; ++c) {
        row[c] = m.at(r, c) - (r == c ? 1 : 0);
        nonzero = nonzero || row[c] != 0;
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  return InvariantLattice{n, integer_kernel(constraints, n)};
}

namespace {

// Coset partition of `members` (must be a union of W0-cosets) by min reps.
std::vector<int> coset_reps_within(const WeylGroup& W, const std::vector<int>& members,
                                   const std::vector<int>& subgroup) {
  std::vector<char> visited(W.order(), 0);
  std::vector<int> reps;
  for (int e : members) {
    if (visited[e]) continue;
    reps.push_back(e);
    for (int u : subgroup) visited[W.mul(e, u)] = 1;
  }
  return reps;
}

}  // namespace

RelativeWeylGroup relative_weyl(const WeylGroup& W, const ParabolicSubset& I0,
                                const GaloisAction& action) {
  if (!action.stabilizes(I0))
    fail(errc::i0_not_stable, "I0 is not stable under the diagram action");

  std::vector<int> W0 = parabolic_subgroup(W, I0);
  std::vector<char> in_W0(W.order(), 0);
  for (int e : W0) in_W0[e] = 1;

  // Normalizer: w W0 w^{-1} = W0 iff every conjugated generator lands in W0.
  std::vector<int> gen_idx;
  for (int i : I0.indices) gen_idx.push_back(W.right_mul(0, i));
  std::vector<int> normalizer;
  for (std::size_t e = 0; e < W.order(); ++e) {
    int einv = W.inverse(static_cast<int>(e));
    bool ok = true;
    for (int s : gen_idx) {
      int conj = W.mul(W.mul(static_cast<int>(e), s), einv);
      if (!in_W0[conj]) {
        ok = false;
        break;
      }
    }
    if (ok) normalizer.push_back(static_cast<int>(e));
  }

  std::vector<char> fixed(W.order(), 1);
  if (!action.is_trivial()) {
    std::fill(fixed.begin(), fixed.end(), 0);
    for (int e : fixed_subgroup(W, action)) fixed[e] = 1;
  }

  std::vector<int> norm_fixed, W0_fixed;
  for (int e : normalizer)
    if (fixed[e]) norm_fixed.push_back(e);
  for (int e : W0)
    if (fixed[e]) W0_fixed.push_back(e);

  RelativeWeylGroup R;
  R.base = I0;
  std::vector<IntMat> gens;
  for (int i : I0.indices) gens.push_back(simple_reflection_matrix(W.datum(), i));
  R.lattice = invariant_lattice(W.datum(), gens);
  R.reps = coset_reps_within(W, norm_fixed, W0_fixed);
  R.full_weyl = action.is_trivial() && I0.indices.empty();

  // Second description: action-stable cosets of N_W(W0)/W0.  The two counts
  // must agree; a mismatch means the fixed-points construction lost cosets.
  {
    std::vector<int> full_reps = coset_reps_within(W, normalizer, W0);
    std::size_t stable = 0;
    for (int r : full_reps) {
      bool ok = true;
      for (int g = 0; g < action.num_generators() && ok; ++g) {
        IntMat conj = imat_mul(imat_mul(action.matrix(g), W.element(r).matrix),
                               action.inverse_matrix(g));
        int idx = W.index_of(conj);
        if (idx < 0)
          fail(errc::internal_error, "action does not normalize the group");
        ok = coset_min_rep(W, idx, I0).rep == coset_min_rep(W, r, I0).rep;
      }
      if (ok) ++stable;
    }
    if (stable != R.reps.size())
      fail(errc::relative_weyl_mismatch,
           "fixed-coset count " + std::to_string(stable) +
               " != fixed-element coset count " + std::to_string(R.reps.size()));
  }

  // Induced action on the invariant lattice: solve M b = B a columnwise.
  int k = static_cast<int>(R.lattice.basis.size());
  int n = W.datum().rank();
  bool identity_basis = k == n;
  for (int c = 0; identity_basis && c < k; ++c)
    for (int r = 0; r < n; ++r)
      if (R.lattice.basis[c][r] != (r == c ? 1 : 0)) identity_basis = false;
  if (identity_basis) {
    // The lattice is all of Z^n, so the induced action is the matrix itself.
    for (int rep : R.reps) R.induced.push_back(W.element(rep).matrix);
    return R;
  }
  RatMat B(n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) B.at(r, c) = Rational(R.lattice.basis[c][r]);
  for (int rep : R.reps) {
    IntMat A(k, k);
    for (int c = 0; c < k; ++c) {
      IntVec mb = imat_apply(W.element(rep).matrix, R.lattice.basis[c]);
      RatVec rhs(n);
      for (int r = 0; r < n; ++r) rhs[r] = Rational(mb[r]);
      auto sol = solve_linear(B, rhs);
      if (!sol)
        fail(errc::internal_error, "coset rep does not preserve the invariant lattice");
      for (int r = 0; r < k; ++r) {
        if (!(*sol)[r].is_integer())
          fail(errc::internal_error, "induced lattice action is not integral");
        A.at(r, c) = (*sol)[r].num();
      }
    }
    R.induced.push_back(std::move(A));
  }
  return R;
}

bool is_relevant_coset(const WeylGroup& W, const WeylCoset& coset,
                       const ParabolicSubset& I0, const GaloisAction& action) {
  for (int i : I0.indices)
    if (!coset.I.contains(i)) return false;
  if (!action.stabilizes(coset.I)) return false;

  std::vector<int> W0 = parabolic_subgroup(W, I0);
  std::vector<char> in_W0(W.order(), 0);
  for (int e : W0) in_W0[e] = 1;
  std::vector<int> gen_idx;
  for (int i : I0.indices) gen_idx.push_back(W.right_mul(0, i));

  std::vector<int> WI = parabolic_subgroup(W, coset.I);
  for (int u : WI) {
    int e = W.mul(coset.rep, u);
    int einv = W.inverse(e);
    bool ok = true;
    for (int s : gen_idx)
      if (!in_W0[W.mul(W.mul(e, s), einv)]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    const IntMat& m = W.element(e).matrix;
    for (int g = 0; g < action.num_generators() && ok; ++g)
      ok = imat_mul(action.matrix(g), m) == imat_mul(m, action.matrix(g));
    if (ok) return true;
  }
  return false;
}

std::vector<int> levi_of_coset(const WeylGroup& W, const WeylCoset& coset) {
  std::vector<int> WI = parabolic_subgroup(W, coset.I);
  int inv = W.inverse(coset.rep);
  std::vector<int> out;
  out.reserve(WI.size());
  for (int u : WI) out.push_back(W.mul(W.mul(coset.rep, u), inv));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lpc
