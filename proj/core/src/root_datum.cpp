#include "lpc/root_datum.hpp"

#include <string>

namespace lpc {

namespace {

bool is_gln_shape(int rank, const std::vector<IntVec>& roots,
                  const std::vector<IntVec>& coroots) {
  if (static_cast<int>(roots.size()) != rank - 1) return false;
  if (roots != coroots) return false;
  for (int i = 0; i + 1 < rank; ++i) {
    for (int c = 0; c < rank; ++c) {
      std::int64_t want = c == i ? 1 : (c == i + 1 ? -1 : 0);
      if (roots[i][c] != want) return false;
    }
  }
  return true;
}

}  // namespace

BasedRootDatum BasedRootDatum::create(int rank, std::vector<IntVec> simple_roots,
                                      std::vector<IntVec> simple_coroots) {
  if (rank < 0) fail(errc::dimension_mismatch, "rank must be nonnegative");
  if (simple_roots.size() != simple_coroots.size())
    fail(errc::dimension_mismatch,
         "simple root and coroot counts differ (" +
             std::to_string(simple_roots.size()) + " vs " +
             std::to_string(simple_coroots.size()) + ")");
  int l = static_cast<int>(simple_roots.size());
  if (l > rank)
    fail(errc::dependent_roots, "more simple roots than the lattice rank");
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(simple_roots[i].size()) != rank)
      fail(errc::dimension_mismatch,
           "simple root " + std::to_string(i + 1) + " has wrong length");
    if (static_cast<int>(simple_coroots[i].size()) != rank)
      fail(errc::dimension_mismatch,
           "simple coroot " + std::to_string(i + 1) + " has wrong length");
  }
  for (int i = 0; i < l; ++i) {
    std::int64_t diag = ivec_dot(simple_roots[i], simple_coroots[i]);
    if (diag != 2)
      fail(errc::pairing_violation,
           "<alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(i + 1) +
               "^vee> = " + std::to_string(diag) + ", expected 2");
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      std::int64_t cij = ivec_dot(simple_roots[i], simple_coroots[j]);
      std::int64_t cji = ivec_dot(simple_roots[j], simple_coroots[i]);
      if (cij > 0)
        fail(errc::cartan_sign_violation,
             "<alpha_" + std::to_string(i + 1) + ", alpha_" + std::to_string(j + 1) +
                 "^vee> = " + std::to_string(cij) + " is positive");
      if ((cij == 0) != (cji == 0))
        fail(errc::cartan_sign_violation,
             "pairing of roots " + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + " vanishes on one side only");
    }
  if (int_rows_rank(simple_roots, rank) != l)
    fail(errc::dependent_roots, "simple roots are linearly dependent");
  if (int_rows_rank(simple_coroots, rank) != l)
    fail(errc::dependent_roots, "simple coroots are linearly dependent");

  BasedRootDatum d;
  d.rank_ = rank;
  d.roots_ = std::move(simple_roots);
  d.coroots_ = std::move(simple_coroots);
  d.standard_basis_ = is_gln_shape(rank, d.roots_, d.coroots_);
  return d;
}

BasedRootDatum BasedRootDatum::gln(int n) {
  if (n < 1) fail(errc::dimension_mismatch, "gln needs n >= 1");
  std::vector<IntVec> roots;
  for (int i = 0; i + 1 < n; ++i) {
    IntVec r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    roots.push_back(r);
  }
  return create(n, roots, roots);
}

BasedRootDatum BasedRootDatum::dual() const {
  return create(rank_, coroots_, roots_);
}

CartanMatrix BasedRootDatum::cartan() const {
  int l = ssrank();
  CartanMatrix c{IntMat(l, l)};
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      c.entries.at(i, j) = ivec_dot(roots_[i], coroots_[j]);
  return c;
}

const IntVec& BasedRootDatum::root(int i) const {
  if (i < 0 || i >= ssrank())
    fail(errc::index_out_of_range, "simple root index " + std::to_string(i + 1));
  return roots_[i];
}

const IntVec& BasedRootDatum::coroot(int i) const {
  if (i < 0 || i >= ssrank())
    fail(errc::index_out_of_range, "simple coroot index " + std::to_string(i + 1));
  return coroots_[i];
}

}  // namespace lpc
