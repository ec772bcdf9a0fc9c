#include <functional>

#include "doctest.h"
#include "lpc/root_datum.hpp"

using namespace lpc;

namespace {

BasedRootDatum b2() {
  return BasedRootDatum::create(2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}});
}

BasedRootDatum g2() {
  // Simple roots in an orthogonal-free presentation: e_1, e_2 with coroots
  // chosen so the Cartan matrix is [[2,-1],[-3,2]].
  return BasedRootDatum::create(2, {{1, 0}, {0, 1}}, {{2, -3}, {-1, 2}});
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal_error;
}

}  // namespace

TEST_CASE("gln datum has the expected shape") {
  BasedRootDatum d = BasedRootDatum::gln(4);
  CHECK(d.rank() == 4);
  CHECK(d.ssrank() == 3);
  CHECK(d.root(0) == IntVec{1, -1, 0, 0});
  CHECK(d.root(2) == IntVec{0, 0, 1, -1});
  CHECK(d.coroot(1) == IntVec{0, 1, -1, 0});
  CHECK(d.standard_basis());
  CHECK_THROWS_AS(d.root(3), Error);
  CHECK_THROWS_AS(d.root(-1), Error);
  BasedRootDatum t = BasedRootDatum::gln(1);
  CHECK(t.rank() == 1);
  CHECK(t.ssrank() == 0);
}

TEST_CASE("cartan matrices") {
  CHECK(BasedRootDatum::gln(2).cartan().entries.at(0, 0) == 2);
  IntMat a2 = BasedRootDatum::gln(3).cartan().entries;
  CHECK(a2.at(0, 0) == 2);
  CHECK(a2.at(0, 1) == -1);
  CHECK(a2.at(1, 0) == -1);
  CHECK(a2.at(1, 1) == 2);

  // Independent oracle for the B2 datum (roots (1,-1),(0,1), coroots
  // (1,-1),(0,2)): entry (i,j) is the dot product of root i with coroot j.
  // By hand: (1,-1)*(1,-1)=2, (1,-1)*(0,2)=-2, (0,1)*(1,-1)=-1, (0,1)*(0,2)=2.
  BasedRootDatum b = b2();
  IntMat c = b.cartan().entries;
  CHECK(c.at(0, 0) == 2);
  CHECK(c.at(0, 1) == -2);
  CHECK(c.at(1, 0) == -1);
  CHECK(c.at(1, 1) == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(c.at(i, j) == ivec_dot(b.root(i), b.coroot(j)));

  IntMat g = g2().cartan().entries;
  CHECK(g.at(0, 0) == 2);
  CHECK(g.at(0, 1) == -1);
  CHECK(g.at(1, 0) == -3);
  CHECK(g.at(1, 1) == 2);
}

TEST_CASE("dual swaps roots and coroots") {
  BasedRootDatum d = b2();
  BasedRootDatum dd = d.dual();
  // The dual of this B2 datum has roots (1,-1),(0,2): the C2 system.  The
  // dual must itself satisfy every datum axiom (checked by re-creating it).
  CHECK(dd.root(0) == IntVec{1, -1});
  CHECK(dd.root(1) == IntVec{0, 2});
  CHECK(dd.coroot(1) == IntVec{0, 1});
  BasedRootDatum recreated = BasedRootDatum::create(
      2, {dd.root(0), dd.root(1)}, {dd.coroot(0), dd.coroot(1)});
  CHECK(recreated == dd);
  CHECK(dd.dual() == d);

  BasedRootDatum a = BasedRootDatum::gln(3);
  CHECK(a.dual() == a);  // self-dual in these coordinates
  CHECK(a.dual().dual() == a);

  // Cartan of the dual is the transpose of the Cartan.
  CHECK(d.dual().cartan().entries == d.cartan().entries.transpose());
  CHECK(g2().dual().cartan().entries == g2().cartan().entries.transpose());
}

TEST_CASE("validation rejects bad input with the right code") {
  // <alpha_i, alpha_i^vee> must be 2.
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, 0}}, {{1, 0}});
        }) == errc::pairing_violation);
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 3}});
        }) == errc::pairing_violation);
  // Off-diagonal pairings must be nonpositive.
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}});
        }) == errc::cartan_sign_violation);
  // A zero pairing must be zero on both sides.
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, 0}, {0, 1}}, {{2, 0}, {-1, 2}});
        }) == errc::cartan_sign_violation);
  // Simple roots must be linearly independent.
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, -1}, {-1, 1}}, {{1, -1}, {-1, 1}});
        }) == errc::dependent_roots);
  // More simple roots than the rank can never be independent.
  CHECK(code_of([] {
          BasedRootDatum::create(1, {{2}, {2}}, {{1}, {1}});
        }) == errc::dependent_roots);
  // Vector lengths must match the rank, and the root/coroot counts must agree.
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, -1, 0}}, {{1, -1}});
        }) == errc::dimension_mismatch);
  CHECK(code_of([] {
          BasedRootDatum::create(2, {{1, -1}}, {});
        }) == errc::dimension_mismatch);
  CHECK(code_of([] { BasedRootDatum::gln(0); }) == errc::dimension_mismatch);
}

TEST_CASE("rank-1 data") {
  BasedRootDatum sl2 = BasedRootDatum::create(1, {{2}}, {{1}});
  BasedRootDatum pgl2 = BasedRootDatum::create(1, {{1}}, {{2}});
  CHECK(sl2.cartan().entries.at(0, 0) == 2);
  CHECK(sl2.dual() == pgl2);
  CHECK(pgl2.dual() == sl2);
  CHECK(!sl2.standard_basis());
}

TEST_CASE("standard basis detection is exact") {
  CHECK(BasedRootDatum::gln(2).standard_basis());
  CHECK(!b2().standard_basis());
  CHECK(!g2().standard_basis());
  // Same roots as gln(3) but a non-matching coroot normalization.
  BasedRootDatum almost = BasedRootDatum::create(
      3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}});
  CHECK(almost.standard_basis());
  CHECK(almost == BasedRootDatum::gln(3));
}
