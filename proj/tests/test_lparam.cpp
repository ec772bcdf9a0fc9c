#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "doctest.h"
#include "lpc/fuzz.hpp"
#include "lpc/lparam.hpp"

using namespace lpc;

namespace {

Segment seg(int sl2, const char* name, int rhodim, Rational e) {
  return Segment{sl2, GaloisTypeLabel{name, rhodim}, e};
}

GLnLParameter param(int n, int d, std::vector<Segment> segs) {
  return GLnLParameter::create(n, d, std::move(segs));
}

// ---------------------------------------------------------------------------
// Exhaustive classification oracle: enumerate every set partition of the
// segment list into blocks, require each block to have a constant exponent,
// zero the exponents, order blocks by descending beta, and keep the triples
// whose assembly reproduces phi.  Exactly one triple may survive, and it
// must be what classify returns.  Shares no grouping code with the library.
// ---------------------------------------------------------------------------
std::vector<GLnStandardTriple> all_realizations(const GLnLParameter& phi,
                                                Mode mode) {
  const auto& segs = phi.segments();
  int k = static_cast<int>(segs.size());
  std::vector<GLnStandardTriple> found;
  std::vector<int> part(k, -1);
  std::function<void(int, int)> rec = [&](int i, int nblocks) {
    if (i == k) {
      struct Blk {
        Rational beta;
        std::vector<Segment> segs;
      };
      std::vector<Blk> blks(nblocks);
      for (int b = 0; b < nblocks; ++b) blks[b].beta = Rational(0);
      std::vector<bool> seen(nblocks, false);
      for (int j = 0; j < k; ++j) {
        int b = part[j];
        Rational beta =
            mode == Mode::quotient ? segs[j].exponent : -segs[j].exponent;
        if (!seen[b]) {
          blks[b].beta = beta;
          seen[b] = true;
        } else if (!(blks[b].beta == beta)) {
          return;  // block exponent not constant
        }
        Segment z = segs[j];
        z.exponent = Rational(0);
        blks[b].segs.push_back(z);
      }
      std::sort(blks.begin(), blks.end(),
                [](const Blk& a, const Blk& b) { return b.beta < a.beta; });
      std::vector<TripleBlock> blocks;
      for (auto& b : blks) {
        long long dim = 0;
        for (const auto& s : b.segs) dim += segment_dim(s);
        if (dim % phi.d() != 0) return;
        blocks.push_back(TripleBlock{static_cast<int>(dim / phi.d()),
                                     std::move(b.segs), b.beta});
      }
      try {
        GLnStandardTriple t = GLnStandardTriple::create(phi.d(), std::move(blocks));
        if (assemble(t, mode) == phi) found.push_back(std::move(t));
      } catch (const Error&) {
      }
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      part[i] = b;
      rec(i + 1, b == nblocks ? nblocks + 1 : nblocks);
    }
    part[i] = -1;
  };
  rec(0, 0);
  return found;
}

void check_against_oracle(const GLnLParameter& phi, Mode mode) {
  auto all = all_realizations(phi, mode);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == classify(phi, mode));
}

}  // namespace

TEST_CASE("parameter construction and canonical order") {
  GLnLParameter p = param(3, 1, {seg(2, "triv", 1, Rational(0)),
                                 seg(1, "triv", 1, Rational(1))});
  // Canonical order: exponent descending first.
  CHECK(p.segments()[0].exponent == Rational(1));
  CHECK(p.segments()[1].exponent == Rational(0));
  CHECK(p.n() == 3);
  CHECK(p.d() == 1);

  CHECK_THROWS_AS(param(3, 1, {seg(2, "triv", 1, Rational(0))}), Error);
  try {
    param(3, 1, {seg(2, "triv", 1, Rational(0))});
  } catch (const Error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
  CHECK_THROWS_AS(param(0, 1, {}), Error);
  try {
    param(0, 1, {});
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_parameter);
  }
  CHECK_THROWS_AS(param(1, 1, {seg(0, "triv", 1, Rational(0))}), Error);
  CHECK_THROWS_AS(param(1, 1, {seg(1, "", 1, Rational(0))}), Error);
  CHECK_THROWS_AS(param(1, 0, {seg(1, "triv", 1, Rational(0))}), Error);

  // Valid single-segment examples.
  CHECK(param(1, 1, {seg(1, "triv", 1, Rational(0))}).n() == 1);
  // Dimension counts the Galois factor: (2, eta2(2), 0) has dimension 4.
  CHECK(param(4, 1, {seg(2, "eta2", 2, Rational(0))}).segments()[0].rho.dim == 2);
}

TEST_CASE("canonical order ignores input order") {
  std::vector<Segment> a{seg(1, "chi1", 1, Rational(0)),
                         seg(2, "triv", 1, Rational(1, 2)),
                         seg(1, "triv", 1, Rational(0))};
  std::vector<Segment> b{a[2], a[0], a[1]};
  CHECK(param(4, 1, a) == param(4, 1, b));
}

TEST_CASE("temperedness") {
  CHECK(is_tempered(param(3, 1, {seg(2, "triv", 1, Rational(0)),
                                 seg(1, "chi1", 1, Rational(0))})));
  CHECK(!is_tempered(param(3, 1, {seg(2, "triv", 1, Rational(1, 2)),
                                  seg(1, "chi1", 1, Rational(0))})));
  GLnLParameter t = param(2, 1, {seg(2, "triv", 1, Rational(0))});
  CHECK(is_tempered(t));
  CHECK(!is_tempered(twist(t, Rational(1, 3))));
}

TEST_CASE("central exponents z") {
  // Segments (1,triv,1),(2,triv,0): multiplicities 1 and 2.
  GLnLParameter p = param(3, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(2, "triv", 1, Rational(0))});
  CHECK(z_of(p).exponents == RatVec{Rational(1), Rational(0), Rational(0)});
  // Single segment (n, triv, beta): beta n times.
  GLnLParameter q = param(4, 1, {seg(4, "triv", 1, Rational(-1, 2))});
  CHECK(z_of(q).exponents == RatVec(4, Rational(-1, 2)));
  // Tempered: all zero.
  CHECK(z_of(param(2, 1, {seg(2, "triv", 1, Rational(0))})).exponents ==
        RatVec(2, Rational(0)));
  // The Galois dimension multiplies the count.
  GLnLParameter r = param(4, 1, {seg(2, "eta2", 2, Rational(1, 3))});
  CHECK(z_of(r).exponents == RatVec(4, Rational(1, 3)));
}

TEST_CASE("z star runs through the principal sl2 weights") {
  CHECK(z_star_of(param(2, 1, {seg(2, "triv", 1, Rational(0))})).exponents ==
        RatVec{Rational(1, 2), Rational(-1, 2)});
  CHECK(z_star_of(param(1, 1, {seg(1, "triv", 1, Rational(2, 3))})).exponents ==
        RatVec{Rational(2, 3)});
  CHECK(z_star_of(param(3, 1, {seg(3, "triv", 1, Rational(1))})).exponents ==
        RatVec{Rational(2), Rational(1), Rational(0)});
  // rho.dim repeats each weight.
  CHECK(z_star_of(param(4, 1, {seg(2, "eta2", 2, Rational(0))})).exponents ==
        RatVec{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)});
}

TEST_CASE("twist shifts exponents") {
  GLnLParameter p = param(2, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(1, "triv", 1, Rational(0))});
  GLnLParameter shifted = twist(p, Rational(1, 2));
  CHECK(z_of(shifted).exponents == RatVec{Rational(3, 2), Rational(1, 2)});
  CHECK(twist(p, Rational(0)) == p);
  CHECK(twist(twist(p, Rational(7, 3)), Rational(-7, 3)) == p);
}

TEST_CASE("relevance for inner forms") {
  GLnLParameter any = param(3, 1, {seg(1, "triv", 1, Rational(0)),
                                   seg(2, "triv", 1, Rational(0))});
  CHECK(is_relevant(any));  // d = 1 always
  GLnLParameter ones = param(4, 2, {seg(1, "triv", 1, Rational(0)),
                                    seg(1, "chi1", 1, Rational(0)),
                                    seg(1, "chi2", 1, Rational(0)),
                                    seg(1, "xi", 1, Rational(0))});
  CHECK(!is_relevant(ones));
  GLnLParameter twos = param(4, 2, {seg(2, "triv", 1, Rational(0)),
                                    seg(2, "triv", 1, Rational(1))});
  CHECK(is_relevant(twos));
  // Odd sl2 with even Galois dimension is still fine for d = 2.
  CHECK(is_relevant(param(6, 2, {seg(3, "eta2", 2, Rational(0))})));
}

TEST_CASE("classify: tempered parameters form a single zero block") {
  GLnLParameter t = param(3, 1, {seg(2, "triv", 1, Rational(0)),
                                 seg(1, "chi1", 1, Rational(0))});
  GLnStandardTriple tr = classify(t);
  REQUIRE(tr.blocks().size() == 1);
  CHECK(tr.blocks()[0].m == 3);
  CHECK(tr.blocks()[0].beta == Rational(0));
  CHECK(assemble(tr) == t);
  check_against_oracle(t, Mode::quotient);
  check_against_oracle(t, Mode::sub);
}

TEST_CASE("classify matches the exhaustive oracle") {
  // n=3 split example: segments (1,triv,1),(2,triv,0).
  GLnLParameter p = param(3, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(2, "triv", 1, Rational(0))});
  GLnStandardTriple t = classify(p);
  REQUIRE(t.blocks().size() == 2);
  CHECK(t.blocks()[0].m == 1);
  CHECK(t.blocks()[0].beta == Rational(1));
  CHECK(t.blocks()[0].tempered ==
        std::vector<Segment>{seg(1, "triv", 1, Rational(0))});
  CHECK(t.blocks()[1].m == 2);
  CHECK(t.blocks()[1].beta == Rational(0));
  CHECK(t.blocks()[1].tempered ==
        std::vector<Segment>{seg(2, "triv", 1, Rational(0))});
  check_against_oracle(p, Mode::quotient);

  // d=2 example: segments (2,triv,1/2),(2,triv,-1/2).
  GLnLParameter q = param(4, 2, {seg(2, "triv", 1, Rational(1, 2)),
                                 seg(2, "triv", 1, Rational(-1, 2))});
  GLnStandardTriple tq = classify(q);
  REQUIRE(tq.blocks().size() == 2);
  CHECK(tq.blocks()[0].m == 1);
  CHECK(tq.blocks()[0].beta == Rational(1, 2));
  CHECK(tq.blocks()[1].m == 1);
  CHECK(tq.blocks()[1].beta == Rational(-1, 2));
  check_against_oracle(q, Mode::quotient);
  check_against_oracle(q, Mode::sub);

  // Random small parameters, both modes.
  Fuzzer fz(2024);
  for (int trial = 0; trial < 40; ++trial) {
    GLnLParameter r = fz.parameter(6, 1);
    check_against_oracle(r, Mode::quotient);
    check_against_oracle(r, Mode::sub);
  }
}

TEST_CASE("classify in sub mode negates and reverses") {
  GLnLParameter p = param(3, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(2, "triv", 1, Rational(0))});
  GLnStandardTriple t = classify(p, Mode::sub);
  REQUIRE(t.blocks().size() == 2);
  // Betas must still descend strictly: 0 > -1.
  CHECK(t.blocks()[0].beta == Rational(0));
  CHECK(t.blocks()[0].m == 2);
  CHECK(t.blocks()[1].beta == Rational(-1));
  CHECK(t.blocks()[1].m == 1);
  CHECK(assemble(t, Mode::sub) == p);
  // Sub-assembling shifts by -beta.
  CHECK(!(assemble(t, Mode::quotient) == p));
}

TEST_CASE("classify rejects irrelevant parameters") {
  GLnLParameter ones = param(4, 2, {seg(1, "triv", 1, Rational(0)),
                                    seg(1, "chi1", 1, Rational(0)),
                                    seg(1, "chi2", 1, Rational(0)),
                                    seg(1, "xi", 1, Rational(0))});
  CHECK_THROWS_AS(classify(ones), Error);
  try {
    classify(ones);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_relevant);
  }
}

TEST_CASE("triple construction validates its invariants") {
  auto tb = [](int m, std::vector<Segment> segs, Rational beta) {
    return TripleBlock{m, std::move(segs), beta};
  };
  // Equal betas.
  CHECK_THROWS_AS(
      GLnStandardTriple::create(
          1, {tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(1)),
              tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(1))}),
      Error);
  try {
    GLnStandardTriple::create(
        1, {tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(1)),
            tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(1))});
  } catch (const Error& e) {
    CHECK(e.code() == errc::betas_not_descending);
  }
  // Ascending betas.
  CHECK_THROWS_AS(
      GLnStandardTriple::create(
          1, {tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(0)),
              tb(1, {seg(1, "triv", 1, Rational(0))}, Rational(1))}),
      Error);
  // Non-tempered block.
  CHECK_THROWS_AS(
      GLnStandardTriple::create(
          1, {tb(1, {seg(1, "triv", 1, Rational(1))}, Rational(0))}),
      Error);
  try {
    GLnStandardTriple::create(
        1, {tb(1, {seg(1, "triv", 1, Rational(1))}, Rational(0))});
  } catch (const Error& e) {
    CHECK(e.code() == errc::block_not_tempered);
  }
  // Dimension mismatch between m and the tempered part.
  CHECK_THROWS_AS(
      GLnStandardTriple::create(
          1, {tb(2, {seg(1, "triv", 1, Rational(0))}, Rational(0))}),
      Error);
  // Block with a segment not divisible by d.
  CHECK_THROWS_AS(
      GLnStandardTriple::create(
          2, {tb(1, {seg(1, "triv", 1, Rational(0)),
                     seg(1, "chi1", 1, Rational(0))},
                 Rational(0))}),
      Error);
  try {
    GLnStandardTriple::create(2, {tb(1,
                                     {seg(1, "triv", 1, Rational(0)),
                                      seg(1, "chi1", 1, Rational(0))},
                                     Rational(0))});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_relevant);
  }
  // Empty triple.
  CHECK_THROWS_AS(GLnStandardTriple::create(1, {}), Error);

  // A valid triple reports n = d * sum(m).
  GLnStandardTriple ok = GLnStandardTriple::create(
      2, {tb(1, {seg(2, "triv", 1, Rational(0))}, Rational(1, 2)),
          tb(1, {seg(2, "triv", 1, Rational(0))}, Rational(-1, 2))});
  CHECK(ok.n() == 4);
  CHECK(ok.d() == 2);
}

TEST_CASE("assemble: single zero block returns the tempered parameter") {
  std::vector<Segment> segs{seg(2, "triv", 1, Rational(0)),
                            seg(1, "chi1", 1, Rational(0))};
  GLnStandardTriple t =
      GLnStandardTriple::create(1, {TripleBlock{3, segs, Rational(0)}});
  GLnLParameter p = assemble(t);
  CHECK(p == param(3, 1, segs));
  CHECK(is_tempered(p));
}

TEST_CASE("round trips") {
  Fuzzer fz(77);
  for (int trial = 0; trial < 200; ++trial) {
    for (int d : {1, 2, 3}) {
      GLnLParameter p = fz.parameter(12, d);
      for (Mode mode : {Mode::quotient, Mode::sub}) {
        GLnStandardTriple t = classify(p, mode);
        CHECK(assemble(t, mode) == p);
      }
      GLnStandardTriple t = fz.triple(4, d);
      for (Mode mode : {Mode::quotient, Mode::sub})
        CHECK(classify(assemble(t, mode), mode) == t);
    }
  }
}

TEST_CASE("centralizer shapes") {
  CHECK(centralizer_shape(param(2, 1, {seg(1, "triv", 1, Rational(0)),
                                       seg(1, "triv", 1, Rational(0))}))
            .gl_factors == std::vector<int>{2});
  CHECK(centralizer_shape(param(2, 1, {seg(1, "triv", 1, Rational(1)),
                                       seg(1, "triv", 1, Rational(0))}))
            .gl_factors == std::vector<int>{1, 1});
  CHECK(centralizer_shape(param(2, 1, {seg(1, "triv", 1, Rational(0)),
                                       seg(1, "triv", 1, Rational(0))}))
            .component_group_order == 1);

  // Independent multiset-counting oracle on fuzzed parameters.
  Fuzzer fz(31);
  for (int trial = 0; trial < 300; ++trial) {
    GLnLParameter p = fz.parameter(10, 1);
    std::map<std::tuple<int, std::string, int, std::string>, int> counts;
    for (const Segment& s : p.segments())
      ++counts[{s.sl2_dim, s.rho.name, s.rho.dim, s.exponent.str()}];
    std::vector<int> expected;
    for (const auto& [k, v] : counts) expected.push_back(v);
    std::sort(expected.rbegin(), expected.rend());
    CentralizerShape shape = centralizer_shape(p);
    CHECK(shape.gl_factors == expected);
    CHECK(shape.component_group_order == 1);
  }
}

TEST_CASE("component group transfer across the classification") {
  GLnLParameter t = param(3, 1, {seg(2, "triv", 1, Rational(0)),
                                 seg(1, "chi1", 1, Rational(0))});
  CHECK(check_component_group_transfer(t));  // tempered: same object
  GLnLParameter p = param(3, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(2, "triv", 1, Rational(0))});
  CHECK(check_component_group_transfer(p));
  GLnLParameter q = param(4, 2, {seg(2, "triv", 1, Rational(1, 2)),
                                 seg(2, "triv", 1, Rational(-1, 2))});
  CHECK(check_component_group_transfer(q));
}

TEST_CASE("equivalence") {
  GLnLParameter a = param(2, 1, {seg(1, "triv", 1, Rational(1)),
                                 seg(1, "triv", 1, Rational(0))});
  GLnLParameter b = param(2, 1, {seg(1, "triv", 1, Rational(0)),
                                 seg(1, "triv", 1, Rational(1))});
  CHECK(equivalent(a, b));  // multiset equality, input order irrelevant
  GLnLParameter c = param(2, 1, {seg(1, "chi1", 1, Rational(1)),
                                 seg(1, "triv", 1, Rational(0))});
  CHECK(!equivalent(a, c));
  GLnLParameter d3 = param(3, 1, {seg(1, "triv", 1, Rational(1)),
                                  seg(2, "triv", 1, Rational(0))});
  CHECK_THROWS_AS(equivalent(a, d3), Error);
  try {
    equivalent(a, d3);
  } catch (const Error& e) {
    CHECK(e.code() == errc::group_mismatch);
  }
  GLnLParameter a2 = param(2, 2, {seg(2, "triv", 1, Rational(0))});
  CHECK_THROWS_AS(equivalent(a2, a), Error);
}

TEST_CASE("twist covariance of the classification") {
  Fuzzer fz(55);
  for (int trial = 0; trial < 100; ++trial) {
    GLnLParameter p = fz.parameter(10, 1);
    Rational beta = fz.rational(5, 4);
    GLnStandardTriple t0 = classify(p);
    GLnStandardTriple t1 = classify(twist(p, beta));
    REQUIRE(t0.blocks().size() == t1.blocks().size());
    for (size_t i = 0; i < t0.blocks().size(); ++i) {
      CHECK(t1.blocks()[i].beta == t0.blocks()[i].beta + beta);
      CHECK(t1.blocks()[i].m == t0.blocks()[i].m);
      CHECK(t1.blocks()[i].tempered == t0.blocks()[i].tempered);
    }
    // Sub mode shifts the betas the other way.
    GLnStandardTriple s0 = classify(p, Mode::sub);
    GLnStandardTriple s1 = classify(twist(p, beta), Mode::sub);
    REQUIRE(s0.blocks().size() == s1.blocks().size());
    for (size_t i = 0; i < s0.blocks().size(); ++i)
      CHECK(s1.blocks()[i].beta == s0.blocks()[i].beta - beta);
  }
}

TEST_CASE("tempered if and only if z is trivial") {
  Fuzzer fz(13);
  for (int trial = 0; trial < 300; ++trial) {
    GLnLParameter p = fz.parameter(12, 1);
    bool z_trivial = true;
    for (const auto& e : z_of(p).exponents)
      if (!(e == Rational(0))) z_trivial = false;
    CHECK(is_tempered(p) == z_trivial);
    // For tempered parameters z* consists purely of the sl2 weights.
    if (is_tempered(p)) {
      RatVec expected;
      for (const Segment& s : p.segments())
        for (int j = 0; j < s.sl2_dim; ++j)
          for (int r = 0; r < s.rho.dim; ++r)
            expected.push_back(Rational(s.sl2_dim - 1 - 2 * j, 2));
      std::sort(expected.begin(), expected.end(),
                [](const Rational& a, const Rational& b) { return b < a; });
      CHECK(z_star_of(p).exponents == expected);
    }
  }
}
