#pragma once

#include <cstdint>
#include <random>

#include "lpc/lparam.hpp"

namespace lpc {

// Deterministic generator of random parameters and triples for the
// round-trip and invariant suites.  Same seed, same platform-independent
// sequence (mt19937_64 with plain modular draws).
class Fuzzer {
 public:
  explicit Fuzzer(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t k) { return k ? rng_() % k : 0; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational rational(int max_num, int max_den) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

  // A relevant parameter: total dimension a multiple of d at most nmax,
  // every segment dimension a multiple of d, exponent denominators <= 6.
  GLnLParameter parameter(int nmax, int d);

  // A valid triple with at most max_blocks blocks and total m at most
  // mmax; every block is a relevant tempered parameter of GL_{m d}.
  GLnStandardTriple triple(int mmax, int d, int max_blocks = 3);

 private:
  // Tempered relevant segments of total dimension m*d.
  std::vector<Segment> tempered_segments(int m, int d);
  Segment segment_of_dim(int dim, const Rational& exponent);

  std::mt19937_64 rng_;
};

}  // namespace lpc
