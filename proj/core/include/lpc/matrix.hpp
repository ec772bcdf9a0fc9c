#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpc/rational.hpp"

namespace lpc {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

std::int64_t chk_add(std::int64_t a, std::int64_t b);
std::int64_t chk_mul(std::int64_t a, std::int64_t b);

// Dense row-major integer matrix.  Small throughout (rank <= a dozen); all
// products run through 128-bit accumulators and raise OverflowError rather
// than wrapping.
struct IntMat {
  int rows = 0;
  int cols = 0;
  IntVec a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  IntMat(int r, int c, IntVec data) : rows(r), cols(c), a(std::move(data)) {
    a.resize(static_cast<size_t>(r) * c, 0);
  }

  static IntMat identity(int n);

  std::int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transpose() const;
  std::string key() const;  // byte key for hashing
};

IntMat imat_mul(const IntMat& x, const IntMat& y);
IntVec imat_apply(const IntMat& m, const IntVec& v);
RatVec imat_apply(const IntMat& m, const RatVec& v);
std::int64_t ivec_dot(const IntVec& x, const IntVec& y);
Rational rvec_dot(const RatVec& x, const RatVec& y);

struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static RatMat identity(int n);
  static RatMat from_int(const IntMat& m);

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const RatMat& o) const = default;

  RatMat transpose() const;
};

RatMat rmat_mul(const RatMat& x, const RatMat& y);
RatVec rmat_apply(const RatMat& m, const RatVec& v);

// <x, G y> for a symmetric rational form G.
Rational pair_with_gram(const RatVec& x, const RatMat& gram, const RatVec& y);

// Rank of the row span over Q.
int int_rows_rank(const std::vector<IntVec>& rows, int n);

// Solves A x = b over Q.  Returns a solution (free coordinates set to zero)
// or nullopt when the system is inconsistent.
std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b);

// Inverse of a unimodular integer matrix; nullopt when the inverse is not
// integral or the matrix is singular.
std::optional<IntMat> int_inverse(const IntMat& m);

// Z-basis of {x in Z^n : c . x = 0 for every constraint row c}.  The result
// is saturated (it is the intersection of a Q-subspace with Z^n) and already
// in canonical Hermite-reduced form.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& constraints, int n);

// Canonical Hermite-reduced basis of the row lattice: row echelon with
// positive pivots, entries above each pivot reduced into [0, pivot), zero
// rows dropped.
std::vector<IntVec> hermite_rows(std::vector<IntVec> rows, int n);

}  // namespace lpc
