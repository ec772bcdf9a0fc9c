#pragma once

#include <string>
#include <vector>

#include "lpc/chamber.hpp"

namespace lpc {

// Opaque label for an irreducible Galois-type factor: a name plus its
// dimension.  Two labels denote the same factor exactly when both fields
// agree.
struct GaloisTypeLabel {
  std::string name;
  int dim = 1;
  bool operator==(const GaloisTypeLabel& o) const = default;
};

// One multisegment entry: an sl2 factor of dimension sl2_dim tensored with
// a Galois-type factor, drawn through an unramified twist of rational
// exponent.
struct Segment {
  int sl2_dim = 1;
  GaloisTypeLabel rho;
  Rational exponent;
  bool operator==(const Segment& o) const = default;
};

// Canonical segment order: exponent descending, then rho name, rho dim,
// sl2 dim ascending.
bool segment_canon_less(const Segment& a, const Segment& b);

int segment_dim(const Segment& s);

// An L-parameter of an inner form of GL_n, as a multiset of segments with
// total dimension n.  d is the index of the underlying division algebra
// (d = 1 is the split case).  Segments are kept in canonical order.
class GLnLParameter {
 public:
  static GLnLParameter create(int n, int d, std::vector<Segment> segments);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool operator==(const GLnLParameter& o) const = default;

 private:
  GLnLParameter() = default;
  int n_ = 0;
  int d_ = 1;
  std::vector<Segment> segments_;
};

// One block of a standard triple: a tempered parameter of GL_{m d} shifted
// by the exponent beta.
struct TripleBlock {
  int m = 1;
  std::vector<Segment> tempered;  // canonical order, all exponents zero
  Rational beta;
  bool operator==(const TripleBlock& o) const = default;
};

// A standard triple: blocks with strictly descending betas.  Assembling
// shifts each block by +beta (quotient realization) or -beta (sub
// realization) and joins the segments.
class GLnStandardTriple {
 public:
  static GLnStandardTriple create(int d, std::vector<TripleBlock> blocks);

  int d() const { return d_; }
  int n() const;
  const std::vector<TripleBlock>& blocks() const { return blocks_; }

  bool operator==(const GLnStandardTriple& o) const = default;

 private:
  GLnStandardTriple() = default;
  int d_ = 1;
  std::vector<TripleBlock> blocks_;
};

enum class Mode { quotient, sub };

bool is_tempered(const GLnLParameter& phi);

// Exponent multiset of the central hyperbolic datum: each segment
// contributes its exponent with multiplicity sl2_dim * rho.dim.  Sorted
// descending.
HyperbolicElement z_of(const GLnLParameter& phi);

// Exponent multiset after twisting through the principal sl2 weights: each
// segment contributes exponent + (sl2_dim-1)/2 - j for j = 0..sl2_dim-1,
// with multiplicity rho.dim.  Sorted descending.
HyperbolicElement z_star_of(const GLnLParameter& phi);

// Shift every exponent by beta (an unramified central twist).
GLnLParameter twist(const GLnLParameter& phi, const Rational& beta);

// Whether the parameter factors through the inner form: d divides every
// segment dimension.
bool is_relevant(const GLnLParameter& phi);

// The unique standard triple realizing phi in the given mode.  Blocks are
// the exponent classes; betas are the exponents (quotient) or their
// negatives (sub), strictly descending either way.
GLnStandardTriple classify(const GLnLParameter& phi, Mode mode = Mode::quotient);

// Inverse of classify: shift each block by +-beta and join.
GLnLParameter assemble(const GLnStandardTriple& triple, Mode mode = Mode::quotient);

// Centralizer shape: one GL factor per distinct segment, of size its
// multiplicity; the component group is trivial.
struct CentralizerShape {
  std::vector<int> gl_factors;  // multiplicities, descending
  std::int64_t component_group_order = 1;
  bool operator==(const CentralizerShape& o) const = default;
};

CentralizerShape centralizer_shape(const GLnLParameter& phi);

// Checks that the centralizer shape of phi matches the union of the
// blockwise shapes of its tempered parts (component group orders and GL
// factor multisets both agree).
bool check_component_group_transfer(const GLnLParameter& phi);

// Equality as parameters of the same group; differing (n, d) raises
// GroupMismatch.
bool equivalent(const GLnLParameter& a, const GLnLParameter& b);

}  // namespace lpc
