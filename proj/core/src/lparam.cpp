#include "lpc/lparam.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lpc {

bool segment_canon_less(const Segment& a, const Segment& b) {
  if (!(a.exponent == b.exponent)) return a.exponent > b.exponent;
  if (a.rho.name != b.rho.name) return a.rho.name < b.rho.name;
  if (a.rho.dim != b.rho.dim) return a.rho.dim < b.rho.dim;
  return a.sl2_dim < b.sl2_dim;
}

int segment_dim(const Segment& s) { return s.sl2_dim * s.rho.dim; }

namespace {

void validate_segment(const Segment& s) {
  if (s.sl2_dim < 1)
    fail(errc::dimension_mismatch, "segment sl2 dimension must be >= 1");
  if (s.rho.dim < 1)
    fail(errc::dimension_mismatch, "rho dimension must be >= 1");
  if (s.rho.name.empty())
    fail(errc::dimension_mismatch, "rho label must be nonempty");
}

}  // namespace

GLnLParameter GLnLParameter::create(int n, int d, std::vector<Segment> segments) {
  if (d < 1) fail(errc::dimension_mismatch, "d must be >= 1");
  if (segments.empty()) fail(errc::empty_parameter, "parameter has no segments");
  long long total = 0;
  for (const Segment& s : segments) {
    validate_segment(s);
    total += segment_dim(s);
  }
  if (total != n)
    fail(errc::dimension_mismatch,
         "segment dimensions sum to " + std::to_string(total) + ", expected n = " +
             std::to_string(n));
  std::sort(segments.begin(), segments.end(), segment_canon_less);
  GLnLParameter p;
  p.n_ = n;
  p.d_ = d;
  p.segments_ = std::move(segments);
  return p;
}

GLnStandardTriple GLnStandardTriple::create(int d, std::vector<TripleBlock> blocks) {
  if (d < 1) fail(errc::dimension_mismatch, "d must be >= 1");
  if (blocks.empty()) fail(errc::empty_parameter, "triple has no blocks");
  for (size_t k = 0; k + 1 < blocks.size(); ++k)
    if (!(blocks[k].beta > blocks[k + 1].beta))
      fail(errc::betas_not_descending,
           "betas " + blocks[k].beta.str() + " and " + blocks[k + 1].beta.str() +
               " are not strictly descending");
  for (auto& b : blocks) {
    if (b.m < 1) fail(errc::dimension_mismatch, "block size m must be >= 1");
    if (b.tempered.empty())
      fail(errc::empty_parameter, "block has no tempered segments");
    long long total = 0;
    for (const Segment& s : b.tempered) {
      validate_segment(s);
      if (!s.exponent.is_zero())
        fail(errc::block_not_tempered,
             "block segment has nonzero exponent " + s.exponent.str());
      if (segment_dim(s) % d != 0)
        fail(errc::not_relevant,
             "block segment dimension " + std::to_string(segment_dim(s)) +
                 " is not a multiple of d = " + std::to_string(d));
      total += segment_dim(s);
    }
    if (total != static_cast<long long>(b.m) * d)
      fail(errc::dimension_mismatch,
           "block dimensions sum to " + std::to_string(total) + ", expected m*d = " +
               std::to_string(static_cast<long long>(b.m) * d));
    std::sort(b.tempered.begin(), b.tempered.end(), segment_canon_less);
  }
  GLnStandardTriple t;
  t.d_ = d;
  t.blocks_ = std::move(blocks);
  return t;
}

int GLnStandardTriple::n() const {
  int total = 0;
  for (const auto& b : blocks_) total += b.m * d_;
  return total;
}

bool is_tempered(const GLnLParameter& phi) {
  for (const Segment& s : phi.segments())
    if (!s.exponent.is_zero()) return false;
  return true;
}

HyperbolicElement z_of(const GLnLParameter& phi) {
  RatVec exps;
  for (const Segment& s : phi.segments())
    for (int t = 0; t < segment_dim(s); ++t) exps.push_back(s.exponent);
  std::sort(exps.begin(), exps.end(), std::greater<Rational>());
  return HyperbolicElement{std::move(exps)};
}

HyperbolicElement z_star_of(const GLnLParameter& phi) {
  RatVec exps;
  for (const Segment& s : phi.segments()) {
    Rational top = s.exponent + Rational(s.sl2_dim - 1, 2);
    for (int j = 0; j < s.sl2_dim; ++j) {
      Rational e = top - Rational(j);
      for (int t = 0; t < s.rho.dim; ++t) exps.push_back(e);
    }
  }
  std::sort(exps.begin(), exps.end(), std::greater<Rational>());
  return HyperbolicElement{std::move(exps)};
}

GLnLParameter twist(const GLnLParameter& phi, const Rational& beta) {
  std::vector<Segment> segs = phi.segments();
  for (Segment& s : segs) s.exponent += beta;
  return GLnLParameter::create(phi.n(), phi.d(), std::move(segs));
}

bool is_relevant(const GLnLParameter& phi) {
  for (const Segment& s : phi.segments())
    if (segment_dim(s) % phi.d() != 0) return false;
  return true;
}

GLnStandardTriple classify(const GLnLParameter& phi, Mode mode) {
  if (!is_relevant(phi))
    fail(errc::not_relevant,
         "parameter has a segment whose dimension is not a multiple of d = " +
             std::to_string(phi.d()));
  // Exponent classes, descending: these are the blocks.
  std::map<Rational, std::vector<Segment>, std::greater<Rational>> classes;
  for (const Segment& s : phi.segments()) classes[s.exponent].push_back(s);
  std::vector<TripleBlock> blocks;
  for (auto& [exp, segs] : classes) {
    TripleBlock b;
    b.beta = mode == Mode::quotient ? exp : -exp;
    long long total = 0;
    for (Segment s : segs) {
      total += segment_dim(s);
      s.exponent = Rational(0);
      b.tempered.push_back(std::move(s));
    }
    b.m = static_cast<int>(total / phi.d());
    blocks.push_back(std::move(b));
  }
  if (mode == Mode::sub) std::reverse(blocks.begin(), blocks.end());
  return GLnStandardTriple::create(phi.d(), std::move(blocks));
}

GLnLParameter assemble(const GLnStandardTriple& triple, Mode mode) {
  std::vector<Segment> segs;
  for (const TripleBlock& b : triple.blocks()) {
    Rational shift = mode == Mode::quotient ? b.beta : -b.beta;
    for (Segment s : b.tempered) {
      s.exponent = shift;
      segs.push_back(std::move(s));
    }
  }
  return GLnLParameter::create(triple.n(), triple.d(), std::move(segs));
}

namespace {

std::vector<int> multiplicities(const std::vector<Segment>& segments) {
  std::vector<int> counts;
  size_t i = 0;
  while (i < segments.size()) {
    size_t j = i;
    while (j < segments.size() && segments[j] == segments[i]) ++j;
    counts.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(counts.begin(), counts.end(), std::greater<int>());
  return counts;
}

}  // namespace

CentralizerShape centralizer_shape(const GLnLParameter& phi) {
  return CentralizerShape{multiplicities(phi.segments()), 1};
}

bool check_component_group_transfer(const GLnLParameter& phi) {
  CentralizerShape whole = centralizer_shape(phi);
  GLnStandardTriple triple = classify(phi, Mode::quotient);
  std::vector<int> blockwise;
  std::int64_t order = 1;
  for (const TripleBlock& b : triple.blocks()) {
    GLnLParameter part =
        GLnLParameter::create(b.m * triple.d(), triple.d(), b.tempered);
    CentralizerShape s = centralizer_shape(part);
    order *= s.component_group_order;
    blockwise.insert(blockwise.end(), s.gl_factors.begin(), s.gl_factors.end());
  }
  std::sort(blockwise.begin(), blockwise.end(), std::greater<int>());
  return order == whole.component_group_order && blockwise == whole.gl_factors;
}

bool equivalent(const GLnLParameter& a, const GLnLParameter& b) {
  if (a.n() != b.n() || a.d() != b.d())
    fail(errc::group_mismatch,
         "parameters belong to different groups: (n=" + std::to_string(a.n()) +
             ",d=" + std::to_string(a.d()) + ") vs (n=" + std::to_string(b.n()) +
             ",d=" + std::to_string(b.d()) + ")");
  return a.segments() == b.segments();
}

}  // namespace lpc
