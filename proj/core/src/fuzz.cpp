#include "lpc/fuzz.hpp"

#include <algorithm>
#include <array>

namespace lpc {

namespace {

const std::array<std::vector<const char*>, 4> kLabelPool = {{
    {"triv", "chi1", "chi2", "xi"},
    {"eta2", "pi2"},
    {"eta3"},
    {"eta4"},
}};

}  // namespace

Segment Fuzzer::segment_of_dim(int dim, const Rational& exponent) {
  // Factor dim = sl2 * rho_dim with rho_dim drawn from the label pool.
  std::vector<int> rho_dims;
  for (int r = 1; r <= 4; ++r)
    if (dim % r == 0) rho_dims.push_back(r);
  int r = rho_dims[below(rho_dims.size())];
  const auto& pool = kLabelPool[r - 1];
  Segment s;
  s.sl2_dim = dim / r;
  s.rho = GaloisTypeLabel{pool[below(pool.size())], r};
  s.exponent = exponent;
  return s;
}

std::vector<Segment> Fuzzer::tempered_segments(int m, int d) {
  std::vector<Segment> segs;
  int remaining = m;
  while (remaining > 0) {
    int part = range(1, remaining);
    segs.push_back(segment_of_dim(part * d, Rational(0)));
    remaining -= part;
  }
  return segs;
}

GLnLParameter Fuzzer::parameter(int nmax, int d) {
  int m_total = range(1, std::max(1, nmax / d));
  std::vector<Segment> segs;
  int remaining = m_total;
  while (remaining > 0) {
    int part = range(1, remaining);
    segs.push_back(segment_of_dim(part * d, rational(8, 6)));
    remaining -= part;
  }
  return GLnLParameter::create(m_total * d, d, std::move(segs));
}

GLnStandardTriple Fuzzer::triple(int mmax, int d, int max_blocks) {
  int nblocks = range(1, std::min(max_blocks, mmax));
  std::vector<Rational> betas;
  while (static_cast<int>(betas.size()) < nblocks) {
    Rational b = rational(8, 6);
    bool dup = false;
    for (const Rational& x : betas) dup = dup || x == b;
    if (!dup) betas.push_back(b);
  }
  std::sort(betas.begin(), betas.end(), std::greater<Rational>());
  std::vector<TripleBlock> blocks;
  int budget = mmax - nblocks;  // every block needs m >= 1
  for (int k = 0; k < nblocks; ++k) {
    int extra = budget > 0 ? range(0, budget) : 0;
    budget -= extra;
    int m = 1 + extra;
    blocks.push_back(TripleBlock{m, tempered_segments(m, d), betas[k]});
  }
  return GLnStandardTriple::create(d, std::move(blocks));
}

}  // namespace lpc
