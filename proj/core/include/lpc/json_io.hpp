#pragma once

#include <nlohmann/json.hpp>

#include "lpc/lparam.hpp"
#include "lpc/parse.hpp"

namespace lpc {

// JSON conventions used across the CLI and the test fixtures: rationals are
// strings "p" or "p/q", matrices are arrays of row arrays, words are arrays
// of 1-based generator indices, segments are flat arrays
// [sl2_dim, rho_name, rho_dim, exponent].  Objects serialize with sorted
// keys (the nlohmann default), so byte-identical output for identical data.

struct DatumBundle {
  BasedRootDatum datum;
  GaloisAction action;
};

// Accepts exactly {rank, simple_roots, simple_coroots} plus the optional
// galois_generators (0-based permutations) and galois_lattice_matrices;
// any unknown key is rejected.
DatumBundle datum_from_json(const nlohmann::json& j);
nlohmann::json datum_to_json(const BasedRootDatum& d);

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);

RatVec ratvec_from_json(const nlohmann::json& j);
nlohmann::json ratvec_to_json(const RatVec& v);

Segment segment_from_json(const nlohmann::json& j);
nlohmann::json segment_to_json(const Segment& s);

GLnLParameter lparam_from_json(const nlohmann::json& j);
nlohmann::json lparam_to_json(const GLnLParameter& p);

GLnStandardTriple triple_from_json(const nlohmann::json& j);
nlohmann::json triple_to_json(const GLnStandardTriple& t, int n);

nlohmann::json intmat_to_json(const IntMat& m);
nlohmann::json word_to_json(const std::vector<int>& word);  // 0-based in, 1-based out
nlohmann::json subset_to_json(const ParabolicSubset& I);    // 1-based out

}  // namespace lpc
