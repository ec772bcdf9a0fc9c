#include "lpc/error.hpp"

namespace lpc {

const char* errc_name(errc c) {
  switch (c) {
    case errc::pairing_violation: return "PairingViolation";
    case errc::cartan_sign_violation: return "CartanSignViolation";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::dependent_roots: return "DependentRoots";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::action_basis_undefined: return "ActionBasisUndefined";
    case errc::i0_not_stable: return "I0NotStable";
    case errc::nu_outside_space: return "NuOutsideSpace";
    case errc::not_dominant: return "NotDominant";
    case errc::no_dominant_point: return "NoDominantPoint";
    case errc::partial_galois_orbit: return "PartialGaloisOrbit";
    case errc::relative_weyl_mismatch: return "RelativeWeylMismatch";
    case errc::gram_not_invariant: return "GramNotInvariant";
    case errc::empty_parameter: return "EmptyParameter";
    case errc::not_relevant: return "NotRelevant";
    case errc::betas_not_descending: return "BetasNotDescending";
    case errc::block_not_tempered: return "BlockNotTempered";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::overflow_error: return "OverflowError";
    case errc::json_schema_error: return "JsonSchemaError";
    case errc::internal_error: return "InternalError";
  }
  return "InternalError";
}

}  // namespace lpc
