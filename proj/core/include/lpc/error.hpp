#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpc {

// Every rejection the library can produce.  Codes are stable identifiers:
// they cross the CLI boundary verbatim as the "code" field of error JSON.
enum class errc {
  pairing_violation,
  cartan_sign_violation,
  dimension_mismatch,
  dependent_roots,
  index_out_of_range,
  group_too_large,
  action_basis_undefined,
  i0_not_stable,
  nu_outside_space,
  not_dominant,
  no_dominant_point,
  partial_galois_orbit,
  relative_weyl_mismatch,
  gram_not_invariant,
  empty_parameter,
  not_relevant,
  betas_not_descending,
  block_not_tempered,
  group_mismatch,
  syntax_error,
  overflow_error,
  json_schema_error,
  internal_error,
};

const char* errc_name(errc c);

struct SourcePos {
  int line = 1;
  int column = 1;
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Error(errc code, std::string message, SourcePos pos,
        std::vector<std::string> expected = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        pos_(pos),
        expected_(std::move(expected)) {}

  errc code() const { return code_; }
  const std::optional<SourcePos>& pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  errc code_;
  std::optional<SourcePos> pos_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace lpc
