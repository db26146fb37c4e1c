#ifndef RFORGE_ERROR_HPP
#define RFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rforge {

// Failure categories. The CLI maps these to exit codes: everything here is
// "bad input / resource limit" (exit 2) except internal_assertion, which
// indicates a broken invariant inside the library itself.
enum class errc {
  invalid_input,
  unsupported_field,
  wrong_residue,
  deletion_too_large,
  asymmetric_matrix,
  degenerate_input,
  budget_exceeded,
  format_error,
  internal_assertion,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::unsupported_field: return "unsupported-field";
    case errc::wrong_residue: return "wrong-residue";
    case errc::deletion_too_large: return "deletion-too-large";
    case errc::asymmetric_matrix: return "asymmetric-matrix";
    case errc::degenerate_input: return "degenerate-input";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::format_error: return "format-error";
    case errc::internal_assertion: return "internal-assertion-failure";
  }
  return "unknown";
}

}  // namespace rforge

#endif
