#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

// Mirrors the qfc_status codes of the C API (offset by QFC_OK).
enum class errc {
  io,
  parse,
  arity_mismatch,
  invalid_interval,
  out_of_validity,
  domain,
  no_qpm,
  no_sign_change,
  multiple_roots,
  saturation,
  nonphysical,
  unfittable,
  no_crossover,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qfc
