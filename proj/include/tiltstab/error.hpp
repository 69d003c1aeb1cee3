#pragma once

#include <stdexcept>
#include <string>

namespace tiltstab {

// Contract-violation codes. Every throwing entry point documents which of
// these it can raise; tests match on the code, not the message text.
enum class Errc {
  invalid_geometry,
  hodge_index_violation,
  missing_ch3,
  geometry_mismatch,
  unknown_c1_square,
  nonpositive_t,
  infinite_slope,
  zero_rank,
  nonpositive_kappa,
  nonpositive_degree,
  negative_t_square,
  non_proportional_c1,
  not_found,
  schema_error,
  empty_grid,
  unsupported_format,
  invalid_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tiltstab
