#pragma once

#include <stdexcept>
#include <string>

namespace kf {

// Stable error classes. The C API maps these onto kf_status codes and the
// CLI onto process exit codes, so additions go at the end.
enum class errc {
  bad_input = 1,
  rank_deficient,
  rank_config,
  not_primitive,
  cone_not_pointed,
  budget_exceeded,
  unsupported_dimension,
  unsupported_rank,
  not_in_cone,
  not_interior,
  inexact,
  precondition_violated,
  interval_too_wide,
  insufficient_data,
  too_large,
  construction_failed,
  bad_direction,
  bad_parameter,
  parse_error,
  internal,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace kf
