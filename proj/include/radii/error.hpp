#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radii {

enum class ErrorCode {
  near_zero_constant_term,
  tail_bound_unavailable,
  argument_out_of_range,
  unsupported_class,
  not_schwarz_bounded,
  degenerate_transform,
  zero_denominator,
  unknown_equation,
  param_out_of_range,
  no_bracket_found,
  no_closed_form,
  no_witness,
  not_certified_omega_a,
  parse_error,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error in a text specification, with the 0-based offset of the fault.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace radii
