#include "radii/error.hpp"

namespace radii {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::near_zero_constant_term: return "NearZeroConstantTerm";
    case ErrorCode::tail_bound_unavailable: return "TailBoundUnavailable";
    case ErrorCode::argument_out_of_range: return "ArgumentOutOfRange";
    case ErrorCode::unsupported_class: return "UnsupportedClass";
    case ErrorCode::not_schwarz_bounded: return "NotSchwarzBounded";
    case ErrorCode::degenerate_transform: return "DegenerateTransform";
    case ErrorCode::zero_denominator: return "ZeroDenominator";
    case ErrorCode::unknown_equation: return "UnknownEquation";
    case ErrorCode::param_out_of_range: return "ParamOutOfRange";
    case ErrorCode::no_bracket_found: return "NoBracketFound";
    case ErrorCode::no_closed_form: return "NoClosedForm";
    case ErrorCode::no_witness: return "NoWitness";
    case ErrorCode::not_certified_omega_a: return "NotCertifiedOmegaA";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace radii
