#pragma once

#include <stdexcept>
#include <string>

namespace mbk {

// Library-wide error taxonomy. Codes are stable and mirrored one-to-one in
// the public C header (mbk.h); keep the two lists in sync.
enum class Errc {
  ok = 0,
  invalid_argument,
  parse_error,
  non_positive_parameter,
  determinant_not_positive,
  gcd_not_one,
  gamma_below_one,
  dimension_mismatch,
  algebra_node_not_supported,
  boundary_undecidable,
  empty_region_suspected,
  union_overlap_not_found,
  sampling_only_conditions,
  tolerance_not_reached,
  not_converged,
  sequence_not_increasing,
  envelope_violated,
  oracle_inconclusive,
  numeric_overflow,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ok: return "Ok";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::non_positive_parameter: return "NonPositiveParameter";
    case Errc::determinant_not_positive: return "DeterminantNotPositive";
    case Errc::gcd_not_one: return "GcdNotOne";
    case Errc::gamma_below_one: return "GammaBelowOne";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::algebra_node_not_supported: return "AlgebraNodeNotSupported";
    case Errc::boundary_undecidable: return "BoundaryUndecidable";
    case Errc::empty_region_suspected: return "EmptyRegionSuspected";
    case Errc::union_overlap_not_found: return "UnionOverlapNotFound";
    case Errc::sampling_only_conditions: return "SamplingOnlyConditions";
    case Errc::tolerance_not_reached: return "ToleranceNotReached";
    case Errc::not_converged: return "NotConverged";
    case Errc::sequence_not_increasing: return "SequenceNotIncreasing";
    case Errc::envelope_violated: return "EnvelopeViolated";
    case Errc::oracle_inconclusive: return "OracleInconclusive";
    case Errc::numeric_overflow: return "NumericOverflow";
  }
  return "Unknown";
}

}  // namespace mbk
