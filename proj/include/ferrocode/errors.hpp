// Error codes and the library exception type.

#ifndef FERROCODE_ERRORS_HPP
#define FERROCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ferrocode {

enum class errc {
    not_prime,
    reducible_modulus,
    unsupported_size,
    spec_mismatch,
    division_by_zero,
    shape_mismatch,
    out_of_range,
    bad_index,
    dependent_basis,
    dependent_points,
    pinned_mismatch,
    incomplete_fill,
    extra_cell,
    too_few_codewords,
    bad_params,
    support_violation,
    consistency_violation,
    premature_call,
    too_large,
    parse_error
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::unsupported_size: return "UnsupportedSize";
        case errc::spec_mismatch: return "SpecMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::out_of_range: return "OutOfRange";
        case errc::bad_index: return "BadIndex";
        case errc::dependent_basis: return "DependentBasis";
        case errc::dependent_points: return "DependentPoints";
        case errc::pinned_mismatch: return "PinnedMismatch";
        case errc::incomplete_fill: return "IncompleteFill";
        case errc::extra_cell: return "ExtraCell";
        case errc::too_few_codewords: return "TooFewCodewords";
        case errc::bad_params: return "BadParams";
        case errc::support_violation: return "SupportViolation";
        case errc::consistency_violation: return "ConsistencyViolation";
        case errc::premature_call: return "PrematureCall";
        case errc::too_large: return "TooLarge";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

}  // namespace ferrocode

#endif
