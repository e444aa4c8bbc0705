#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullkit {

enum class errc {
    not_prime,
    cap_exceeded,
    bad_field,
    spec_mismatch,
    division_by_zero,
    odd_extension,
    no_such_element,
    zero_input,
    shape_mismatch,
    rank_deficient,
    bad_galois_index,
    bad_permutation,
    bad_index,
    too_large_to_enumerate,
    empty_code,
    not_self_orthogonal,
    dimension_too_large,
    length_too_short,
    bad_target,
    small_field,
    verification_failed,
    duplicate_eval_points,
    zero_multiplier,
    bad_dimension,
    not_a_divisor,
    bad_family_params,
    hull_mismatch,
    parse_error,
};

inline std::string_view errc_name(errc code) {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::bad_field: return "BadField";
        case errc::spec_mismatch: return "SpecMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::odd_extension: return "OddExtension";
        case errc::no_such_element: return "NoSuchElement";
        case errc::zero_input: return "ZeroInput";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::rank_deficient: return "RankDeficient";
        case errc::bad_galois_index: return "BadGaloisIndex";
        case errc::bad_permutation: return "BadPermutation";
        case errc::bad_index: return "BadIndex";
        case errc::too_large_to_enumerate: return "TooLargeToEnumerate";
        case errc::empty_code: return "EmptyCode";
        case errc::not_self_orthogonal: return "NotSelfOrthogonal";
        case errc::dimension_too_large: return "DimensionTooLarge";
        case errc::length_too_short: return "LengthTooShort";
        case errc::bad_target: return "BadTarget";
        case errc::small_field: return "SmallField";
        case errc::verification_failed: return "VerificationFailed";
        case errc::duplicate_eval_points: return "DuplicateEvalPoints";
        case errc::zero_multiplier: return "ZeroMultiplier";
        case errc::bad_dimension: return "BadDimension";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::bad_family_params: return "BadFamilyParams";
        case errc::hull_mismatch: return "HullMismatch";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class hullkit_error : public std::runtime_error {
   public:
    hullkit_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

namespace detail {
[[noreturn]] inline void fail(errc code, const std::string& what) { throw hullkit_error(code, what); }
}  // namespace detail

}  // namespace hullkit
