#pragma once

#include <stdexcept>
#include <string>

namespace polygauss {

// Error kinds surfaced by the library. The CLI maps every one of these to
// exit code 2 (usage / precondition error).
enum class errc {
    not_prime,
    bad_modulus,
    too_large,
    ctx_mismatch,
    zero_inverse,
    division_by_zero,
    both_zero,
    bad_modulus_poly,
    parse_error,
    coefficient_out_of_range,
    constant_input,
    even_characteristic,
    odd_characteristic,
    not_prime_poly,
    not_coprime,
    not_monic,
    even_degree,
    bad_range,
    bad_half_system,
    precondition_square_not_one,
    internal_non_unit,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "not_prime";
        case errc::bad_modulus: return "bad_modulus";
        case errc::too_large: return "too_large";
        case errc::ctx_mismatch: return "ctx_mismatch";
        case errc::zero_inverse: return "zero_inverse";
        case errc::division_by_zero: return "division_by_zero";
        case errc::both_zero: return "both_zero";
        case errc::bad_modulus_poly: return "bad_modulus_poly";
        case errc::parse_error: return "parse_error";
        case errc::coefficient_out_of_range: return "coefficient_out_of_range";
        case errc::constant_input: return "constant_input";
        case errc::even_characteristic: return "even_characteristic";
        case errc::odd_characteristic: return "odd_characteristic";
        case errc::not_prime_poly: return "not_prime_poly";
        case errc::not_coprime: return "not_coprime";
        case errc::not_monic: return "not_monic";
        case errc::even_degree: return "even_degree";
        case errc::bad_range: return "bad_range";
        case errc::bad_half_system: return "bad_half_system";
        case errc::precondition_square_not_one: return "precondition_square_not_one";
        case errc::internal_non_unit: return "internal_non_unit";
        case errc::internal_error: return "internal_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

}  // namespace polygauss
