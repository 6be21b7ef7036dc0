#pragma once

#include <stdexcept>
#include <string>

namespace crcforge {

enum class Errc {
    invalid_dimensions,
    vertex_out_of_space,
    invalid_clique,
    invalid_hyperface,
    empty_code,
    full_code,
    no_essential_positions,
    invalid_position,
    space_mismatch,
    divisibility_violated,
    degree_out_of_range,
    invalid_parameters,
    condition_one_violated,
    unnormalized_gamma,
    precondition_violated,
    space_too_large,
    format_error,
};

const char * to_string(Errc code) noexcept;

/// Exception carrying one of the error kinds above; every public operation
/// reports contract violations through it.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & message) :
        std::runtime_error(message),
        _code(code)
    {
    }

    auto code() const noexcept -> Errc { return _code; }

private:
    Errc _code;
};

}
