#pragma once

#include <stdexcept>
#include <string>

namespace sbrep {

enum class Errc {
    division_by_zero,
    non_unit_laurent_divisor,
    eval_at_zero,
    size_mismatch,
    ring_mismatch,
    singular_matrix,
    non_unit_determinant,
    ring_not_field,
    position_out_of_range,
    bad_strand_count,
    zero_exponent,
    singular_tau,
    constraint_violation,
    zero_eigenvalue,
    formula_inconsistent,
    missing_generator,
    singular_generator_image,
    not_commuting,
    not_invertible,
    zero_c,
    unknown_family,
    parse_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sbrep
