#include "sbrep/errors.hpp"

namespace sbrep {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::non_unit_laurent_divisor: return "NonUnitLaurentDivisor";
        case Errc::eval_at_zero: return "EvalAtZero";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::ring_mismatch: return "RingMismatch";
        case Errc::singular_matrix: return "SingularMatrix";
        case Errc::non_unit_determinant: return "NonUnitDeterminant";
        case Errc::ring_not_field: return "RingNotField";
        case Errc::position_out_of_range: return "PositionOutOfRange";
        case Errc::bad_strand_count: return "BadStrandCount";
        case Errc::zero_exponent: return "ZeroExponent";
        case Errc::singular_tau: return "SingularTau";
        case Errc::constraint_violation: return "ConstraintViolation";
        case Errc::zero_eigenvalue: return "ZeroEigenvalue";
        case Errc::formula_inconsistent: return "FormulaInconsistent";
        case Errc::missing_generator: return "MissingGenerator";
        case Errc::singular_generator_image: return "SingularGeneratorImage";
        case Errc::not_commuting: return "NotCommuting";
        case Errc::not_invertible: return "NotInvertible";
        case Errc::zero_c: return "ZeroC";
        case Errc::unknown_family: return "UnknownFamily";
        case Errc::parse_error: return "ParseError";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace sbrep
