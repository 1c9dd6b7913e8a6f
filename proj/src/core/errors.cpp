#include "errors.hpp"

namespace rtri {

const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::not_prime: return "NotPrime";
        case Status::char_too_small: return "CharacteristicTooSmall";
        case Status::reducible_modulus: return "ReducibleModulus";
        case Status::division_by_zero: return "DivisionByZero";
        case Status::mixed_fields: return "MixedFields";
        case Status::bad_argument: return "BadArgument";
        case Status::parse_error: return "ParseError";
        case Status::coverage_error: return "CoverageError";
        case Status::field_mismatch: return "FieldMismatch";
        case Status::ground_set_mismatch: return "GroundSetMismatch";
        case Status::empty_coloring: return "EmptyColoring";
        case Status::nonpositive_u: return "NonpositiveU";
        case Status::incomplete_coloring: return "IncompleteColoring";
        case Status::no_triangles: return "NoTriangles";
        case Status::class_too_large: return "ClassTooLarge";
        case Status::not_unit_pair: return "NotUnitPair";
        case Status::invalid_s: return "InvalidS";
        case Status::bad_color_count: return "BadColorCount";
        case Status::field_too_small: return "FieldTooSmall";
        case Status::subset_too_large: return "SubsetTooLarge";
        case Status::io_error: return "IoError";
        case Status::internal: return "InternalError";
    }
    return "unknown";
}

} // namespace rtri
