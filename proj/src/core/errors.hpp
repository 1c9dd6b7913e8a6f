#pragma once

#include <stdexcept>
#include <string>

namespace rtri {

// Error categories shared by the C++ core and the C API (kept in sync with
// the RTRI_E_* codes in include/rtri.h).
enum class Status {
    ok = 0,
    not_prime,
    char_too_small,
    reducible_modulus,
    division_by_zero,
    mixed_fields,
    bad_argument,
    parse_error,
    coverage_error,
    field_mismatch,
    ground_set_mismatch,
    empty_coloring,
    nonpositive_u,
    incomplete_coloring,
    no_triangles,
    class_too_large,
    not_unit_pair,
    invalid_s,
    bad_color_count,
    field_too_small,
    subset_too_large,
    io_error,
    internal,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Status code() const noexcept { return code_; }

private:
    Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& message) {
    throw Error(code, message);
}

} // namespace rtri
