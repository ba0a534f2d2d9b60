#pragma once

#include <stdexcept>
#include <string>

namespace cuspidal {

enum class errc {
    internal = 1,
    composite_characteristic,
    reducible_modulus,
    no_such_root,
    non_residue,
    syntax_error,
    mixed_field,
    field_mismatch,
    not_homogeneous,
    dependent_lines,
    resource_exhausted,
    not_zero_dimensional,
    characteristic_too_small,
    unexpected_projective_dimension,
    no_stabilization,
    non_reduced_curve,
    not_radical,
    point_not_on_curve,
    smooth_point,
    non_cusp_singularity,
    route_mismatch,
    identity_fails,
    degree_mismatch,
    no_eta,
    no_sixth_root,
    non_generic_line,
    non_transverse_lines,
    unsupported,
};

const char* errc_name(errc c);

/// Exception carrying a stable error code alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cuspidal
