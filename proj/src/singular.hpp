#pragma once

#include <cstdint>
#include <vector>

#include "resolution.hpp"

namespace cuspidal {

/// Point of the projective plane with coordinates in the curve's field or a
/// finite extension of it; normalized so the last nonzero coordinate is 1.
struct ProjPoint {
    FieldPtr field;
    std::array<FieldElem, 3> coords;
    int ext_degree = 1; // residue degree over the base field

    std::string str() const;
};

ProjPoint make_point(const FieldPtr& K, std::array<FieldElem, 3> coords, int ext_degree = 1);

enum class SingType { A1, A2, other };
const char* sing_type_name(SingType t);

struct SingularityReport {
    ProjPoint point;
    SingType type;
    std::int64_t local_tjurina; // 1 for A1, 2 for A2, computed for others
};

/// The singular locus of a plane curve: the radical ideal of the singular
/// subscheme, its geometric point count, the classified points that were
/// solved over supported extensions, and the global Tjurina number.
struct CuspLocus {
    Poly curve;
    IdealBasis ideal;
    std::int64_t count = 0;
    std::vector<SingularityReport> reports;
    std::int64_t tjurina_total = -1;
};

/// Radical of <f, f_u, f_v, f_w> plus the geometric count. Rejects
/// non-reduced curves and positive-dimensional singular loci.
CuspLocus singular_locus(const Poly& f, std::uint64_t seed = 1);

/// All points of a zero-dimensional radical ideal rational over extensions
/// of degree <= max_ext_degree, through eliminant factorization in shape
/// position and back-substitution. The residue degrees of the returned
/// points sum to at most the geometric count, with equality once
/// max_ext_degree is large enough.
std::vector<ProjPoint> solve_points(const IdealBasis& ideal, int max_ext_degree,
                                    std::uint64_t seed = 1);

/// Local classification at a singular point: A1 when the quadratic jet is
/// nondegenerate, A2 when it is a repeated line not dividing the cubic jet,
/// and "other" otherwise (with a computed local Tjurina number).
SingularityReport classify_singularity(const Poly& f, const ProjPoint& pt);

/// Certifies that every singular point of f is an ordinary cusp: solves the
/// locus, classifies every point, checks the residue degrees exhaust the
/// count and that the global Tjurina number equals twice the cusp count.
CuspLocus assert_only_cusps(const Poly& f, int max_ext_degree = 8, std::uint64_t seed = 1);

/// Brute-force oracle: scan all points of P^2(F_p) for simultaneous
/// vanishing of f and its partials. Prime fields only.
std::vector<ProjPoint> scan_rational_singular_points(const Poly& f);

} // namespace cuspidal
