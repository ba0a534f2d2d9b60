#pragma once

#include <optional>
#include <string>

#include "alexander.hpp"
#include "mordell.hpp"

namespace cuspidal {

/// The nine inflexion points and tangent lines of the Fermat cubic over a
/// field containing a primitive sixth root of unity, grouped in three rows
/// of concurrent tangents.
struct FermatData {
    FieldPtr field;
    FieldElem xi;    // primitive sixth root (zeta12^2)
    FieldElem zeta3; // xi^2
    Poly cubic;      // u^3 + v^3 + w^3
    std::array<std::array<ProjPoint, 3>, 3> flex;
    std::array<std::array<Poly, 3>, 3> tangent;
    std::array<ProjPoint, 3> row_meet;
};

/// Builds the table and verifies every incidence: points on the cubic and
/// on their tangent lines, triple contact of each tangent, and the row
/// concurrency points.
FermatData build_fermat_data(const FieldPtr& F);

/// One curve of the catalog together with its expected invariants and any
/// verified quasi-toric relations.
struct CurveRecipe {
    std::string name;
    FieldPtr field;
    std::uint64_t seed = 0;
    Poly result;

    int degree = 0;
    std::int64_t expected_cusps = 0;
    std::vector<int> expected_gen_degrees;
    std::vector<int> expected_syz_degrees;
    int expected_alexander = 0;

    std::vector<QtrTriple> qtrs;

    // first-cover data kept by the C66 recipe for downstream constructions
    Poly ell1, ell2;  // bitangent pair covering the third tangent line
    Poly conic_q;     // preimage of v = 0
    Poly pre_u, pre_v; // set-theoretic preimages of the first-cover lines

    std::string note;
};

CurveRecipe build_C66(const FieldPtr& F);
/// The stored verbatim reduction equation; lives over F_457 by definition.
CurveRecipe build_C120bar();
CurveRecipe build_C121(const FieldPtr& F, std::optional<Poly> line3 = std::nullopt);
CurveRecipe build_C68sub(const FieldPtr& F, std::uint64_t seed = 1);
CurveRecipe build_C122(const FieldPtr& F, std::uint64_t seed = 1);

/// Saturated-Jacobian checks for a degree-12 catalog curve expecting m
/// top-degree syzygies.
struct JacobianChecks {
    int m = 0;
    std::int64_t length = -1;       // expect 64
    std::int64_t dim_quotient_11 = -1; // expect 64 - m
    std::int64_t codim_12 = -1;     // expect 64
    BettiTable table;
    int max_degree = -1;
    int at_13 = 0;                  // generators or syzygies of degree 13
    int syz_at_14 = 0;              // expect m
    bool even_degrees = true;
    bool length_ok = false, dim11_ok = false, codim_ok = false;
    bool max_degree_ok = false, none_at_13_ok = false, syz14_ok = false;
};

JacobianChecks jacobian_syzygy_check(const CurveRecipe& recipe, int m);

/// One acceptance-claim outcome. Expected values carry a short provenance
/// sentence; computed values are reproducible from (field, seed).
struct ClaimReport {
    std::string id;
    std::string status; // pass | fail | skipped
    std::string expected;
    std::string provenance;
    std::string computed;
    std::int64_t ms = 0;
};

struct ReplayOptions {
    std::int64_t characteristic = 457;
    std::uint64_t seed = 1;
    std::vector<std::string> only; // claim-id prefixes; empty = everything
};

/// Runs every acceptance claim in dependency order. Failures are recorded
/// per claim, never thrown.
std::vector<ClaimReport> replay_all(const ReplayOptions& opts);

bool all_passed(const std::vector<ClaimReport>& reports);

} // namespace cuspidal
