#pragma once

#include "poly.hpp"

namespace cuspidal {

/// Sign convention for a (2,3,6) quasi-toric relation: torus_sign asserts
/// h1^2 + h2^3 = f * h3^6, paper_sign asserts h1^2 + h2^3 + f * h3^6 = 0.
/// The two differ by unit twists available once the field contains i and a
/// primitive sixth root of unity.
enum class QtrConvention { torus_sign, paper_sign };

struct QtrTriple {
    Poly h1, h2, h3;
    Poly f;
    QtrConvention convention = QtrConvention::torus_sign;
};

struct QtrReport {
    bool valid = false;
    Poly residual;   // zero iff valid
    int k = 0;       // deg f = 6k
    int s = 0;       // deg h3
    bool degrees_ok = false; // deg h1 = 3(k+s), deg h2 = 2(k+s)
};

/// Checks the polynomial identity of the triple's convention exactly and
/// the degree bookkeeping. Zero h3 or a curve degree not divisible by 6 is
/// a DegreeMismatch; an invalid identity is reported, not thrown.
QtrReport verify_qtr(const QtrTriple& t);

/// Complex-multiplication twist (h1, h2, h3) -> (-h1, zeta6^2 h2, h3); an
/// order-6 action on valid triples. zeta6 must be a primitive sixth root.
QtrTriple xi_twist(const QtrTriple& t, const FieldElem& zeta6);

/// Converts between the two sign conventions by twisting h1 by i and h2 by
/// a primitive sixth root; requires both to exist in the field.
QtrTriple convert_convention(const QtrTriple& t, QtrConvention target);

/// The rank-4 torus family: from f1 of degree 2k and f2, f3 of degree k,
/// with eta^2 = -3, builds w1, w2, v1, v2 and f = v1^2 - w1^3 = v2^2 - w2^3.
struct TorusFamily {
    int k;
    Poly f1, f2, f3;
    FieldElem eta;
    Poly w1, w2, v1, v2, f;

    QtrTriple qtr1() const; // (v1, -w1, 1) in torus sign
    QtrTriple qtr2() const; // (v2, -w2, 1)
};

TorusFamily torus_family(int k, const Poly& f1, const Poly& f2, const Poly& f3);

/// Closed-form integer identities behind the deformation dimension counts.
struct DimensionAudit {
    int k = 0, d = 0;
    std::int64_t torus_parameter_dim = 0;   // dim S_2k + 2 dim S_k
    std::int64_t torus_closed_form = 0;     // 3k^2 + 6k + 3
    std::int64_t torus_codim_form = 0;      // dim S_6k - 16k^2 + (k-1)(k-2)
    std::int64_t pencil_dim_difference = 0; // dim S_12d - dim S_4d - dim S_6d
    std::int64_t pencil_closed_form = 0;    // 46d^2 + 3d - 1
    std::array<std::int64_t, 3> codim_by_m{}; // 64d^2 - m(2d-1)(d-1)
    bool all_identities_hold = false;
};

DimensionAudit dimension_audit(int k, int d);

} // namespace cuspidal
