#include "mordell.hpp"

namespace cuspidal {

QtrReport verify_qtr(const QtrTriple& t) {
    const FieldPtr& F = t.f.field();
    if (t.h3.is_zero()) fail(errc::degree_mismatch, "h3 must be nonzero");
    if (t.f.is_zero() || !t.f.is_homogeneous() || t.f.degree() % 6 != 0)
        fail(errc::degree_mismatch, "curve must be homogeneous of degree 6k");
    for (const Poly* h : {&t.h1, &t.h2, &t.h3})
        if (!h->is_homogeneous()) fail(errc::degree_mismatch, "triple entries must be homogeneous");

    QtrReport rep;
    rep.k = t.f.degree() / 6;
    rep.s = t.h3.degree();
    Poly fh6 = t.f * t.h3.pow(6);
    Poly lhs = t.h1 * t.h1 + t.h2.pow(3);
    rep.residual = t.convention == QtrConvention::torus_sign ? lhs - fh6 : lhs + fh6;
    rep.valid = rep.residual.is_zero();
    const int ks = rep.k + rep.s;
    rep.degrees_ok = (t.h1.is_zero() || t.h1.degree() == 3 * ks) &&
                     (t.h2.is_zero() || t.h2.degree() == 2 * ks);
    (void)F;
    return rep;
}

namespace {

void require_primitive_root(const FieldElem& z, unsigned n) {
    const Field* F = z.field();
    FieldElem acc = F->one();
    for (unsigned i = 1; i < n; ++i) {
        acc = acc * z;
        if (acc.is_one())
            fail(errc::no_such_root, "expected a primitive root of order " + std::to_string(n));
    }
    if (!(acc * z).is_one())
        fail(errc::no_such_root, "expected a root of unity of order " + std::to_string(n));
}

} // namespace

QtrTriple xi_twist(const QtrTriple& t, const FieldElem& zeta6) {
    require_primitive_root(zeta6, 6);
    QtrTriple out{-t.h1, t.h2.scaled(zeta6 * zeta6), t.h3, t.f, t.convention};
    QtrReport before = verify_qtr(t), after = verify_qtr(out);
    if (before.valid && !after.valid)
        fail(errc::identity_fails, "twist broke a valid relation (unexpected)");
    return out;
}

QtrTriple convert_convention(const QtrTriple& t, QtrConvention target) {
    if (t.convention == target) return t;
    const FieldPtr F = t.f.field();
    FieldElem i = F->primitive_nth_root(4);
    FieldElem zeta6 = F->primitive_nth_root(6);
    QtrTriple out{t.h1.scaled(i), t.h2.scaled(zeta6), t.h3, t.f, target};
    QtrReport before = verify_qtr(t), after = verify_qtr(out);
    if (before.valid && !after.valid)
        fail(errc::identity_fails, "conversion broke a valid relation (unexpected)");
    return out;
}

QtrTriple TorusFamily::qtr1() const {
    return QtrTriple{v1, -w1, Poly::constant(f.field(), f.field()->one()), f,
                     QtrConvention::torus_sign};
}

QtrTriple TorusFamily::qtr2() const {
    return QtrTriple{v2, -w2, Poly::constant(f.field(), f.field()->one()), f,
                     QtrConvention::torus_sign};
}

TorusFamily torus_family(int k, const Poly& f1, const Poly& f2, const Poly& f3) {
    const FieldPtr& F = f1.field();
    if (k < 1) fail(errc::degree_mismatch, "k must be positive");
    std::int64_t p = F->characteristic();
    if (p == 2 || p == 3) fail(errc::no_eta, "6 must be invertible in the field");
    if (f1.degree() != 2 * k || !f1.is_homogeneous())
        fail(errc::degree_mismatch, "f1 must be homogeneous of degree 2k");
    if (f2.degree() != k || !f2.is_homogeneous() || f3.degree() != k || !f3.is_homogeneous())
        fail(errc::degree_mismatch, "f2, f3 must be homogeneous of degree k");
    FieldElem eta = F->zero();
    try {
        eta = F->sqrt(F->from_int(-3));
    } catch (const error& e) {
        if (e.code() == errc::non_residue)
            fail(errc::no_eta, "field has no square root of -3");
        throw;
    }
    FieldElem half = F->from_int(2).inverse();

    TorusFamily T{k, f1, f2, f3, eta, Poly(F), Poly(F), Poly(F), Poly(F), Poly(F)};
    Poly f23 = f2 * f3;
    T.w1 = f1 - f23;
    T.w2 = f1 + f23;
    Poly a = (f2 * f3 * f3).scaled(half);
    Poly b = (f1 * f2).scaled(eta);
    Poly c = f2 * f2 * f3;
    Poly d = (f1 * f3).scaled(eta * half);
    T.v1 = a - b - c - d;
    T.v2 = a + b + c - d;
    T.f = T.v1 * T.v1 - T.w1.pow(3);
    Poly check = T.v2 * T.v2 - T.w2.pow(3);
    if (!(T.f == check))
        fail(errc::identity_fails, "torus identities disagree (unexpected)");
    return T;
}

DimensionAudit dimension_audit(int k, int d) {
    DimensionAudit a;
    a.k = k;
    a.d = d;
    a.torus_parameter_dim = graded_dim(2 * k) + 2 * graded_dim(k);
    a.torus_closed_form = 3LL * k * k + 6 * k + 3;
    a.torus_codim_form =
        graded_dim(6 * k) - 16LL * k * k + std::int64_t(k - 1) * (k - 2);
    a.pencil_dim_difference = graded_dim(12 * d) - graded_dim(4 * d) - graded_dim(6 * d);
    a.pencil_closed_form = 46LL * d * d + 3 * d - 1;
    bool ok = a.torus_parameter_dim == a.torus_closed_form &&
              a.torus_closed_form == a.torus_codim_form &&
              a.pencil_dim_difference == a.pencil_closed_form;
    for (int m = 0; m <= 2; ++m) {
        std::int64_t codim = 64LL * d * d - std::int64_t(m) * (2 * d - 1) * (d - 1);
        a.codim_by_m[size_t(m)] = codim;
        // same quantity written through the cusp count of the pulled-back curve
        std::int64_t via_cusps = 2 * (32LL * d * d) - std::int64_t(m) * (2 * d - 1) * (d - 1);
        ok = ok && codim == via_cusps;
    }
    a.all_identities_hold = ok;
    return a;
}

} // namespace cuspidal
