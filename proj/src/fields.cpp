#include "fields.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "upoly.hpp"

namespace cuspidal {

namespace {

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return std::int64_t((__int128)a * b % p);
}

std::int64_t pow_mod_i(std::int64_t a, std::uint64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a = mod_norm(a, p);
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a = mod_norm(a, p);
    if (a == 0) fail(errc::internal, "division by zero in F_p");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) fail(errc::internal, "non-invertible element");
    return mod_norm(t, p);
}

// --- dense univariate helpers over F_p (int64 coefficient vectors) ---
// Used for extension-field arithmetic; constant term first, no implied
// normalization (callers trim).

void ztrim(std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::int64_t> zmul(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::int64_t(((__int128)r[i + j] + (__int128)a[i] * b[j]) % p);
    }
    ztrim(r);
    return r;
}

// divides in place by a monic divisor, returns remainder
std::vector<std::int64_t> zrem_monic(std::vector<std::int64_t> a,
                                     const std::vector<std::int64_t>& m, std::int64_t p) {
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t c = a.back();
        size_t off = a.size() - 1 - dm;
        if (c != 0)
            for (size_t j = 0; j < dm; ++j)
                a[off + j] = mod_norm(a[off + j] - mul_mod(c, m[j], p), p);
        a.pop_back();
        ztrim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

// quotient and remainder of a by b over F_p[t]; b nonzero
void zdivmod(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
             std::vector<std::int64_t>& q, std::vector<std::int64_t>& rem, std::int64_t p) {
    rem = a;
    ztrim(rem);
    q.clear();
    if (rem.size() < b.size()) return;
    q.assign(rem.size() - b.size() + 1, 0);
    std::int64_t linv = inv_mod(b.back(), p);
    while (rem.size() >= b.size() && !rem.empty()) {
        std::int64_t c = mul_mod(rem.back(), linv, p);
        size_t off = rem.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j)
            rem[off + j] = mod_norm(rem[off + j] - mul_mod(c, b[j], p), p);
        ztrim(rem);
    }
}

// extended gcd over F_p[t]: returns (g, s) with s*a = g mod m, g = gcd(a, m)
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
zext_gcd_mod(std::vector<std::int64_t> a, std::vector<std::int64_t> m, std::int64_t p) {
    std::vector<std::int64_t> r0 = m, r1 = a, s0 = {}, s1 = {1};
    ztrim(r0); ztrim(r1);
    while (!r1.empty()) {
        std::vector<std::int64_t> q, rem;
        zdivmod(r0, r1, q, rem, p);
        std::vector<std::int64_t> qs = zmul(q, s1, p);
        std::vector<std::int64_t> sn(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < sn.size(); ++i) {
            std::int64_t x = i < s0.size() ? s0[i] : 0;
            std::int64_t y = i < qs.size() ? qs[i] : 0;
            sn[i] = mod_norm(x - y, p);
        }
        ztrim(sn);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = sn;
    }
    return {r0, s0};
}

} // namespace

bool is_prime_int64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin, valid for n < 3.2e18 with these bases
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) continue;
        std::int64_t x = pow_mod_i(a, std::uint64_t(d), n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::internal: return "InternalError";
        case errc::composite_characteristic: return "CompositeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::no_such_root: return "NoSuchRoot";
        case errc::non_residue: return "NonResidue";
        case errc::syntax_error: return "SyntaxError";
        case errc::mixed_field: return "MixedField";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::dependent_lines: return "DependentLines";
        case errc::resource_exhausted: return "ResourceExhausted";
        case errc::not_zero_dimensional: return "NotZeroDimensional";
        case errc::characteristic_too_small: return "CharacteristicTooSmall";
        case errc::unexpected_projective_dimension: return "UnexpectedProjectiveDimension";
        case errc::no_stabilization: return "NoStabilization";
        case errc::non_reduced_curve: return "NonReducedCurve";
        case errc::not_radical: return "NotRadical";
        case errc::point_not_on_curve: return "PointNotOnCurve";
        case errc::smooth_point: return "SmoothPoint";
        case errc::non_cusp_singularity: return "NonCuspSingularity";
        case errc::route_mismatch: return "RouteMismatch";
        case errc::identity_fails: return "IdentityFails";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::no_eta: return "NoEta";
        case errc::no_sixth_root: return "NoSixthRoot";
        case errc::non_generic_line: return "NonGenericLine";
        case errc::non_transverse_lines: return "NonTransverseLines";
        case errc::unsupported: return "Unsupported";
    }
    return "UnknownError";
}

// ---------------------------------------------------------------------------
// construction

FieldPtr Field::rationals() {
    auto f = FieldPtr(new Field());
    const_cast<Field&>(*f).kind_ = FieldKind::rationals;
    return f;
}

FieldPtr Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        fail(errc::composite_characteristic, "characteristic must be a prime below 2^31, got " + std::to_string(p));
    if (!is_prime_int64(p))
        fail(errc::composite_characteristic, std::to_string(p) + " is not prime");
    auto f = FieldPtr(new Field());
    auto& m = const_cast<Field&>(*f);
    m.kind_ = FieldKind::prime;
    m.p_ = p;
    return f;
}

FieldPtr Field::extension(const FieldPtr& base, const std::vector<FieldElem>& modulus) {
    if (!base) fail(errc::internal, "null base field");
    if (base->kind() == FieldKind::extension)
        fail(errc::unsupported, "extension towers are not supported");
    if (modulus.size() < 3)
        fail(errc::reducible_modulus, "modulus must have degree >= 2");
    if (!modulus.back().is_one())
        fail(errc::reducible_modulus, "modulus must be monic");

    if (base->is_finite()) {
        UPoly m = upoly_from(base, modulus);
        if (!upoly_is_irreducible(m)) {
            auto factors = upoly_factor(m);
            std::string msg = "modulus factors; one factor: " + upoly_str(factors.front().first, "t");
            fail(errc::reducible_modulus, msg);
        }
    } else {
        // Over Q: certify irreducibility by reduction modulo small primes
        // (squarefree reduction irreducible mod p implies irreducible over Q);
        // for degree <= 3 fall back to an exhaustive rational-root test.
        UPoly m = upoly_from(base, modulus);
        int d = m.deg();
        bool certified = false;
        for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
            bool ok = true;
            FieldPtr Fp = Field::prime(p);
            std::vector<FieldElem> red;
            for (const auto& c : modulus) {
                const auto& q = std::get<RatRep>(c.rep());
                if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p))) { ok = false; break; }
                mpz_class num = q.get_num() % p, den = q.get_den() % p;
                std::int64_t n = mod_norm(num.get_si(), p), dd = mod_norm(den.get_si(), p);
                red.push_back(Fp->from_int(mul_mod(n, inv_mod(dd, p), p)));
            }
            if (!ok) continue;
            UPoly mp = upoly_from(Fp, red);
            if (mp.deg() != d) continue;
            if (upoly_eq(upoly_gcd(mp, upoly_derivative(mp)), upoly_const(Fp, Fp->one())) &&
                upoly_is_irreducible(mp)) {
                certified = true;
                break;
            }
        }
        if (!certified) {
            if (d <= 3) {
                // monic with rational coefficients: clear denominators and
                // test all rational roots r = a/b, b | lead, a | constant
                mpz_class den(1);
                for (const auto& c : modulus) den = lcm(den, mpq_class(std::get<RatRep>(c.rep())).get_den());
                std::vector<mpz_class> zc;
                for (const auto& c : modulus) {
                    mpq_class q = std::get<RatRep>(c.rep()) * den;
                    zc.push_back(q.get_num());
                }
                mpz_class a0 = zc.front(), an = zc.back();
                if (a0 == 0)
                    fail(errc::reducible_modulus, "modulus factors; one factor: t");
                for (mpz_class a(1); a <= abs(a0); ++a) {
                    if (!mpz_divisible_p(a0.get_mpz_t(), a.get_mpz_t())) continue;
                    for (mpz_class b(1); b <= abs(an); ++b) {
                        if (!mpz_divisible_p(an.get_mpz_t(), b.get_mpz_t())) continue;
                        for (int sign : {1, -1}) {
                            mpq_class r(a * sign, b);
                            r.canonicalize();
                            UPoly m2 = upoly_from(base, modulus);
                            if (upoly_eval(m2, base->from_mpq(r)).is_zero()) {
                                std::ostringstream os;
                                os << "modulus factors; one factor: t" << (r >= 0 ? "-" : "+")
                                   << abs(r);
                                fail(errc::reducible_modulus, os.str());
                            }
                        }
                    }
                }
                certified = true; // degree <= 3 with no rational root
            } else {
                fail(errc::unsupported, "cannot certify irreducibility over Q for degree >= 4 modulus");
            }
        }
    }

    auto f = FieldPtr(new Field());
    auto& m = const_cast<Field&>(*f);
    m.kind_ = FieldKind::extension;
    m.p_ = base->characteristic();
    m.base_ = base;
    if (base->is_finite()) {
        for (const auto& c : modulus) m.mod_p_.push_back(std::get<PrimeRep>(c.rep()));
    } else {
        for (const auto& c : modulus) m.mod_q_.push_back(std::get<RatRep>(c.rep()));
    }
    return f;
}

mpz_class Field::size() const {
    if (!is_finite()) fail(errc::internal, "size() of an infinite field");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(ext_degree()));
    return q;
}

// ---------------------------------------------------------------------------
// element constructors

FieldElem Field::zero() const {
    switch (kind_) {
        case FieldKind::prime: return FieldElem(this, PrimeRep{0});
        case FieldKind::extension:
            if (base_->is_finite()) return FieldElem(this, ExtRep(ext_degree(), 0));
            return FieldElem(this, RatExtRep(ext_degree(), mpq_class(0)));
        case FieldKind::rationals: return FieldElem(this, RatRep(0));
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t n) const {
    switch (kind_) {
        case FieldKind::prime: return FieldElem(this, mod_norm(n, p_));
        case FieldKind::extension: {
            if (base_->is_finite()) {
                ExtRep r(ext_degree(), 0);
                r[0] = mod_norm(n, p_);
                return FieldElem(this, std::move(r));
            }
            RatExtRep r(ext_degree(), mpq_class(0));
            r[0] = n;
            return FieldElem(this, std::move(r));
        }
        case FieldKind::rationals: return FieldElem(this, RatRep(n));
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::from_mpq(const mpq_class& q) const {
    switch (kind_) {
        case FieldKind::rationals: {
            mpq_class r = q;
            r.canonicalize();
            return FieldElem(this, std::move(r));
        }
        case FieldKind::extension:
            if (!base_->is_finite()) {
                RatExtRep r(ext_degree(), mpq_class(0));
                r[0] = q;
                r[0].canonicalize();
                return FieldElem(this, std::move(r));
            }
            [[fallthrough]];
        case FieldKind::prime: {
            mpz_class num = q.get_num() % p_, den = q.get_den() % p_;
            std::int64_t n = mod_norm(num.get_si(), p_), d = mod_norm(den.get_si(), p_);
            if (d == 0) fail(errc::internal, "denominator divisible by characteristic");
            return from_int(mul_mod(n, inv_mod(d, p_), p_));
        }
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::gen() const {
    if (kind_ != FieldKind::extension) fail(errc::internal, "gen() on a non-extension field");
    if (base_->is_finite()) {
        ExtRep r(ext_degree(), 0);
        r[1] = 1;
        return FieldElem(this, std::move(r));
    }
    RatExtRep r(ext_degree(), mpq_class(0));
    r[1] = 1;
    return FieldElem(this, std::move(r));
}

FieldElem Field::embed(const FieldElem& e) const {
    if (same(this, e.field())) return e;
    if (kind_ == FieldKind::extension && same(base_.get(), e.field())) {
        if (base_->is_finite()) {
            ExtRep r(ext_degree(), 0);
            r[0] = std::get<PrimeRep>(e.rep());
            return FieldElem(this, std::move(r));
        }
        RatExtRep r(ext_degree(), mpq_class(0));
        r[0] = std::get<RatRep>(e.rep());
        return FieldElem(this, std::move(r));
    }
    fail(errc::field_mismatch, "cannot embed element into this field");
}

// ---------------------------------------------------------------------------
// arithmetic

bool Field::same(const Field* a, const Field* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind_ != b->kind_ || a->p_ != b->p_) return false;
    if (a->kind_ == FieldKind::extension) {
        if (a->base_->kind() != b->base_->kind()) return false;
        if (a->mod_p_ != b->mod_p_) return false;
        if (a->mod_q_ != b->mod_q_) return false;
    }
    return true;
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!Field::same(a.field(), b.field()))
        fail(errc::field_mismatch, "operands live in different fields");
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    require_same_field(a, b);
    switch (kind_) {
        case FieldKind::prime:
            return FieldElem(this, mod_norm(std::get<PrimeRep>(a.rep()) + std::get<PrimeRep>(b.rep()), p_));
        case FieldKind::extension: {
            if (base_->is_finite()) {
                ExtRep r = std::get<ExtRep>(a.rep());
                const auto& y = std::get<ExtRep>(b.rep());
                for (size_t i = 0; i < r.size(); ++i) r[i] = mod_norm(r[i] + y[i], p_);
                return FieldElem(this, std::move(r));
            }
            RatExtRep r = std::get<RatExtRep>(a.rep());
            const auto& y = std::get<RatExtRep>(b.rep());
            for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
            return FieldElem(this, std::move(r));
        }
        case FieldKind::rationals:
            return FieldElem(this, RatRep(std::get<RatRep>(a.rep()) + std::get<RatRep>(b.rep())));
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::neg(const FieldElem& a) const {
    switch (kind_) {
        case FieldKind::prime: {
            auto x = std::get<PrimeRep>(a.rep());
            return FieldElem(this, x == 0 ? 0 : p_ - x);
        }
        case FieldKind::extension: {
            if (base_->is_finite()) {
                ExtRep r = std::get<ExtRep>(a.rep());
                for (auto& x : r) x = x == 0 ? 0 : p_ - x;
                return FieldElem(this, std::move(r));
            }
            RatExtRep r = std::get<RatExtRep>(a.rep());
            for (auto& x : r) x = -x;
            return FieldElem(this, std::move(r));
        }
        case FieldKind::rationals:
            return FieldElem(this, RatRep(-std::get<RatRep>(a.rep())));
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

ExtRep Field::ext_mul(const ExtRep& a, const ExtRep& b) const {
    const int d = ext_degree();
    std::vector<std::int64_t> conv(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            conv[i + j] = std::int64_t(((__int128)conv[i + j] + (__int128)a[i] * b[j]) % p_);
    }
    for (int i = 2 * d - 2; i >= d; --i) {
        std::int64_t c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (int j = 0; j < d; ++j)
            conv[i - d + j] = mod_norm(conv[i - d + j] - mul_mod(c, mod_p_[j], p_), p_);
    }
    conv.resize(d);
    return conv;
}

ExtRep Field::ext_inv(const ExtRep& a) const {
    std::vector<std::int64_t> av = a;
    ztrim(av);
    if (av.empty()) fail(errc::internal, "inverse of zero");
    auto [g, s] = zext_gcd_mod(av, mod_p_, p_);
    if (g.size() != 1) fail(errc::internal, "non-invertible extension element");
    std::int64_t gi = inv_mod(g[0], p_);
    ExtRep r(ext_degree(), 0);
    for (size_t i = 0; i < s.size() && i < r.size(); ++i) r[i] = mul_mod(s[i], gi, p_);
    // s may have degree >= d in pathological cases; reduce to be safe
    if (s.size() > size_t(ext_degree())) {
        auto red = zrem_monic(s, mod_p_, p_);
        std::fill(r.begin(), r.end(), 0);
        for (size_t i = 0; i < red.size(); ++i) r[i] = mul_mod(red[i], gi, p_);
    }
    return r;
}

RatExtRep Field::qext_mul(const RatExtRep& a, const RatExtRep& b) const {
    const int d = ext_degree();
    RatExtRep conv(2 * d - 1, mpq_class(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) conv[i + j] += a[i] * b[j];
    }
    for (int i = 2 * d - 2; i >= d; --i) {
        mpq_class c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (int j = 0; j < d; ++j) conv[i - d + j] -= c * mod_q_[j];
    }
    conv.resize(d);
    return conv;
}

RatExtRep Field::qext_inv(const RatExtRep& a) const {
    // extended Euclid over Q[t]
    std::vector<mpq_class> r0(mod_q_), r1(a), s0, s1{mpq_class(1)};
    auto trim = [](std::vector<mpq_class>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(r0); trim(r1);
    if (r1.empty()) fail(errc::internal, "inverse of zero");
    while (!r1.empty()) {
        std::vector<mpq_class> rem = r0, q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, mpq_class(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            q[off] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
            trim(rem);
        }
        std::vector<mpq_class> qs;
        if (!q.empty() && !s1.empty()) {
            qs.assign(q.size() + s1.size() - 1, mpq_class(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        std::vector<mpq_class> sn(std::max(s0.size(), qs.size()), mpq_class(0));
        for (size_t i = 0; i < sn.size(); ++i) {
            if (i < s0.size()) sn[i] += s0[i];
            if (i < qs.size()) sn[i] -= qs[i];
        }
        trim(sn);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = sn;
    }
    if (r0.size() != 1) fail(errc::internal, "non-invertible extension element");
    RatExtRep out(ext_degree(), mpq_class(0));
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / r0[0];
    return out;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    require_same_field(a, b);
    switch (kind_) {
        case FieldKind::prime:
            return FieldElem(this, mul_mod(std::get<PrimeRep>(a.rep()), std::get<PrimeRep>(b.rep()), p_));
        case FieldKind::extension:
            if (base_->is_finite())
                return FieldElem(this, ext_mul(std::get<ExtRep>(a.rep()), std::get<ExtRep>(b.rep())));
            return FieldElem(this, qext_mul(std::get<RatExtRep>(a.rep()), std::get<RatExtRep>(b.rep())));
        case FieldKind::rationals:
            return FieldElem(this, RatRep(std::get<RatRep>(a.rep()) * std::get<RatRep>(b.rep())));
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::inv(const FieldElem& a) const {
    if (is_zero(a)) fail(errc::internal, "inverse of zero");
    switch (kind_) {
        case FieldKind::prime:
            return FieldElem(this, inv_mod(std::get<PrimeRep>(a.rep()), p_));
        case FieldKind::extension:
            if (base_->is_finite()) return FieldElem(this, ext_inv(std::get<ExtRep>(a.rep())));
            return FieldElem(this, qext_inv(std::get<RatExtRep>(a.rep())));
        case FieldKind::rationals: {
            mpq_class r = 1 / std::get<RatRep>(a.rep());
            return FieldElem(this, std::move(r));
        }
    }
    fail(errc::internal, "bad kind");
}

FieldElem Field::pow(const FieldElem& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElem r = one(), base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool Field::is_zero(const FieldElem& a) const {
    switch (kind_) {
        case FieldKind::prime: return std::get<PrimeRep>(a.rep()) == 0;
        case FieldKind::extension:
            if (base_->is_finite()) {
                for (auto x : std::get<ExtRep>(a.rep())) if (x) return false;
                return true;
            }
            for (const auto& x : std::get<RatExtRep>(a.rep())) if (x != 0) return false;
            return true;
        case FieldKind::rationals: return std::get<RatRep>(a.rep()) == 0;
    }
    fail(errc::internal, "bad kind");
}

bool Field::eq(const FieldElem& a, const FieldElem& b) const {
    require_same_field(a, b);
    return a.rep() == b.rep();
}

int Field::cmp_canonical(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    if (std::holds_alternative<PrimeRep>(a.rep())) {
        auto x = std::get<PrimeRep>(a.rep()), y = std::get<PrimeRep>(b.rep());
        return x < y ? -1 : x > y ? 1 : 0;
    }
    if (std::holds_alternative<ExtRep>(a.rep())) {
        const auto& x = std::get<ExtRep>(a.rep());
        const auto& y = std::get<ExtRep>(b.rep());
        for (size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        return 0;
    }
    if (std::holds_alternative<RatRep>(a.rep())) {
        int c = cmp(std::get<RatRep>(a.rep()), std::get<RatRep>(b.rep()));
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    const auto& x = std::get<RatExtRep>(a.rep());
    const auto& y = std::get<RatExtRep>(b.rep());
    for (size_t i = x.size(); i-- > 0;) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

FieldElem Field::random_elem(std::mt19937_64& rng) const {
    switch (kind_) {
        case FieldKind::prime: {
            std::uniform_int_distribution<std::int64_t> d(0, p_ - 1);
            return FieldElem(this, d(rng));
        }
        case FieldKind::extension: {
            if (base_->is_finite()) {
                std::uniform_int_distribution<std::int64_t> d(0, p_ - 1);
                ExtRep r(ext_degree());
                for (auto& x : r) x = d(rng);
                return FieldElem(this, std::move(r));
            }
            std::uniform_int_distribution<int> d(-9, 9);
            RatExtRep r(ext_degree(), mpq_class(0));
            for (auto& x : r) x = d(rng);
            return FieldElem(this, std::move(r));
        }
        case FieldKind::rationals: {
            std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
            mpq_class q(num(rng), den(rng));
            q.canonicalize();
            return FieldElem(this, std::move(q));
        }
    }
    fail(errc::internal, "bad kind");
}

// ---------------------------------------------------------------------------
// roots

FieldElem Field::primitive_nth_root(unsigned n, std::uint64_t seed) const {
    if (n == 0) fail(errc::no_such_root, "n must be positive");
    if (n == 1) return one();
    if (!is_finite()) {
        if (n == 2) return from_int(-1);
        fail(errc::no_such_root, "Q contains no primitive root of order " + std::to_string(n));
    }
    mpz_class q = size(), order = q - 1;
    if (!mpz_divisible_ui_p(order.get_mpz_t(), n))
        fail(errc::no_such_root, std::to_string(n) + " does not divide q-1");
    std::vector<unsigned> prime_divs;
    unsigned m = n;
    for (unsigned d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);
    mpz_class e = order / n;

    std::mt19937_64 rng(seed ^ 0x5eedULL);
    auto try_candidate = [&](const FieldElem& x) -> std::optional<FieldElem> {
        if (is_zero(x)) return std::nullopt;
        FieldElem z = pow(x, e);
        for (unsigned l : prime_divs)
            if (pow(z, n / l).is_one()) return std::nullopt;
        return z;
    };
    // deterministic small candidates first, then seeded random ones
    for (std::int64_t c = 2; c < 64; ++c)
        if (auto z = try_candidate(from_int(c))) return *z;
    if (kind_ == FieldKind::extension)
        for (int tries = 0; tries < 4096; ++tries)
            if (auto z = try_candidate(random_elem(rng))) return *z;
    for (int tries = 0; tries < 4096; ++tries)
        if (auto z = try_candidate(random_elem(rng))) return *z;
    fail(errc::no_such_root, "no primitive root found (unexpected)");
}

FieldElem Field::sqrt(const FieldElem& a) const {
    if (is_zero(a)) return zero();
    if (!is_finite()) {
        const auto& q = std::get<RatRep>(a.rep());
        if (q < 0) fail(errc::non_residue, "negative rational");
        mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            fail(errc::non_residue, "not a perfect rational square");
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        return FieldElem(this, RatRep(mpq_class(sn, sd)));
    }
    if (p_ == 2) return pow(a, size() / 2); // Frobenius inverse
    mpz_class q = size();
    if (!pow(a, (q - 1) / 2).is_one())
        fail(errc::non_residue, "element is not a square");
    FieldElem s = zero();
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
        s = pow(a, (q + 1) / 4);
    } else {
        // Tonelli-Shanks in the cyclic group of order q-1
        mpz_class m = q - 1;
        unsigned long e = mpz_scan1(m.get_mpz_t(), 0);
        m >>= e;
        // find a non-square deterministically
        FieldElem z = zero();
        bool found = false;
        for (std::int64_t c = 2; c < 1024 && !found; ++c) {
            FieldElem x = from_int(c);
            if (!is_zero(x) && !pow(x, (q - 1) / 2).is_one()) { z = x; found = true; }
        }
        std::mt19937_64 rng(0xace5ULL);
        while (!found) {
            FieldElem x = random_elem(rng);
            if (!is_zero(x) && !pow(x, (q - 1) / 2).is_one()) { z = x; found = true; }
        }
        FieldElem c = pow(z, m);
        FieldElem t = pow(a, m);
        FieldElem r = pow(a, (m + 1) / 2);
        unsigned long mexp = e;
        while (!t.is_one()) {
            FieldElem tt = t;
            unsigned long i = 0;
            while (!tt.is_one()) { tt = mul(tt, tt); ++i; }
            FieldElem b = c;
            for (unsigned long j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            t = mul(t, c);
            mexp = i;
        }
        s = r;
    }
    FieldElem s2 = neg(s);
    return cmp_canonical(s, s2) <= 0 ? s : s2;
}

// ---------------------------------------------------------------------------
// formatting / parsing

namespace {

void format_tpoly(std::ostream& os, const std::vector<std::string>& coeffs_desc) {
    // coeffs_desc: strings for t^(n-1) ... t^0, empty string = zero term
    bool first = true;
    int deg = int(coeffs_desc.size()) - 1;
    for (int i = 0; i < int(coeffs_desc.size()); ++i) {
        const std::string& c = coeffs_desc[i];
        if (c.empty()) continue;
        int e = deg - i;
        if (!first) os << "+";
        first = false;
        if (e == 0) { os << c; continue; }
        if (c != "1") os << c << "*";
        os << "t";
        if (e > 1) os << "^" << e;
    }
    if (first) os << "0";
}

} // namespace

std::string Field::format_elem(const FieldElem& a) const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::prime:
            os << std::get<PrimeRep>(a.rep());
            break;
        case FieldKind::rationals:
            os << std::get<RatRep>(a.rep());
            break;
        case FieldKind::extension: {
            std::vector<std::string> cs;
            if (base_->is_finite()) {
                const auto& r = std::get<ExtRep>(a.rep());
                for (size_t i = r.size(); i-- > 0;)
                    cs.push_back(r[i] == 0 ? "" : std::to_string(r[i]));
            } else {
                const auto& r = std::get<RatExtRep>(a.rep());
                for (size_t i = r.size(); i-- > 0;) {
                    if (r[i] == 0) { cs.push_back(""); continue; }
                    std::ostringstream t;
                    t << r[i];
                    cs.push_back(t.str());
                }
            }
            os << "[";
            format_tpoly(os, cs);
            os << "]";
            break;
        }
    }
    return os.str();
}

FieldElem Field::parse_elem(const std::string& text) const {
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i < text.size() && text[i] == '[') {
        if (kind_ != FieldKind::extension)
            fail(errc::mixed_field, "bracketed coefficient in a non-extension field");
        size_t close = text.find(']', i);
        if (close == std::string::npos) fail(errc::syntax_error, "missing ']' in " + text);
        std::string body = text.substr(i + 1, close - i - 1);
        // parse a polynomial in t over the base field
        FieldElem acc = zero();
        size_t j = 0;
        auto skipb = [&] { while (j < body.size() && std::isspace((unsigned char)body[j])) ++j; };
        bool expect_term = true;
        int sign = 1;
        while (true) {
            skipb();
            if (j >= body.size()) {
                if (expect_term) fail(errc::syntax_error, "dangling sign in " + text);
                break;
            }
            if (!expect_term) {
                if (body[j] == '+') { sign = 1; ++j; expect_term = true; continue; }
                if (body[j] == '-') { sign = -1; ++j; expect_term = true; continue; }
                fail(errc::syntax_error, "unexpected character in " + text);
            }
            if (body[j] == '-') { sign = -sign; ++j; continue; }
            if (body[j] == '+') { ++j; continue; }
            // coefficient
            mpq_class coeff(1);
            bool have_coeff = false;
            if (std::isdigit((unsigned char)body[j])) {
                size_t k = j;
                while (k < body.size() && std::isdigit((unsigned char)body[k])) ++k;
                mpz_class num(body.substr(j, k - j));
                j = k;
                skipb();
                if (j < body.size() && body[j] == '/') {
                    ++j; skipb();
                    size_t k2 = j;
                    while (k2 < body.size() && std::isdigit((unsigned char)body[k2])) ++k2;
                    if (k2 == j) fail(errc::syntax_error, "expected denominator in " + text);
                    mpz_class den(body.substr(j, k2 - j));
                    j = k2;
                    coeff = mpq_class(num, den);
                    coeff.canonicalize();
                } else {
                    coeff = mpq_class(num);
                }
                have_coeff = true;
                skipb();
                if (j < body.size() && body[j] == '*') { ++j; skipb(); }
            }
            unsigned texp = 0;
            if (j < body.size() && body[j] == 't') {
                ++j;
                texp = 1;
                skipb();
                if (j < body.size() && body[j] == '^') {
                    ++j; skipb();
                    size_t k = j;
                    while (k < body.size() && std::isdigit((unsigned char)body[k])) ++k;
                    if (k == j) fail(errc::syntax_error, "expected exponent in " + text);
                    texp = unsigned(std::stoul(body.substr(j, k - j)));
                    j = k;
                }
            } else if (!have_coeff) {
                fail(errc::syntax_error, "expected term in " + text);
            }
            if (texp >= unsigned(ext_degree()))
                fail(errc::syntax_error, "t-power exceeds extension degree in " + text);
            FieldElem term = from_mpq(sign < 0 ? mpq_class(-coeff) : coeff);
            FieldElem tp = one();
            for (unsigned k = 0; k < texp; ++k) tp = mul(tp, gen());
            acc = add(acc, mul(term, tp));
            sign = 1;
            expect_term = false;
        }
        i = close + 1;
        skip();
        if (i != text.size()) fail(errc::syntax_error, "trailing characters in " + text);
        return acc;
    }
    // plain integer or rational
    int sign = 1;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') sign = -1;
        ++i;
        skip();
    }
    size_t k = i;
    while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
    if (k == i) fail(errc::syntax_error, "expected number in '" + text + "'");
    mpz_class num(text.substr(i, k - i));
    i = k;
    skip();
    mpq_class q(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        size_t k2 = i;
        while (k2 < text.size() && std::isdigit((unsigned char)text[k2])) ++k2;
        if (k2 == i) fail(errc::syntax_error, "expected denominator in '" + text + "'");
        mpz_class den(text.substr(i, k2 - i));
        i = k2;
        q = mpq_class(num, den);
        q.canonicalize();
    }
    skip();
    if (i != text.size()) fail(errc::syntax_error, "trailing characters in '" + text + "'");
    if (sign < 0) q = -q;
    return from_mpq(q);
}

std::string Field::spec_string() const {
    switch (kind_) {
        case FieldKind::rationals: return "Q";
        case FieldKind::prime: return "F" + std::to_string(p_);
        case FieldKind::extension: {
            std::ostringstream os;
            os << (base_->is_finite() ? "F" + std::to_string(p_) : std::string("Q")) << "[t]/";
            std::vector<std::string> cs;
            if (base_->is_finite()) {
                for (size_t i = mod_p_.size(); i-- > 0;)
                    cs.push_back(mod_p_[i] == 0 ? "" : std::to_string(mod_p_[i]));
            } else {
                for (size_t i = mod_q_.size(); i-- > 0;) {
                    if (mod_q_[i] == 0) { cs.push_back(""); continue; }
                    std::ostringstream t;
                    t << mod_q_[i];
                    cs.push_back(t.str());
                }
            }
            format_tpoly(os, cs);
            return os.str();
        }
    }
    return "?";
}

FieldPtr Field::parse_spec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) fail(errc::syntax_error, "empty field spec");

    FieldPtr base;
    size_t i = 0;
    if (s[0] == 'Q') {
        base = rationals();
        i = 1;
    } else if (s[0] == 'F') {
        size_t k = 1;
        while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
        if (k == 1) fail(errc::syntax_error, "expected characteristic after F");
        base = prime(std::stoll(s.substr(1, k - 1)));
        i = k;
    } else {
        fail(errc::syntax_error, "field spec must start with Q or F");
    }
    if (i == s.size()) return base;
    if (s.compare(i, 4, "[t]/") != 0)
        fail(errc::syntax_error, "expected [t]/ in field spec");
    i += 4;
    std::string body = s.substr(i);
    // parse modulus: polynomial in t with integer/rational coefficients
    // reuse the element mini-parser by parsing over a scratch big extension is
    // not possible (degree unknown), so parse into a coefficient map directly
    std::vector<mpq_class> coeffs;
    size_t j = 0;
    int sign = 1;
    bool any = false;
    while (j < body.size()) {
        if (body[j] == '+') { sign = 1; ++j; continue; }
        if (body[j] == '-') { sign = -1; ++j; continue; }
        mpq_class coeff(1);
        bool have_coeff = false;
        if (std::isdigit((unsigned char)body[j])) {
            size_t k = j;
            while (k < body.size() && std::isdigit((unsigned char)body[k])) ++k;
            mpz_class num(body.substr(j, k - j));
            j = k;
            if (j < body.size() && body[j] == '/') {
                ++j;
                size_t k2 = j;
                while (k2 < body.size() && std::isdigit((unsigned char)body[k2])) ++k2;
                if (k2 == j) fail(errc::syntax_error, "expected denominator in modulus");
                coeff = mpq_class(num, mpz_class(body.substr(j, k2 - j)));
                coeff.canonicalize();
                j = k2;
            } else {
                coeff = mpq_class(num);
            }
            have_coeff = true;
            if (j < body.size() && body[j] == '*') ++j;
        }
        unsigned e = 0;
        if (j < body.size() && body[j] == 't') {
            ++j;
            e = 1;
            if (j < body.size() && body[j] == '^') {
                ++j;
                size_t k = j;
                while (k < body.size() && std::isdigit((unsigned char)body[k])) ++k;
                if (k == j) fail(errc::syntax_error, "expected exponent in modulus");
                e = unsigned(std::stoul(body.substr(j, k - j)));
                j = k;
            }
        } else if (!have_coeff) {
            fail(errc::syntax_error, "unexpected character in modulus");
        }
        if (coeffs.size() <= e) coeffs.resize(e + 1, mpq_class(0));
        coeffs[e] += sign < 0 ? mpq_class(-coeff) : coeff;
        sign = 1;
        any = true;
    }
    if (!any) fail(errc::syntax_error, "empty modulus");
    std::vector<FieldElem> mod;
    for (const auto& c : coeffs) mod.push_back(base->from_mpq(c));
    return extension(base, mod);
}

// ---------------------------------------------------------------------------
// FieldElem forwarding

bool FieldElem::is_zero() const { return field_->is_zero(*this); }
bool FieldElem::is_one() const { return field_->eq(*this, field_->one()); }
FieldElem FieldElem::operator+(const FieldElem& o) const { return field_->add(*this, o); }
FieldElem FieldElem::operator-(const FieldElem& o) const { return field_->sub(*this, o); }
FieldElem FieldElem::operator*(const FieldElem& o) const { return field_->mul(*this, o); }
FieldElem FieldElem::operator/(const FieldElem& o) const { return field_->mul(*this, field_->inv(o)); }
FieldElem FieldElem::operator-() const { return field_->neg(*this); }
FieldElem FieldElem::inverse() const { return field_->inv(*this); }
bool FieldElem::operator==(const FieldElem& o) const { return field_->eq(*this, o); }
std::string FieldElem::str() const { return field_->format_elem(*this); }

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

} // namespace cuspidal
