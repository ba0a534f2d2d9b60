#include "upoly.hpp"

#include <algorithm>
#include <sstream>

namespace cuspidal {

void UPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UPoly upoly_zero(const FieldPtr& F) { return UPoly{F, {}}; }

UPoly upoly_const(const FieldPtr& F, const FieldElem& a) {
    UPoly r{F, {a}};
    r.normalize();
    return r;
}

UPoly upoly_x(const FieldPtr& F) { return UPoly{F, {F->zero(), F->one()}}; }

UPoly upoly_from(const FieldPtr& F, std::vector<FieldElem> coeffs) {
    UPoly r{F, std::move(coeffs)};
    r.normalize();
    return r;
}

bool upoly_eq(const UPoly& a, const UPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), a.field->zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.normalize();
    return r;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), a.field->zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
    }
    r.normalize();
    return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return upoly_zero(a.field);
    UPoly r{a.field, std::vector<FieldElem>(a.c.size() + b.c.size() - 1, a.field->zero())};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

UPoly upoly_scale(const UPoly& a, const FieldElem& s) {
    if (s.is_zero()) return upoly_zero(a.field);
    UPoly r = a;
    for (auto& x : r.c) x = x * s;
    return r;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(errc::internal, "univariate division by zero");
    UPoly rem = a, q{a.field, {}};
    if (rem.c.size() >= b.c.size())
        q.c.assign(rem.c.size() - b.c.size() + 1, a.field->zero());
    FieldElem linv = b.lead().inverse();
    while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
        FieldElem c = rem.lead() * linv;
        size_t off = rem.c.size() - b.c.size();
        q.c[off] = c;
        for (size_t j = 0; j < b.c.size(); ++j)
            rem.c[off + j] = rem.c[off + j] - c * b.c[j];
        rem.normalize();
    }
    q.normalize();
    return {q, rem};
}

UPoly upoly_rem(const UPoly& a, const UPoly& b) { return upoly_divmod(a, b).second; }

UPoly upoly_monic(const UPoly& a) {
    if (a.is_zero()) return a;
    return upoly_scale(a, a.lead().inverse());
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

UPoly upoly_derivative(const UPoly& a) {
    if (a.c.size() <= 1) return upoly_zero(a.field);
    UPoly r{a.field, std::vector<FieldElem>(a.c.size() - 1, a.field->zero())};
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = a.c[i] * a.field->from_int(std::int64_t(i));
    r.normalize();
    return r;
}

FieldElem upoly_eval(const UPoly& a, const FieldElem& x) {
    FieldElem r = a.field->zero();
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

UPoly upoly_powmod(const UPoly& a, const mpz_class& e, const UPoly& m) {
    UPoly base = upoly_rem(a, m);
    UPoly r = upoly_const(a.field, a.field->one());
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = upoly_rem(upoly_mul(r, base), m);
        base = upoly_rem(upoly_mul(base, base), m);
        k >>= 1;
    }
    return r;
}

UPoly upoly_squarefree_part(const UPoly& a) {
    if (a.is_zero() || a.deg() == 0) return upoly_monic(a);
    std::int64_t p = a.field->characteristic();
    if (p != 0 && p <= a.deg())
        fail(errc::characteristic_too_small,
             "squarefree part needs characteristic 0 or > " + std::to_string(a.deg()));
    UPoly d = upoly_derivative(a);
    if (d.is_zero()) fail(errc::characteristic_too_small, "vanishing derivative");
    UPoly g = upoly_gcd(a, d);
    return upoly_monic(upoly_divmod(a, g).first);
}

bool upoly_is_irreducible(const UPoly& a) {
    if (!a.field->is_finite()) fail(errc::unsupported, "irreducibility test needs a finite field");
    int d = a.deg();
    if (d <= 0) return false;
    if (d == 1) return true;
    const UPoly m = upoly_monic(a);
    const UPoly x = upoly_x(a.field);
    mpz_class q = a.field->size();
    // x^(q^d) == x mod m, and for every prime l | d: gcd(x^(q^(d/l)) - x, m) = 1
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    if (!upoly_eq(upoly_powmod(x, qd, m), upoly_rem(x, m))) return false;
    int dd = d;
    for (int l = 2; l * l <= dd; ++l) {
        if (dd % l) continue;
        while (dd % l == 0) dd /= l;
        mpz_class ql;
        mpz_pow_ui(ql.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d / l));
        UPoly g = upoly_gcd(upoly_sub(upoly_powmod(x, ql, m), x), m);
        if (g.deg() != 0) return false;
    }
    if (dd > 1) {
        mpz_class ql;
        mpz_pow_ui(ql.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d / dd));
        UPoly g = upoly_gcd(upoly_sub(upoly_powmod(x, ql, m), x), m);
        if (g.deg() != 0) return false;
    }
    return true;
}

namespace {

// equal-degree splitting (Cantor-Zassenhaus) of a squarefree product of
// irreducibles all of degree d, over an odd finite field
void equal_degree_split(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
    if (f.deg() == d) {
        out.push_back(upoly_monic(f));
        return;
    }
    const FieldPtr& F = f.field;
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), F->size().get_mpz_t(), static_cast<unsigned long>(d));
    mpz_class e = (qd - 1) / 2;
    while (true) {
        // random polynomial of degree < deg f
        std::vector<FieldElem> rc;
        for (int i = 0; i < f.deg(); ++i) rc.push_back(F->random_elem(rng));
        UPoly r = upoly_from(F, std::move(rc));
        if (r.deg() < 1) continue;
        UPoly g = upoly_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(upoly_divmod(f, g).first, d, rng, out);
            return;
        }
        UPoly h = upoly_powmod(r, e, f);
        h = upoly_sub(h, upoly_const(F, F->one()));
        g = upoly_gcd(h, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(upoly_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<UPoly, int>> upoly_factor(const UPoly& a, std::uint64_t seed) {
    if (!a.field->is_finite() || a.field->characteristic() == 2)
        fail(errc::unsupported, "factorization implemented for odd finite fields");
    std::vector<std::pair<UPoly, int>> out;
    if (a.deg() <= 0) return out;
    const FieldPtr& F = a.field;
    std::mt19937_64 rng(seed ^ 0xfac70eULL);

    // squarefree decomposition; requires characteristic > degree so the
    // derivative of any nonconstant factor is nonzero
    std::int64_t p = F->characteristic();
    if (p <= a.deg())
        fail(errc::characteristic_too_small,
             "factorization needs characteristic > " + std::to_string(a.deg()));
    UPoly f = upoly_monic(a);
    std::vector<std::pair<UPoly, int>> squarefree_parts; // (product of primes with mult m, m)
    UPoly g = upoly_gcd(f, upoly_derivative(f)); // prod p^(e-1)
    UPoly w = upoly_divmod(f, g).first;          // prod p
    for (int m = 1; w.deg() > 0; ++m) {
        UPoly y = upoly_gcd(w, g);                   // primes with mult > m
        UPoly part = upoly_divmod(w, y).first;       // primes with mult exactly m
        if (part.deg() > 0) squarefree_parts.push_back({part, m});
        w = y;
        g = upoly_divmod(g, y).first;
    }

    // distinct-degree then equal-degree splitting of each squarefree part
    const UPoly x = upoly_x(F);
    for (auto& [part, mult] : squarefree_parts) {
        UPoly rest = part;
        UPoly xq = upoly_rem(x, rest);
        for (int d = 1; rest.deg() > 0 && d <= rest.deg(); ++d) {
            xq = upoly_powmod(xq, F->size(), rest);
            if (2 * d > rest.deg()) break;
            UPoly g = upoly_gcd(upoly_sub(xq, x), rest);
            if (g.deg() > 0) {
                std::vector<UPoly> irr;
                equal_degree_split(g, d, rng, irr);
                for (auto& h : irr) out.push_back({h, mult});
                rest = upoly_divmod(rest, g).first;
                xq = upoly_rem(xq, rest);
            }
        }
        if (rest.deg() > 0) out.push_back({upoly_monic(rest), mult});
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.first.deg() != r.first.deg()) return l.first.deg() < r.first.deg();
        for (size_t i = l.first.c.size(); i-- > 0;) {
            int c = Field::cmp_canonical(l.first.c[i], r.first.c[i]);
            if (c != 0) return c < 0;
        }
        return l.second < r.second;
    });
    return out;
}

std::string upoly_str(const UPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = a.c[i].str();
        if (i == 0) { os << cs; continue; }
        if (cs != "1") os << cs << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace cuspidal
