#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

#include "linalg.hpp"

namespace cuspidal {

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    return Monomial{{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]), std::max(a.e[2], b.e[2])}};
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    return (a.e[0] == 0 || b.e[0] == 0) && (a.e[1] == 0 || b.e[1] == 0) &&
           (a.e[2] == 0 || b.e[2] == 0);
}

static int cmp_grevlex(const Monomial& a, const Monomial& b) {
    unsigned da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    // ties: smaller exponent in the least variable (w, then v) wins
    for (int i = 2; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

int cmp_mono(Order ord, const Monomial& a, const Monomial& b) {
    switch (ord) {
        case Order::grevlex: return cmp_grevlex(a, b);
        case Order::elim_u:
            if (a.e[0] != b.e[0]) return a.e[0] < b.e[0] ? -1 : 1;
            return cmp_grevlex(a, b);
        case Order::elim_v:
            if (a.e[1] != b.e[1]) return a.e[1] < b.e[1] ? -1 : 1;
            return cmp_grevlex(a, b);
        case Order::elim_w:
            if (a.e[2] != b.e[2]) return a.e[2] < b.e[2] ? -1 : 1;
            return cmp_grevlex(a, b);
    }
    return 0;
}

// ---------------------------------------------------------------------------

Poly::Poly(FieldPtr f, std::vector<Term> terms) : field_(std::move(f)), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_grevlex(a.m, b.m) > 0; });
    // combine duplicates
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
    }
    terms_ = std::move(out);
    normalize_sorted();
}

void Poly::normalize_sorted() {
    std::erase_if(terms_, [](const Term& t) { return t.c.is_zero(); });
}

Poly Poly::constant(const FieldPtr& f, const FieldElem& c) {
    Poly p(f);
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

Poly Poly::variable(const FieldPtr& f, int var, unsigned power) {
    Poly p(f);
    Monomial m;
    m.e[var] = power;
    p.terms_.push_back({m, f->one()});
    return p;
}

Poly Poly::monomial(const FieldPtr& f, const Monomial& m, const FieldElem& c) {
    Poly p(f);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.m.deg()));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().m.deg();
    for (const auto& t : terms_)
        if (t.m.deg() != d) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_grevlex(terms_[i].m, o.terms_[j].m);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            FieldElem s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const FieldElem& s) const {
    if (s.is_zero()) return Poly(field_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c = t.c * s;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const FieldElem& c) const {
    if (c.is_zero()) return Poly(field_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.m = t.m * m;
        t.c = t.c * c;
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::map<std::uint64_t, std::pair<Monomial, FieldElem>> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.m * b.m;
            auto key = m.pack();
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, std::make_pair(m, a.c * b.c));
            else
                it->second.second = it->second.second + a.c * b.c;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [k, mc] : acc) ts.push_back({mc.first, std::move(mc.second)});
    return Poly(field_, std::move(ts));
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::constant(field_, field_->one());
    Poly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || !(terms_[i].c == o.terms_[i].c)) return false;
    return true;
}

FieldElem Poly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return field_->zero();
}

const Term& Poly::leading_term(Order ord) const {
    if (terms_.empty()) fail(errc::internal, "leading term of zero polynomial");
    if (ord == Order::grevlex) return terms_.front();
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (cmp_mono(ord, terms_[i].m, terms_[best].m) > 0) best = i;
    return terms_[best];
}

Poly Poly::partial(int var) const {
    Poly r(field_);
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        FieldElem c = t.c * field_->from_int(t.m.e[var]);
        if (c.is_zero()) continue;
        Monomial m = t.m;
        m.e[var] -= 1;
        r.terms_.push_back({m, std::move(c)});
    }
    return Poly(field_, std::move(r.terms_));
}

Poly Poly::substitute(const std::array<Poly, 3>& gs) const {
    std::array<unsigned, 3> maxe{0, 0, 0};
    for (const auto& t : terms_)
        for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], t.m.e[i]);
    std::array<std::vector<Poly>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].push_back(Poly::constant(field_, field_->one()));
        for (unsigned k = 1; k <= maxe[i]; ++k) pows[i].push_back(pows[i][k - 1] * gs[i]);
    }
    Poly r(field_);
    for (const auto& t : terms_) {
        Poly term = pows[0][t.m.e[0]] * pows[1][t.m.e[1]] * pows[2][t.m.e[2]];
        r = r + term.scaled(t.c);
    }
    return r;
}

FieldElem Poly::eval(const std::array<FieldElem, 3>& pt, const FieldPtr& K) const {
    const bool same = Field::same(field_.get(), K.get());
    std::array<unsigned, 3> maxe{0, 0, 0};
    for (const auto& t : terms_)
        for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], t.m.e[i]);
    std::array<std::vector<FieldElem>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].push_back(K->one());
        for (unsigned k = 1; k <= maxe[i]; ++k) pows[i].push_back(pows[i][k - 1] * pt[i]);
    }
    FieldElem acc = K->zero();
    for (const auto& t : terms_) {
        FieldElem c = same ? t.c : K->embed(t.c);
        acc = acc + c * pows[0][t.m.e[0]] * pows[1][t.m.e[1]] * pows[2][t.m.e[2]];
    }
    return acc;
}

Poly Poly::graded_part(unsigned d) const {
    Poly r(field_);
    for (const auto& t : terms_)
        if (t.m.deg() == d) r.terms_.push_back(t);
    return r;
}

Poly Poly::dehomogenize(int var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        Monomial m = t.m;
        m.e[var] = 0;
        ts.push_back({m, t.c});
    }
    return Poly(field_, std::move(ts));
}

Poly Poly::homogenize(int var, int d) const {
    if (is_zero()) return *this;
    int target = d < 0 ? degree() : d;
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        if (int(t.m.deg()) > target) fail(errc::internal, "homogenize: degree exceeds target");
        Monomial m = t.m;
        m.e[var] += unsigned(target - int(t.m.deg()));
        ts.push_back({m, t.c});
    }
    return Poly(field_, std::move(ts));
}

// ---------------------------------------------------------------------------
// printing / parsing

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = field_->format_elem(t.c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
        } else {
            os << (neg ? "-" : "+");
            if (neg) cs = cs.substr(1);
        }
        bool has_vars = t.m.deg() > 0;
        if (!has_vars) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "*";
        const char* names = "uvw";
        bool firstv = true;
        for (int i = 0; i < 3; ++i) {
            if (t.m.e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly Poly::parse(const std::string& text, const FieldPtr& f) {
    size_t i = 0;
    auto err = [&](const std::string& msg) {
        fail(errc::syntax_error, msg + " at position " + std::to_string(i));
    };
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    std::vector<Term> terms;
    skip();
    if (i >= text.size()) err("empty polynomial");
    bool expect_term = true;
    int sign = 1;
    while (true) {
        skip();
        if (i >= text.size()) {
            if (expect_term) err("dangling sign");
            break;
        }
        char ch = text[i];
        if (!expect_term) {
            if (ch == '+') { sign = 1; ++i; expect_term = true; continue; }
            if (ch == '-') { sign = -1; ++i; expect_term = true; continue; }
            err("expected '+' or '-'");
        }
        if (ch == '+') { ++i; continue; }
        if (ch == '-') { sign = -sign; ++i; continue; }

        FieldElem coeff = f->one();
        bool have_coeff = false;
        if (std::isdigit((unsigned char)ch)) {
            size_t k = i;
            while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
            std::string num = text.substr(i, k - i);
            i = k;
            skip();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skip();
                size_t k2 = i;
                while (k2 < text.size() && std::isdigit((unsigned char)text[k2])) ++k2;
                if (k2 == i) err("expected denominator");
                mpq_class q{mpz_class(num), mpz_class(text.substr(i, k2 - i))};
                q.canonicalize();
                i = k2;
                coeff = f->from_mpq(q);
            } else {
                coeff = f->from_mpq(mpq_class(mpz_class(num)));
            }
            have_coeff = true;
        } else if (ch == '[') {
            size_t close = text.find(']', i);
            if (close == std::string::npos) err("missing ']'");
            coeff = f->parse_elem(text.substr(i, close - i + 1));
            i = close + 1;
            have_coeff = true;
        }

        Monomial m;
        bool have_var = false;
        while (true) {
            skip();
            size_t save = i;
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
            if (i < text.size() && (text[i] == 'u' || text[i] == 'v' || text[i] == 'w')) {
                int var = text[i] == 'u' ? 0 : text[i] == 'v' ? 1 : 2;
                ++i;
                unsigned e = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    size_t k = i;
                    while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
                    if (k == i) err("expected exponent");
                    unsigned long val = std::stoul(text.substr(i, k - i));
                    if (val > 1000000) err("exponent too large");
                    e = unsigned(val);
                    i = k;
                }
                m.e[var] += e;
                have_var = true;
            } else {
                i = save;
                break;
            }
        }
        if (!have_coeff && !have_var) err("expected a term");
        if (sign < 0) coeff = -coeff;
        terms.push_back({m, coeff});
        sign = 1;
        expect_term = false;
    }
    return Poly(f, std::move(terms));
}

// ---------------------------------------------------------------------------

std::int64_t graded_dim(int d) {
    if (d < 0) return 0;
    return std::int64_t(d + 1) * (d + 2) / 2;
}

std::vector<Monomial> monomials_of_degree(unsigned d) {
    std::vector<Monomial> out;
    out.reserve(size_t(graded_dim(int(d))));
    for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; b <= d - a; ++b)
            out.push_back(Monomial{{a, b, d - a - b}});
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return cmp_grevlex(x, y) > 0; });
    return out;
}

bool is_scalar_multiple(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    if (ft.size() != gt.size()) return false;
    FieldElem ratio = ft[0].c / gt[0].c;
    for (size_t i = 0; i < ft.size(); ++i) {
        if (!(ft[i].m == gt[i].m)) return false;
        if (!(ft[i].c == gt[i].c * ratio)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

FieldElem det3(const std::array<std::array<FieldElem, 3>, 3>& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

std::array<std::array<FieldElem, 3>, 3> inv3(const std::array<std::array<FieldElem, 3>, 3>& M,
                                             const FieldPtr& F) {
    FieldElem d = det3(M);
    if (d.is_zero()) fail(errc::dependent_lines, "matrix is singular");
    FieldElem di = d.inverse();
    std::array<std::array<FieldElem, 3>, 3> A{{{F->zero(), F->zero(), F->zero()},
                                               {F->zero(), F->zero(), F->zero()},
                                               {F->zero(), F->zero(), F->zero()}}};
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        if (r1 > r2) std::swap(r1, r2);
        if (c1 > c2) std::swap(c1, c2);
        FieldElem minor = M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1];
        return ((r + c) % 2 == 0) ? minor : -minor;
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) A[c][r] = cof(r, c) * di; // adjugate transpose
    return A;
}

} // namespace

LinearTriple::LinearTriple(Poly l1, Poly l2, Poly l3) : lines_{std::move(l1), std::move(l2), std::move(l3)} {
    for (const auto& l : lines_) {
        if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous())
            fail(errc::dependent_lines, "expected nonzero linear forms");
    }
    if (det3(coefficient_matrix()).is_zero())
        fail(errc::dependent_lines, "the three lines are linearly dependent");
}

std::array<std::array<FieldElem, 3>, 3> LinearTriple::coefficient_matrix() const {
    const FieldPtr& F = lines_[0].field();
    std::array<std::array<FieldElem, 3>, 3> M{{{F->zero(), F->zero(), F->zero()},
                                               {F->zero(), F->zero(), F->zero()},
                                               {F->zero(), F->zero(), F->zero()}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Monomial m;
            m.e[j] = 1;
            M[i][j] = lines_[i].coeff(m);
        }
    return M;
}

std::array<std::array<FieldElem, 3>, 3> LinearTriple::inverse_matrix() const {
    return inv3(coefficient_matrix(), lines_[0].field());
}

JacobianGens jacobian_generators(const Poly& f) {
    if (!f.is_homogeneous()) fail(errc::not_homogeneous, "jacobian ideal needs a homogeneous input");
    JacobianGens out;
    out.gens.push_back(f);
    for (int i = 0; i < 3; ++i) out.gens.push_back(f.partial(i));
    const FieldPtr& F = f.field();
    out.euler_redundant = !F->from_int(std::max(f.degree(), 0)).is_zero();
    return out;
}

Poly kummer_order2_pullback(const Poly& f, const LinearTriple& lines) {
    if (!f.is_homogeneous()) fail(errc::not_homogeneous, "pullback needs a homogeneous input");
    const FieldPtr& F = f.field();
    auto B = lines.inverse_matrix();
    std::array<Poly, 3> gs;
    for (int i = 0; i < 3; ++i) {
        Poly g(F);
        for (int j = 0; j < 3; ++j)
            g = g + Poly::variable(F, j, 2).scaled(B[i][j]);
        gs[i] = g;
    }
    return f.substitute(gs);
}

std::array<Poly, 3> base_change_forms(const FieldPtr& F, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xba5ecafeULL);
    auto monos = monomials_of_degree(unsigned(d));
    std::array<Poly, 3> out{Poly(F), Poly(F), Poly(F)};
    for (int i = 0; i < 3; ++i) {
        std::vector<Term> ts;
        bool nonzero = false;
        while (!nonzero) {
            ts.clear();
            for (const auto& m : monos) {
                FieldElem c = F->random_elem(rng);
                if (!c.is_zero()) nonzero = true;
                ts.push_back({m, c});
            }
        }
        out[i] = Poly(F, std::move(ts));
    }
    return out;
}

Poly base_change(const Poly& f, int d, std::uint64_t seed) {
    if (d < 1) fail(errc::internal, "base change needs d >= 1");
    return f.substitute(base_change_forms(f.field(), d, seed));
}

Poly linear_change(const Poly& f, const std::array<std::array<FieldElem, 3>, 3>& M) {
    const FieldPtr& F = f.field();
    std::array<Poly, 3> gs;
    for (int i = 0; i < 3; ++i) {
        Poly g(F);
        for (int j = 0; j < 3; ++j) g = g + Poly::variable(F, j).scaled(M[i][j]);
        gs[i] = g;
    }
    return f.substitute(gs);
}

std::pair<std::array<std::array<FieldElem, 3>, 3>, std::array<std::array<FieldElem, 3>, 3>>
random_invertible_matrix(const FieldPtr& F, std::mt19937_64& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::array<std::array<FieldElem, 3>, 3> M{{{F->zero(), F->zero(), F->zero()},
                                                   {F->zero(), F->zero(), F->zero()},
                                                   {F->zero(), F->zero(), F->zero()}}};
        for (auto& row : M)
            for (auto& x : row) x = F->random_elem(rng);
        if (!det3(M).is_zero()) return {M, inv3(M, F)};
    }
    fail(errc::internal, "could not draw an invertible matrix");
}

// ---------------------------------------------------------------------------
// binary forms

Poly embed_poly(const Poly& f, const FieldPtr& K) {
    if (Field::same(f.field().get(), K.get())) return f;
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.m, K->embed(t.c)});
    return Poly(K, std::move(ts));
}

std::vector<FieldElem> restrict_to_line(const Poly& f, const std::array<FieldElem, 3>& P,
                                        const std::array<FieldElem, 3>& Q, const FieldPtr& K) {
    Poly fk = embed_poly(f, K);
    std::array<Poly, 3> gs;
    for (int i = 0; i < 3; ++i)
        gs[i] = Poly::variable(K, 0).scaled(P[i]) + Poly::variable(K, 1).scaled(Q[i]);
    Poly g = fk.substitute(gs);
    int d = f.degree();
    std::vector<FieldElem> out(size_t(d + 1), K->zero());
    for (const auto& t : g.terms()) out[t.m.e[0]] = t.c;
    return out;
}

int binform_degree(const std::vector<FieldElem>& A) {
    for (const auto& c : A)
        if (!c.is_zero()) return int(A.size()) - 1;
    return -1;
}

namespace {

// strips s^va t^vt; returns (va, vt, univariate in s of the stripped form)
std::tuple<int, int, UPoly> binform_split(const FieldPtr& K, const std::vector<FieldElem>& A) {
    int lo = -1, hi = -1;
    for (int i = 0; i < int(A.size()); ++i)
        if (!A[i].is_zero()) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo < 0) return {0, 0, upoly_zero(K)};
    int d = int(A.size()) - 1;
    std::vector<FieldElem> c(A.begin() + lo, A.begin() + hi + 1);
    return {lo, d - hi, upoly_from(K, std::move(c))};
}

} // namespace

std::vector<FieldElem> binform_gcd(const FieldPtr& K, std::vector<FieldElem> A,
                                   std::vector<FieldElem> B) {
    auto [sa, ta, ua] = binform_split(K, A);
    auto [sb, tb, ub] = binform_split(K, B);
    if (ua.is_zero()) return B;
    if (ub.is_zero()) return A;
    UPoly g = upoly_gcd(ua, ub);
    int s_pow = std::min(sa, sb), t_pow = std::min(ta, tb);
    int dg = g.deg();
    std::vector<FieldElem> out(size_t(s_pow + dg + t_pow + 1), K->zero());
    for (int i = 0; i <= dg; ++i) out[size_t(s_pow + i)] = g.c[i];
    return out;
}

bool binform_is_squarefree(const FieldPtr& K, const std::vector<FieldElem>& A) {
    auto [sa, ta, ua] = binform_split(K, A);
    if (ua.is_zero()) return false;
    if (sa > 1 || ta > 1) return false;
    if (ua.deg() == 0) return true;
    UPoly g = upoly_gcd(ua, upoly_derivative(ua));
    return g.deg() == 0;
}

} // namespace cuspidal
