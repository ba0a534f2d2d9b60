#include "singular.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"

namespace cuspidal {

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[" << coords[0].str() << ":" << coords[1].str() << ":" << coords[2].str() << "]";
    return os.str();
}

ProjPoint make_point(const FieldPtr& K, std::array<FieldElem, 3> coords, int ext_degree) {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!coords[i].is_zero()) { last = i; break; }
    if (last < 0) fail(errc::internal, "zero vector is not a projective point");
    FieldElem inv = coords[last].inverse();
    for (auto& c : coords) c = c * inv;
    return ProjPoint{K, std::move(coords), ext_degree};
}

const char* sing_type_name(SingType t) {
    switch (t) {
        case SingType::A1: return "A1";
        case SingType::A2: return "A2";
        case SingType::other: return "other";
    }
    return "?";
}

CuspLocus singular_locus(const Poly& f, std::uint64_t seed) {
    const FieldPtr& F = f.field();
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
        fail(errc::not_homogeneous, "curve must be a nonzero homogeneous form");

    auto jg = jacobian_generators(f);
    IdealBasis J(F, jg.gens);
    if (!proj_zero_dimensional(J)) {
        // distinguish a non-reduced curve from a singular component
        std::mt19937_64 rng(seed ^ 0x11e5ULL);
        bool reduced = false;
        for (int attempt = 0; attempt < 8 && !reduced; ++attempt) {
            std::array<FieldElem, 3> P{F->random_elem(rng), F->random_elem(rng), F->random_elem(rng)};
            std::array<FieldElem, 3> Q{F->random_elem(rng), F->random_elem(rng), F->random_elem(rng)};
            bool pz = P[0].is_zero() && P[1].is_zero() && P[2].is_zero();
            bool qz = Q[0].is_zero() && Q[1].is_zero() && Q[2].is_zero();
            if (pz || qz) continue;
            auto bf = restrict_to_line(f, P, Q, F);
            if (binform_degree(bf) < 0) continue; // line inside the curve
            if (binform_is_squarefree(F, bf)) reduced = true;
        }
        if (!reduced)
            fail(errc::non_reduced_curve, "curve has a repeated component");
        fail(errc::not_zero_dimensional, "curve has a singular component");
    }

    CuspLocus out{f, radical_zero_dim(J, seed), 0, {}, -1};
    out.count = scheme_length(out.ideal);
    return out;
}

// ---------------------------------------------------------------------------
// point solving

std::vector<ProjPoint> solve_points(const IdealBasis& I, int max_ext_degree, std::uint64_t seed) {
    const FieldPtr& F = I.field();
    if (!F->is_finite() || F->kind() != FieldKind::prime)
        fail(errc::unsupported, "point solving runs over prime fields");
    if (!proj_zero_dimensional(I))
        fail(errc::not_zero_dimensional, "cannot solve a positive-dimensional locus");

    std::mt19937_64 rng(seed ^ 0x501eULL);
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::array<std::array<FieldElem, 3>, 3> M, Minv;
        if (attempt == 0) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    M[i][j] = i == j ? F->one() : F->zero();
                    Minv[i][j] = M[i][j];
                }
        } else {
            std::tie(M, Minv) = random_invertible_matrix(F, rng);
        }
        std::vector<Poly> moved;
        for (const auto& g : I.generators()) moved.push_back(linear_change(g, M));
        IdealBasis J(F, moved, Order::grevlex);

        // chart test: nothing on the line w = 0
        std::vector<FieldElem> common;
        bool first = true;
        for (const auto& g : J.reduced_gb()) {
            int d = g.degree();
            std::vector<FieldElem> bf(size_t(d + 1), F->zero());
            for (const auto& t : g.terms())
                if (t.m.e[2] == 0) bf[t.m.e[0]] = t.c;
            common = first ? bf : binform_gcd(F, common, bf);
            first = false;
            if (binform_degree(common) == 0) break;
        }
        if (first || binform_degree(common) != 0) continue;

        std::vector<Poly> aff;
        for (const auto& g : J.reduced_gb()) aff.push_back(g.dehomogenize(2));
        IdealBasis A(F, aff, Order::elim_v);
        if (A.is_one()) return {};
        const auto& gb = A.reduced_gb();
        // shape position: { p(u), v - r(u) }
        if (gb.size() != 2) continue;
        auto univariate_in_u = [&](const Poly& g) {
            for (const auto& t : g.terms())
                if (t.m.e[1] != 0 || t.m.e[2] != 0) return false;
            return true;
        };
        if (!univariate_in_u(gb[0])) continue;
        Monomial mv;
        mv.e[1] = 1;
        Poly rest = gb[1] - Poly::monomial(F, mv, gb[1].coeff(mv));
        if (!gb[1].coeff(mv).is_one() || !univariate_in_u(rest)) continue;

        std::vector<FieldElem> pc(size_t(gb[0].degree() + 1), F->zero());
        for (const auto& t : gb[0].terms()) pc[t.m.e[0]] = t.c;
        UPoly p = upoly_from(F, std::move(pc));
        UPoly dp = upoly_derivative(p);
        if (upoly_gcd(p, dp).deg() != 0) {
            if (attempt >= 20)
                fail(errc::not_radical, "eliminant stayed non-squarefree across charts");
            continue;
        }
        std::vector<FieldElem> rc(size_t(std::max(rest.degree(), 0) + 1), F->zero());
        for (const auto& t : rest.terms()) rc[t.m.e[0]] = t.c;
        UPoly r = upoly_from(F, std::move(rc));
        r = upoly_scale(r, -F->one()); // v = -rest

        std::vector<ProjPoint> out;
        for (const auto& [q, mult] : upoly_factor(p, seed)) {
            if (mult != 1) fail(errc::not_radical, "repeated eliminant factor");
            int e = q.deg();
            if (e > max_ext_degree) continue;
            FieldPtr K;
            FieldElem x0 = F->zero();
            if (e == 1) {
                K = F;
                x0 = -q.c[0];
            } else {
                std::vector<FieldElem> mod(q.c.begin(), q.c.end());
                K = Field::extension(F, mod);
                x0 = K->gen();
            }
            // evaluate r at x0 over K
            FieldElem y0 = K->zero();
            for (size_t i = r.c.size(); i-- > 0;) y0 = y0 * x0 + K->embed(r.c[i]);
            std::array<FieldElem, 3> chart{x0, y0, K->one()};
            std::array<FieldElem, 3> orig{K->zero(), K->zero(), K->zero()};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) orig[i] = orig[i] + K->embed(M[i][j]) * chart[j];
            ProjPoint pt = make_point(K, std::move(orig), e);
            for (const auto& g : I.generators())
                if (!g.eval(pt.coords, K).is_zero())
                    fail(errc::internal, "solved point misses the ideal");
            out.push_back(std::move(pt));
        }
        std::sort(out.begin(), out.end(), [](const ProjPoint& a, const ProjPoint& b) {
            if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
            return a.str() < b.str();
        });
        return out;
    }
    fail(errc::not_radical, "no chart reached shape position");
}

// ---------------------------------------------------------------------------
// local classification

namespace {

// total vector-space dimension of k[x,y]/T for a zero-dimensional affine
// ideal T (std monomials of every degree)
std::int64_t affine_colength(const IdealBasis& T, int degree_cap) {
    std::int64_t total = 0;
    for (int d = 0; d <= degree_cap; ++d) {
        std::int64_t cnt = 0;
        for (unsigned a = 0; a + 0 <= unsigned(d); ++a) {
            Monomial m{{a, unsigned(d) - a, 0}};
            if (!T.lead_divides(m)) ++cnt;
        }
        total += cnt;
    }
    return total;
}

std::int64_t local_tjurina_at_origin(const Poly& local, const FieldPtr& K) {
    // length of K[x,y]/(F, F_x, F_y) at the origin: cut off the other points
    // with a power of the maximal ideal and wait for stabilization
    std::vector<Poly> base{local, local.partial(0), local.partial(1)};
    std::int64_t prev = -1;
    for (int M = 3; M <= 24; ++M) {
        std::vector<Poly> gens = base;
        for (int a = 0; a <= M; ++a) {
            Monomial m{{unsigned(a), unsigned(M - a), 0}};
            gens.push_back(Poly::monomial(K, m, K->one()));
        }
        IdealBasis T(K, gens);
        std::int64_t len = affine_colength(T, M);
        if (len == prev) return len;
        prev = len;
    }
    fail(errc::resource_exhausted, "local Tjurina length did not stabilize");
}

} // namespace

SingularityReport classify_singularity(const Poly& f, const ProjPoint& pt) {
    const FieldPtr& K = pt.field;
    Poly fk = embed_poly(f, K);
    if (!fk.eval(pt.coords, K).is_zero())
        fail(errc::point_not_on_curve, "point does not lie on the curve at " + pt.str());

    int chart = -1;
    for (int i = 2; i >= 0; --i)
        if (pt.coords[i].is_one()) { chart = i; break; }
    if (chart < 0) fail(errc::internal, "unnormalized point");
    int a = (chart + 1) % 3, b = (chart + 2) % 3;
    if (a > b) std::swap(a, b);

    // local expansion: substitute chart coordinates centered at the point,
    // with local variables in the u- and v-slots
    std::array<Poly, 3> gs;
    gs[chart] = Poly::constant(K, K->one());
    gs[a] = Poly::constant(K, pt.coords[a]) + Poly::variable(K, 0);
    gs[b] = Poly::constant(K, pt.coords[b]) + Poly::variable(K, 1);
    Poly local = fk.substitute(gs);

    if (!local.graded_part(0).is_zero()) fail(errc::internal, "constant term survived");
    if (!local.graded_part(1).is_zero())
        fail(errc::smooth_point, "gradient does not vanish at " + pt.str());
    Poly f2 = local.graded_part(2), f3 = local.graded_part(3);

    auto binform_of = [&](const Poly& g, int deg) {
        std::vector<FieldElem> c(size_t(deg + 1), K->zero());
        for (const auto& t : g.terms()) c[t.m.e[0]] = t.c;
        return c;
    };

    SingularityReport rep{pt, SingType::other, -1};
    if (!f2.is_zero()) {
        Monomial mxx{{2, 0, 0}}, mxy{{1, 1, 0}}, myy{{0, 2, 0}};
        FieldElem A = f2.coeff(mxx), B = f2.coeff(mxy), C = f2.coeff(myy);
        FieldElem disc = B * B - K->from_int(4) * A * C;
        if (!disc.is_zero()) {
            rep.type = SingType::A1;
            rep.local_tjurina = 1;
            return rep;
        }
        auto g = binform_gcd(K, binform_of(f2, 2), binform_of(f3, 3));
        if (binform_degree(g) == 0 && !f3.is_zero()) {
            rep.type = SingType::A2;
            rep.local_tjurina = 2;
            return rep;
        }
    }
    rep.type = SingType::other;
    rep.local_tjurina = local_tjurina_at_origin(local, K);
    return rep;
}

CuspLocus assert_only_cusps(const Poly& f, int max_ext_degree, std::uint64_t seed) {
    CuspLocus locus = singular_locus(f, seed);
    auto jg = jacobian_generators(f);
    IdealBasis J(f.field(), jg.gens);
    locus.tjurina_total = scheme_length(saturate_irrelevant(J, seed));

    auto points = solve_points(locus.ideal, max_ext_degree, seed);
    std::int64_t degree_sum = 0;
    for (const auto& pt : points) degree_sum += pt.ext_degree;
    if (degree_sum != locus.count)
        fail(errc::resource_exhausted,
             "points of residue degree above the bound remain unresolved (sum " +
                 std::to_string(degree_sum) + " of " + std::to_string(locus.count) + ")");

    for (const auto& pt : points) {
        SingularityReport rep = classify_singularity(f, pt);
        if (rep.type != SingType::A2)
            fail(errc::non_cusp_singularity,
                 std::string("point ") + pt.str() + " classifies as " + sing_type_name(rep.type));
        locus.reports.push_back(std::move(rep));
    }
    if (locus.tjurina_total != 2 * locus.count)
        fail(errc::non_cusp_singularity,
             "global Tjurina number " + std::to_string(locus.tjurina_total) +
                 " differs from twice the cusp count");
    return locus;
}

// ---------------------------------------------------------------------------
// brute-force oracle

std::vector<ProjPoint> scan_rational_singular_points(const Poly& f) {
    const FieldPtr& F = f.field();
    if (F->kind() != FieldKind::prime)
        fail(errc::unsupported, "scan oracle runs over prime fields");
    const std::int64_t p = F->characteristic();

    auto jg = jacobian_generators(f);
    struct FastPoly {
        std::vector<std::array<unsigned, 3>> exps;
        std::vector<std::int64_t> coeffs;
    };
    std::vector<FastPoly> polys;
    unsigned maxe = 0;
    for (const auto& g : jg.gens) {
        FastPoly fp;
        for (const auto& t : g.terms()) {
            fp.exps.push_back({t.m.e[0], t.m.e[1], t.m.e[2]});
            fp.coeffs.push_back(std::get<PrimeRep>(t.c.rep()));
            maxe = std::max({maxe, t.m.e[0], t.m.e[1], t.m.e[2]});
        }
        polys.push_back(std::move(fp));
    }
    // power tables
    std::vector<std::vector<std::int64_t>> pw(size_t(p), std::vector<std::int64_t>(maxe + 1, 1));
    for (std::int64_t x = 0; x < p; ++x)
        for (unsigned e = 1; e <= maxe; ++e) pw[size_t(x)][e] = pw[size_t(x)][e - 1] * x % p;

    auto vanish_all = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        for (const auto& fp : polys) {
            std::int64_t acc = 0;
            for (size_t i = 0; i < fp.coeffs.size(); ++i) {
                const auto& e = fp.exps[i];
                acc = (acc + fp.coeffs[i] * (pw[size_t(x)][e[0]] * pw[size_t(y)][e[1]] % p) % p *
                              pw[size_t(z)][e[2]]) % p;
            }
            if (acc % p != 0) return false;
        }
        return true;
    };

    std::vector<ProjPoint> out;
    auto push = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        out.push_back(make_point(F, {F->from_int(x), F->from_int(y), F->from_int(z)}, 1));
    };
    // charts [x:y:1], [x:1:0], [1:0:0]
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y)
            if (vanish_all(x, y, 1)) push(x, y, 1);
    for (std::int64_t x = 0; x < p; ++x)
        if (vanish_all(x, 1, 0)) push(x, 1, 0);
    if (vanish_all(1, 0, 0)) push(1, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const ProjPoint& a, const ProjPoint& b) { return a.str() < b.str(); });
    return out;
}

} // namespace cuspidal
