#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poly.hpp"

using namespace cuspidal;

namespace {

FieldPtr F457() { return Field::prime(457); }

Poly P(const std::string& s, const FieldPtr& f) { return Poly::parse(s, f); }

Poly random_poly(const FieldPtr& f, int deg, std::mt19937_64& rng) {
    std::vector<Term> ts;
    for (const auto& m : monomials_of_degree(unsigned(deg)))
        ts.push_back({m, f->random_elem(rng)});
    return Poly(f, std::move(ts));
}

} // namespace

TEST_CASE("parsing and formatting round trip") {
    auto F = F457();
    auto f = P("u^3+v^3+w^3", F);
    CHECK(f.degree() == 3);
    CHECK(f.term_count() == 3);
    CHECK(f.is_homogeneous());
    CHECK(Poly::parse(f.str(), F) == f);

    auto z = P("0", F);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.str() == "0");

    auto g = P("409*u^8*v^2*w^2 + 32*u^6*v^2*w^4", F);
    CHECK(g.term_count() == 2);
    CHECK(g.degree() == 12);
    CHECK(Poly::parse(g.str(), F) == g);

    // implicit '*' and repeated variables
    CHECK(P("2u v", F) == P("2*u*v", F));
    CHECK(P("u*u", F) == P("u^2", F));
    CHECK(P("u-u", F).is_zero());

    // syntax errors carry a position
    try {
        Poly::parse("u^", F);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }

    // bracketed coefficients only make sense over extensions
    CHECK_THROWS_AS(Poly::parse("[t+1]*u", F), error);
    auto F9 = Field::parse_spec("F3[t]/t^2+1");
    auto h = P("[t+1]*u^2-[t]*v*w", F9);
    CHECK(Poly::parse(h.str(), F9) == h);
}

TEST_CASE("rationals coefficients") {
    auto Q = Field::rationals();
    auto f = P("1/2*u^2-3/4*v*w+2", Q);
    CHECK(Poly::parse(f.str(), Q) == f);
    CHECK(f.coeff(Monomial{{2, 0, 0}}) == Q->from_mpq(mpq_class(1, 2)));
}

TEST_CASE("ring axioms on random polynomials") {
    auto F = F457();
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        Poly f = random_poly(F, 2, rng), g = random_poly(F, 3, rng), h = random_poly(F, 2, rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h.pow(1)) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("homogeneity and degrees under operations") {
    auto F = F457();
    std::mt19937_64 rng(9);
    for (int it = 0; it < 20; ++it) {
        Poly f = random_poly(F, 3, rng), g = random_poly(F, 4, rng);
        CHECK(f.is_homogeneous());
        CHECK((f * g).is_homogeneous());
        CHECK((f * g).degree() == 7);
        for (int v = 0; v < 3; ++v) {
            Poly d = f.partial(v);
            if (!d.is_zero()) CHECK(d.degree() == 2);
        }
    }
}

TEST_CASE("graded dimension formula") {
    CHECK(graded_dim(7) == 36);
    CHECK(graded_dim(0) == 1);
    CHECK(graded_dim(11) == 78);
    CHECK(int(monomials_of_degree(7).size()) == 36);
}

TEST_CASE("jacobian generators and Euler relation") {
    auto F = Field::prime(7);
    auto f = P("u^3+v^3+w^3", F);
    auto J = jacobian_generators(f);
    REQUIRE(J.gens.size() == 4);
    CHECK(J.euler_redundant); // 3 invertible mod 7
    // Euler: deg(f)*f = u f_u + v f_v + w f_w
    auto F457f = F457();
    std::mt19937_64 rng(13);
    for (int it = 0; it < 10; ++it) {
        Poly g = random_poly(F457f, 5, rng);
        Poly lhs = g.scaled(F457f->from_int(5));
        Poly rhs = Poly::variable(F457f, 0) * g.partial(0) +
                   Poly::variable(F457f, 1) * g.partial(1) +
                   Poly::variable(F457f, 2) * g.partial(2);
        CHECK(lhs == rhs);
    }
    // characteristic dividing the degree: f stays essential
    auto F3 = Field::prime(3);
    auto f3 = P("u^3+v^3+w^3", F3);
    CHECK(!jacobian_generators(f3).euler_redundant);
}

TEST_CASE("kummer pullback with coordinate lines is plain squaring") {
    auto F = F457();
    LinearTriple coords(Poly::variable(F, 0), Poly::variable(F, 1), Poly::variable(F, 2));
    auto f = P("u^3+v^3+w^3", F);
    CHECK(kummer_order2_pullback(f, coords) == P("u^6+v^6+w^6", F));
    auto w = Poly::variable(F, 2);
    CHECK(kummer_order2_pullback(w, coords) == P("w^2", F));

    // degree doubles and homogeneity is preserved for general lines
    LinearTriple lines(P("u+w", F), P("u+2*v", F), P("v+3*w", F));
    auto g = kummer_order2_pullback(f, lines);
    CHECK(g.degree() == 6);
    CHECK(g.is_homogeneous());
    // dependent lines rejected
    CHECK_THROWS_AS(LinearTriple(P("u", F), P("v", F), P("u+v", F)), error);
}

TEST_CASE("kummer pullback squares the chosen line coordinates") {
    // the defining property: l_i o B(u^2,v^2,w^2) = (i-th variable)^2
    auto F = F457();
    LinearTriple lines(P("u+w", F), P("u+5*w", F), P("u+v", F));
    for (int i = 0; i < 3; ++i) {
        Poly pulled = kummer_order2_pullback(lines.lines()[i], lines);
        CHECK(pulled == Poly::variable(F, i, 2));
    }
}

TEST_CASE("base change substitutes seeded random forms") {
    auto F = F457();
    auto f = P("u^3+v^3+w^3", F);
    auto g1 = base_change(f, 2, 42);
    auto g2 = base_change(f, 2, 42);
    CHECK(g1 == g2);
    CHECK(g1.degree() == 6);
    CHECK(g1.is_homogeneous());
    CHECK(base_change(f, 2, 43) != g1);
}

TEST_CASE("linear change of coordinates is invertible") {
    auto F = F457();
    std::mt19937_64 rng(21);
    auto [M, Minv] = random_invertible_matrix(F, rng);
    Poly f = random_poly(F, 4, rng);
    CHECK(linear_change(linear_change(f, M), Minv) == f);
}

TEST_CASE("binary form restriction and gcd") {
    auto F = F457();
    // restrict u^3+v^3+w^3 to the line through [1:0:-1] and [0:1:0]:
    // f(s*(1,0,-1) + t*(0,1,0)) = s^3 + t^3 - s^3 = t^3
    auto f = P("u^3+v^3+w^3", F);
    auto bf = restrict_to_line(f, {F->one(), F->zero(), F->from_int(-1)},
                               {F->zero(), F->one(), F->zero()}, F);
    CHECK(binform_degree(bf) == 3);
    CHECK(bf[0] == F->one());  // t^3 coefficient (s^0)
    CHECK(bf[1].is_zero());
    CHECK(bf[2].is_zero());
    CHECK(bf[3].is_zero());
    CHECK(!binform_is_squarefree(F, bf)); // t^3 is a cube

    // gcd of s^2*t and s*t^2 is s*t
    std::vector<FieldElem> A = {F->zero(), F->one(), F->zero(), F->zero()}; // s t^2? c[i]=s^i t^(d-i), d=3: c[1] -> s^1 t^2
    std::vector<FieldElem> B = {F->zero(), F->zero(), F->one(), F->zero()}; // s^2 t
    auto g = binform_gcd(F, A, B);
    CHECK(binform_degree(g) == 2); // s*t has degree 2
    // squarefree: s*t is squarefree, s^2 t is not
    CHECK(binform_is_squarefree(F, g));
    CHECK(!binform_is_squarefree(F, B));
}

TEST_CASE("evaluation over an extension") {
    auto F = F457();
    auto K = Field::parse_spec("F457[t]/t^2-5");
    auto f = P("u^2-5*w^2", F);
    auto t = K->gen();
    // point [t : 0 : 1] satisfies u^2 - 5 w^2 = 0
    CHECK(f.eval({t, K->zero(), K->one()}, K).is_zero());
    CHECK(!f.eval({K->one(), K->zero(), K->one()}, K).is_zero());
}
