#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fields.hpp"
#include "upoly.hpp"

using namespace cuspidal;

namespace {

FieldPtr F457() { return Field::prime(457); }

FieldPtr F9() {
    auto F3 = Field::prime(3);
    return Field::extension(F3, {F3->one(), F3->zero(), F3->one()}); // t^2+1
}

} // namespace

TEST_CASE("prime field construction") {
    auto F = F457();
    CHECK(F->characteristic() == 457);
    CHECK(F->size() == 457);
    CHECK(F->from_int(-1) == F->from_int(456));
    CHECK_THROWS_AS(Field::prime(458), error);
    CHECK_THROWS_AS(Field::prime(1), error);
    try {
        Field::prime(91);
    } catch (const error& e) {
        CHECK(e.code() == errc::composite_characteristic);
    }
}

TEST_CASE("extension construction and reducible modulus") {
    auto F = F9();
    CHECK(F->size() == 9);
    CHECK(F->ext_degree() == 2);
    // t^2 - 1 = (t-1)(t+1) over F_5
    auto F5 = Field::prime(5);
    bool threw = false;
    try {
        Field::extension(F5, {F5->from_int(-1), F5->zero(), F5->one()});
    } catch (const error& e) {
        threw = true;
        CHECK(e.code() == errc::reducible_modulus);
        CHECK(std::string(e.what()).find("t") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("field spec strings round trip") {
    for (const char* s : {"Q", "F457", "F3[t]/t^2+1", "Q[t]/t^2-t+1"}) {
        auto F = Field::parse_spec(s);
        auto G = Field::parse_spec(F->spec_string());
        CHECK(Field::same(F.get(), G.get()));
    }
    CHECK(Field::parse_spec("F457")->characteristic() == 457);
    CHECK_THROWS_AS(Field::parse_spec("E5"), error);
}

TEST_CASE("element formatting round trips") {
    auto F = F9();
    auto t = F->gen();
    auto e = t * t + t + F->from_int(2); // t^2 = -1 => e = t+1
    CHECK(e == t + F->from_int(1));
    auto s = F->format_elem(e);
    CHECK(F->parse_elem(s) == e);

    auto Q = Field::rationals();
    auto q = Q->from_mpq(mpq_class(-6, 4));
    CHECK(Q->format_elem(q) == "-3/2");
    CHECK(Q->parse_elem("-3/2") == q);

    auto Qx = Field::parse_spec("Q[t]/t^2-t+1");
    auto el = Qx->gen() * Qx->from_mpq(mpq_class(1, 2)) - Qx->from_int(3);
    CHECK(Qx->parse_elem(Qx->format_elem(el)) == el);
}

TEST_CASE("field axioms on random triples") {
    std::vector<FieldPtr> fields = {F457(), F9(), Field::rationals(),
                                    Field::parse_spec("Q[t]/t^2-t+1"),
                                    Field::parse_spec("F457[t]/t^2-5")};
    for (const auto& F : fields) {
        std::mt19937_64 rng(42);
        for (int it = 0; it < 1000; ++it) {
            auto a = F->random_elem(rng), b = F->random_elem(rng), c = F->random_elem(rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
            CHECK(a + (-a) == F->zero());
        }
    }
}

TEST_CASE("extension arithmetic agrees with companion-matrix arithmetic") {
    auto F = Field::parse_spec("F457[t]/t^3+t+4");
    REQUIRE(F->ext_degree() == 3);
    const auto& m = F->modulus_p();
    const std::int64_t p = 457;
    const int d = 3;
    // companion matrix C of the modulus: C[i][j], column j = t * t^j reduced
    auto matmul = [&](const std::vector<std::vector<std::int64_t>>& A,
                      const std::vector<std::vector<std::int64_t>>& B) {
        std::vector<std::vector<std::int64_t>> R(d, std::vector<std::int64_t>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                for (int j = 0; j < d; ++j)
                    R[i][j] = (R[i][j] + A[i][k] * B[k][j]) % p;
        return R;
    };
    std::vector<std::vector<std::int64_t>> C(d, std::vector<std::int64_t>(d, 0));
    for (int j = 0; j + 1 < d; ++j) C[j + 1][j] = 1;
    for (int i = 0; i < d; ++i) C[i][d - 1] = ((-m[i]) % p + p) % p;

    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto a = F->random_elem(rng), b = F->random_elem(rng);
        const auto& av = std::get<ExtRep>(a.rep());
        const auto& bv = std::get<ExtRep>(b.rep());
        // M_a = sum a_i C^i
        std::vector<std::vector<std::int64_t>> Ma(d, std::vector<std::int64_t>(d, 0));
        std::vector<std::vector<std::int64_t>> Ci(d, std::vector<std::int64_t>(d, 0));
        for (int i = 0; i < d; ++i) Ci[i][i] = 1;
        for (int i = 0; i < d; ++i) {
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    Ma[r][c] = (Ma[r][c] + av[i] * Ci[r][c]) % p;
            Ci = matmul(Ci, C);
        }
        std::vector<std::int64_t> prod(d, 0);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) prod[r] = (prod[r] + Ma[r][c] * bv[c]) % p;
        auto ab = a * b;
        const auto& abv = std::get<ExtRep>(ab.rep());
        for (int r = 0; r < d; ++r) CHECK(prod[r] == abv[r]);
    }
}

TEST_CASE("primitive roots of unity") {
    auto F7 = Field::prime(7);
    CHECK(F7->primitive_nth_root(6) == F7->from_int(3));
    CHECK_THROWS_AS(F7->primitive_nth_root(4), error);

    auto F = F457();
    auto z = F->primitive_nth_root(12);
    auto pow_is_one = [&](const FieldElem& x, int n) {
        FieldElem r = F->one();
        for (int i = 0; i < n; ++i) r = r * x;
        return r.is_one();
    };
    CHECK(pow_is_one(z, 12));
    CHECK(!pow_is_one(z, 6));
    CHECK(!pow_is_one(z, 4));

    auto fq = F9();
    auto z8 = fq->primitive_nth_root(8);
    FieldElem r = fq->one();
    for (int i = 1; i <= 8; ++i) {
        r = r * z8;
        if (i < 8) CHECK(!r.is_one());
    }
    CHECK(r.is_one());
}

TEST_CASE("square roots") {
    auto F = F457();
    auto s = F->sqrt(F->from_int(-1));
    CHECK(s * s == F->from_int(-1));
    auto F7 = Field::prime(7);
    CHECK(F7->sqrt(F7->from_int(2)) == F7->from_int(3)); // canonical pick among {3,4}
    CHECK_THROWS_AS(F7->sqrt(F7->from_int(3)), error);
    try {
        F7->sqrt(F7->from_int(3));
    } catch (const error& e) {
        CHECK(e.code() == errc::non_residue);
    }
    auto Q = Field::rationals();
    CHECK(Q->sqrt(Q->from_mpq(mpq_class(4, 9))) == Q->from_mpq(mpq_class(2, 3)));
    // big extension: sqrt exists for squares
    auto Fe = Field::parse_spec("F457[t]/t^2-5");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto a = Fe->random_elem(rng);
        auto sq = a * a;
        auto r2 = Fe->sqrt(sq);
        CHECK(r2 * r2 == sq);
    }
}

TEST_CASE("univariate gcd, squarefree part and factorization") {
    auto F = F457();
    auto c = [&](std::int64_t n) { return F->from_int(n); };
    // (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
    UPoly f = upoly_from(F, {c(-2), c(5), c(-4), c(1)});
    UPoly sf = upoly_squarefree_part(f);
    CHECK(sf.deg() == 2); // (x-1)(x-2)
    auto factors = upoly_factor(f);
    REQUIRE(factors.size() == 2);
    int mult_sum = 0;
    for (auto& [g, m] : factors) {
        CHECK(g.deg() == 1);
        mult_sum += m;
    }
    CHECK(mult_sum == 3);

    // an irreducible quadratic stays whole
    UPoly q = upoly_from(F, {c(-5), c(0), c(1)}); // x^2-5, 5 is a non-residue mod 457
    auto fs = upoly_factor(q);
    bool irred = upoly_is_irreducible(q);
    if (irred) {
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first.deg() == 2);
    } else {
        REQUIRE(fs.size() == 2);
    }

    // random products factor back to the right degree multiset
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        UPoly prod = upoly_const(F, F->one());
        int total = 0;
        for (int j = 0; j < 4; ++j) {
            UPoly lin = upoly_from(F, {F->random_elem(rng), c(1)});
            prod = upoly_mul(prod, lin);
            total += 1;
        }
        auto ff = upoly_factor(prod, 99);
        int got = 0;
        UPoly rebuilt = upoly_const(F, F->one());
        for (auto& [g, m] : ff) {
            got += g.deg() * m;
            for (int i = 0; i < m; ++i) rebuilt = upoly_mul(rebuilt, g);
        }
        CHECK(got == total);
        CHECK(upoly_eq(upoly_monic(prod), rebuilt));
    }
}
