#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fields.hpp"
#include "upoly.hpp"

namespace cuspidal {

/// Exponent triple for the variables u, v, w.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    unsigned deg() const { return e[0] + e[1] + e[2]; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    Monomial operator*(const Monomial& o) const {
        return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        return Monomial{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
    }
    std::uint64_t pack() const {
        return (std::uint64_t(e[0]) << 42) | (std::uint64_t(e[1]) << 21) | e[2];
    }
};

Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Monomial orders. Grevlex (u > v > w) is the working order; the
/// elimination orders put the named variable in front with grevlex ties.
enum class Order { grevlex, elim_u, elim_v, elim_w };

int cmp_mono(Order ord, const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    FieldElem c;
};

/// Sparse trivariate polynomial over a fixed field. Terms are kept in
/// descending grevlex order with nonzero coefficients; this canonical form
/// makes equality, hashing and printing stable. Immutable by convention:
/// operations return new values, so sharing across threads is safe.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Term> terms);

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly constant(const FieldPtr& f, const FieldElem& c);
    static Poly variable(const FieldPtr& f, int var, unsigned power = 1);
    static Poly monomial(const FieldPtr& f, const Monomial& m, const FieldElem& c);

    const FieldPtr& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElem& s) const;
    Poly mul_term(const Monomial& m, const FieldElem& c) const;
    Poly pow(unsigned n) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Coefficient of a monomial (zero if absent).
    FieldElem coeff(const Monomial& m) const;
    /// Leading term with respect to an order.
    const Term& leading_term(Order ord) const;

    Poly partial(int var) const;
    /// Substitute gs[i] for variable i.
    Poly substitute(const std::array<Poly, 3>& gs) const;
    /// Evaluate at a point with coordinates in K (K equal to, or an
    /// extension of, the coefficient field).
    FieldElem eval(const std::array<FieldElem, 3>& pt, const FieldPtr& K) const;

    /// Sum of terms of total degree exactly d.
    Poly graded_part(unsigned d) const;
    /// Substitute 1 for the given variable (result still trivariate with
    /// zero exponent on it).
    Poly dehomogenize(int var) const;
    /// Multiply each term by var^(d - deg term); d defaults to the degree.
    Poly homogenize(int var, int d = -1) const;

    std::string str() const;
    static Poly parse(const std::string& text, const FieldPtr& f);

private:
    FieldPtr field_;
    std::vector<Term> terms_; // grevlex descending
    void normalize_sorted();  // assumes sorted; drops zeros
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// dim of the degree-d graded piece of k[u,v,w]: (d+1)(d+2)/2.
std::int64_t graded_dim(int d);
/// All monomials of total degree d in descending grevlex order.
std::vector<Monomial> monomials_of_degree(unsigned d);

/// True if f = c*g for some nonzero scalar c (f, g nonzero).
bool is_scalar_multiple(const Poly& f, const Poly& g);

/// Coefficient-wise embedding into an extension K of the coefficient field.
Poly embed_poly(const Poly& f, const FieldPtr& K);

/// Three independent linear forms; the rows of coefficient_matrix() are
/// the forms' (u, v, w) coefficients.
class LinearTriple {
public:
    LinearTriple(Poly l1, Poly l2, Poly l3);
    const std::array<Poly, 3>& lines() const { return lines_; }
    std::array<std::array<FieldElem, 3>, 3> coefficient_matrix() const;
    std::array<std::array<FieldElem, 3>, 3> inverse_matrix() const;

private:
    std::array<Poly, 3> lines_;
};

/// The ideal-of-partials generator list (f, f_u, f_v, f_w) plus a flag for
/// characteristics dividing deg f, where f is not redundant.
struct JacobianGens {
    std::vector<Poly> gens; // f first, then the three partials
    bool euler_redundant;   // true when deg f is invertible in the field
};
JacobianGens jacobian_generators(const Poly& f);

/// Pullback under the order-2 Kummer cover that squares the three given
/// line coordinates: f o B(u^2, v^2, w^2) with B the inverse of
/// p -> (l1(p), l2(p), l3(p)). Degree doubles.
Poly kummer_order2_pullback(const Poly& f, const LinearTriple& lines);

/// Substitute three pseudorandom degree-d forms drawn from the seed.
Poly base_change(const Poly& f, int d, std::uint64_t seed);
/// The three forms used by base_change for the same seed.
std::array<Poly, 3> base_change_forms(const FieldPtr& f, int d, std::uint64_t seed);

/// Apply an invertible linear change of coordinates given by matrix M:
/// returns f(M * (u,v,w)^T).
Poly linear_change(const Poly& f, const std::array<std::array<FieldElem, 3>, 3>& M);

/// Random invertible 3x3 matrix (and its inverse) over the field.
std::pair<std::array<std::array<FieldElem, 3>, 3>, std::array<std::array<FieldElem, 3>, 3>>
random_invertible_matrix(const FieldPtr& f, std::mt19937_64& rng);

// --- binary forms -----------------------------------------------------------
// A binary form of degree d in parameters (s, t) is stored as the vector of
// coefficients c[i] of s^i t^(d-i), i = 0..d.

/// Restriction of f to the line spanned by points P and Q: the binary form
/// f(s*P + t*Q) of degree deg f.
std::vector<FieldElem> restrict_to_line(const Poly& f, const std::array<FieldElem, 3>& P,
                                        const std::array<FieldElem, 3>& Q, const FieldPtr& K);

/// Monic-normalized gcd of two binary forms (possibly zero).
std::vector<FieldElem> binform_gcd(const FieldPtr& K, std::vector<FieldElem> A,
                                   std::vector<FieldElem> B);
int binform_degree(const std::vector<FieldElem>& A);
bool binform_is_squarefree(const FieldPtr& K, const std::vector<FieldElem>& A);

} // namespace cuspidal
