#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace cuspidal {

/// Caps on Buchberger work. Enabled by default in characteristic 0, where
/// intermediate coefficient growth can make runs explode; finite fields run
/// unrestricted unless a guard is supplied.
struct GroebnerGuard {
    std::size_t max_basis = 4000;
    std::size_t max_reduction_steps = 200'000'000;
    bool enabled = false;
};

/// Generator list with a lazily computed reduced Groebner basis for a fixed
/// monomial order. The cached basis is auto-reduced and monic, hence unique
/// for (ideal, order). Construction mutates only private caches; once
/// reduced_gb() has returned, the value is immutable and safe to share.
class IdealBasis {
public:
    IdealBasis() = default;
    IdealBasis(FieldPtr field, std::vector<Poly> gens, Order order = Order::grevlex,
               std::optional<GroebnerGuard> guard = std::nullopt);

    const FieldPtr& field() const { return field_; }
    const std::vector<Poly>& generators() const { return gens_; }
    Order order() const { return order_; }

    const std::vector<Poly>& reduced_gb() const;
    bool gb_computed() const { return gb_.has_value(); }

    /// Remainder of full division by the reduced basis: f - nf(f) lies in
    /// the ideal and no term of the result is divisible by a leading term.
    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
    bool is_one() const;

    /// Leading-term staircase queries (all require homogeneous use to be
    /// meaningful degreewise).
    bool lead_divides(const Monomial& m) const;
    std::vector<Monomial> std_monomials(int d) const;
    std::int64_t quotient_dim(int d) const;          // dim (S/I)_d
    std::int64_t ideal_dim(int d) const;             // dim I_d
    /// Spanning set {m * g : g in GB} of the degree-d graded piece.
    std::vector<Poly> graded_piece_basis(int d) const;

private:
    FieldPtr field_;
    std::vector<Poly> gens_;
    Order order_ = Order::grevlex;
    GroebnerGuard guard_;
    mutable std::optional<std::vector<Poly>> gb_;
    mutable std::vector<Monomial> lead_;
};

/// Same generators under a different order.
IdealBasis with_order(const IdealBasis& I, Order ord);
/// Reduced-GB equality (computed under I's order).
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Generators of I intersected with the subring omitting the variable.
IdealBasis eliminate(const IdealBasis& I, int var);

/// Ideal quotient (I : f). Exact for arbitrary nonzero f; linear forms take
/// the reverse-lex shortcut, everything else goes through module syzygies.
IdealBasis colon(const IdealBasis& I, const Poly& f);
/// Saturation (I : f^infinity).
IdealBasis saturate(const IdealBasis& I, const Poly& f);
/// Saturation with respect to the irrelevant ideal, realized as saturation
/// by seeded random linear forms, validated by idempotence.
IdealBasis saturate_irrelevant(const IdealBasis& I, std::uint64_t seed = 1);

/// Krull dimension of S/I at most 1 (so Proj is zero-dimensional or empty),
/// read off the leading-term staircase.
bool proj_zero_dimensional(const IdealBasis& I);

/// Radical of a homogeneous ideal defining a zero-dimensional subscheme of
/// the projective plane (Seidenberg: adjoin squarefree parts of the chart
/// eliminants). Requires characteristic 0 or > every eliminant degree.
IdealBasis radical_zero_dim(const IdealBasis& I, std::uint64_t seed = 1);

/// Generating syzygies of the tuple (computed by tag-tracking Buchberger);
/// each entry s satisfies sum s[i]*inputs[i] = 0.
std::vector<std::vector<Poly>> syzygies_of_tuple(const std::vector<Poly>& inputs, Order ord);

/// Univariate eliminant of a (dehomogenized) zero-dimensional plane ideal:
/// the monic generator of I intersected with k[var]. Works on ideals whose
/// polynomials do not involve `other`, after eliminating `elim`.
UPoly chart_eliminant(const IdealBasis& affine_ideal, int keep_var, int elim_var);

} // namespace cuspidal
