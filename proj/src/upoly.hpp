#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace cuspidal {

/// Dense univariate polynomial over a Field. Coefficient of x^i at
/// index i; no trailing zeros (zero polynomial = empty vector).
struct UPoly {
    FieldPtr field;
    std::vector<FieldElem> c;

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const FieldElem& lead() const { return c.back(); }
    void normalize();
};

UPoly upoly_zero(const FieldPtr& F);
UPoly upoly_const(const FieldPtr& F, const FieldElem& a);
UPoly upoly_x(const FieldPtr& F);
UPoly upoly_from(const FieldPtr& F, std::vector<FieldElem> coeffs);

bool upoly_eq(const UPoly& a, const UPoly& b);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const FieldElem& s);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_rem(const UPoly& a, const UPoly& b);
UPoly upoly_monic(const UPoly& a);
/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& a);
FieldElem upoly_eval(const UPoly& a, const FieldElem& x);
/// a^e modulo m.
UPoly upoly_powmod(const UPoly& a, const mpz_class& e, const UPoly& m);
/// Largest squarefree divisor (monic). Requires characteristic 0 or
/// characteristic > deg(a); otherwise throws CharacteristicTooSmall.
UPoly upoly_squarefree_part(const UPoly& a);

/// True for irreducible polynomials of degree >= 1 over a finite field.
bool upoly_is_irreducible(const UPoly& a);

/// Complete factorization over an odd finite field into monic irreducible
/// factors with multiplicities (squarefree decomposition, then
/// distinct-degree and equal-degree splitting). Deterministic per seed.
std::vector<std::pair<UPoly, int>> upoly_factor(const UPoly& a, std::uint64_t seed = 1);

std::string upoly_str(const UPoly& a, const std::string& var = "x");

} // namespace cuspidal
