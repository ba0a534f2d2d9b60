#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace cuspidal {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Canonical residue representations. Prime fields store a residue in
/// [0, p); extensions store the reduced coefficient vector of a polynomial
/// in t (constant term first, degree < deg modulus); rationals store a
/// reduced fraction.
using PrimeRep = std::int64_t;
using ExtRep = std::vector<std::int64_t>;
using RatRep = mpq_class;
using RatExtRep = std::vector<mpq_class>;

/// Element of a Field. Carries a non-owning pointer to its field; the
/// FieldPtr that created the element must outlive it. Immutable value
/// semantics: every operation returns a fresh element.
class FieldElem {
public:
    FieldElem() : field_(nullptr), rep_(PrimeRep{0}) {}
    FieldElem(const Field* f, std::variant<PrimeRep, ExtRep, RatRep, RatExtRep> rep)
        : field_(f), rep_(std::move(rep)) {}

    const Field* field() const { return field_; }
    const std::variant<PrimeRep, ExtRep, RatRep, RatExtRep>& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    const Field* field_;
    std::variant<PrimeRep, ExtRep, RatRep, RatExtRep> rep_;
    friend class Field;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

enum class FieldKind { prime, extension, rationals };

/// Exact coefficient arithmetic: F_p (p an odd prime < 2^31), simple
/// extensions F_p[t]/(m) and Q[t]/(m) with m monic irreducible, and
/// arbitrary-precision rationals. Immutable after construction; all
/// operations are pure, so values can be shared freely across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);
    /// modulus: coefficients of a monic polynomial in t over `base`
    /// (constant first, leading 1 last). Verified irreducible; reports a
    /// factor on failure. base must be a prime field or the rationals.
    static FieldPtr extension(const FieldPtr& base, const std::vector<FieldElem>& modulus);

    /// Grammar: "Q", "F<p>", "F<p>[t]/<poly in t>", "Q[t]/<poly in t>".
    static FieldPtr parse_spec(const std::string& text);
    std::string spec_string() const;

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    bool is_finite() const { return p_ != 0; }
    /// Number of elements, for finite fields.
    mpz_class size() const;
    /// Degree over the base field (1 unless an extension).
    int ext_degree() const {
        if (kind_ != FieldKind::extension) return 1;
        return int((mod_p_.empty() ? mod_q_.size() : mod_p_.size()) - 1);
    }
    const FieldPtr& base() const { return base_; }
    const std::vector<std::int64_t>& modulus_p() const { return mod_p_; }
    const std::vector<mpq_class>& modulus_q() const { return mod_q_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t n) const;
    FieldElem from_mpq(const mpq_class& q) const;
    /// Element with representation t (extensions only).
    FieldElem gen() const;
    /// Lift an element of the base field (or of the prime subfield).
    FieldElem embed(const FieldElem& base_elem) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, const mpz_class& e) const;
    bool eq(const FieldElem& a, const FieldElem& b) const;
    bool is_zero(const FieldElem& a) const;

    /// Total order on canonical representations; used only to make
    /// root-picking deterministic.
    static int cmp_canonical(const FieldElem& a, const FieldElem& b);

    FieldElem random_elem(std::mt19937_64& rng) const;

    /// zeta with zeta^n = 1 and zeta^(n/l) != 1 for every prime l | n.
    /// Deterministic for a given seed.
    FieldElem primitive_nth_root(unsigned n, std::uint64_t seed = 0) const;
    /// s with s^2 = a, canonical choice (smallest representation).
    FieldElem sqrt(const FieldElem& a) const;

    std::string format_elem(const FieldElem& a) const;
    /// Accepts an integer, a fraction "a/b" (rationals), or a bracketed
    /// polynomial in t such as "[t+2]" (extensions).
    FieldElem parse_elem(const std::string& text) const;

    /// Structural identity (same kind, characteristic, modulus).
    static bool same(const Field* a, const Field* b);

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::rationals;
    std::int64_t p_ = 0;                 // characteristic (0 for rationals)
    FieldPtr base_;                      // for extensions
    std::vector<std::int64_t> mod_p_;    // monic modulus over F_p (empty otherwise)
    std::vector<mpq_class> mod_q_;       // monic modulus over Q (empty otherwise)

    ExtRep ext_mul(const ExtRep& a, const ExtRep& b) const;
    ExtRep ext_inv(const ExtRep& a) const;
    RatExtRep qext_mul(const RatExtRep& a, const RatExtRep& b) const;
    RatExtRep qext_inv(const RatExtRep& a) const;
};

/// Checks whether two elements live in structurally identical fields and
/// throws FieldMismatch otherwise.
void require_same_field(const FieldElem& a, const FieldElem& b);

bool is_prime_int64(std::int64_t n);

} // namespace cuspidal
