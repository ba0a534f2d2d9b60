#pragma once

#include <map>
#include <vector>

#include "groebner.hpp"

namespace cuspidal {

/// Graded generator/syzygy degrees of a Hilbert-Burch resolution
/// 0 -> (+) S(-b_j) -> (+) S(-a_i) -> S -> S/I -> 0, sorted descending.
/// Invariants: sum b = sum a, and positionwise a_i < b_i.
struct BettiTable {
    std::vector<int> gen_degrees; // a_i, t+1 of them
    std::vector<int> syz_degrees; // b_j, t of them

    std::int64_t sum_a() const;
    std::int64_t sum_b() const;
    /// sum b^2 - sum a^2; equals twice the number of points for ideals of
    /// reduced zero-dimensional subschemes.
    std::int64_t square_identity() const;
    bool positionwise_a_below_b() const;
};

/// Hilbert function of the quotient, with the stabilized value (the scheme
/// length) for zero-dimensional ideals.
struct HilbertData {
    std::map<int, std::int64_t> values; // degree -> dim (S/I)_d
    int stabilization_degree = -1;
    std::int64_t length = -1;
};

/// Minimal homogeneous generators (degree, polynomial); only the degree
/// multiset is contractual, the chosen representatives come from the
/// reduced Groebner basis.
std::vector<std::pair<int, Poly>> minimal_generators(const IdealBasis& I);

/// Minimal graded Betti numbers of a saturated ideal of a zero-dimensional
/// subscheme of the plane, by degreewise kernel computations on the
/// Macaulay block matrix, minimalized via graded Nakayama counts.
BettiTable betti_table(const IdealBasis& I);

/// dim I_d from the staircase.
std::int64_t hilbert_function(const IdealBasis& I, int d);
/// dim (S/I)_d from the staircase.
std::int64_t quotient_dim(const IdealBasis& I, int d);
/// dim (S/I)_d predicted by a Betti table (alternating binomial sum).
std::int64_t quotient_dim_from_betti(const BettiTable& t, int d);

/// Stabilized value of quotient_dim for a zero-dimensional ideal
/// (stabilization over 3 consecutive degrees, capped at sum a_i).
std::int64_t scheme_length(const IdealBasis& I);
HilbertData hilbert_data(const IdealBasis& I);

} // namespace cuspidal
