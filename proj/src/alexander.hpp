#pragma once

#include "singular.hpp"

namespace cuspidal {

/// Degree of the Alexander polynomial (t^2-t+1)^m of a cuspidal curve of
/// degree 6k, computed two independent ways: from the Hilbert function of
/// the cusp ideal at 5k-3, and from the number of top-degree syzygies in
/// its resolution. The two routes must agree.
struct AlexanderResult {
    int k = 0;
    std::int64_t num_cusps = 0;
    std::int64_t dim_I_at_5k_minus_3 = 0;
    int degree_via_hilbert = 0;
    int degree_via_betti = 0;
    int m = 0;
    bool degree_is_6k = true;        // false: degree not 6k, polynomial trivial
    bool irreducibility_assumed = true;
    BettiTable table;
};

AlexanderResult alexander_degree(const CuspLocus& locus, int curve_degree);

/// All (a, b) degree tables compatible with a Hilbert-Burch resolution of
/// the ideal of num_cusps cusps on a degree-6k curve: sum b = sum a,
/// sum b^2 - sum a^2 = 2 num_cusps, b_i <= 5k, num_cusps <= 3k min(a_i),
/// and positionwise a_i < b_i after sorting. Deterministic order.
std::vector<BettiTable> betti_candidates(int k, std::int64_t num_cusps);

/// dim I_2 > 0: six (or more) cusps lying on a conic.
bool cusps_on_conic(const IdealBasis& cusp_ideal);

} // namespace cuspidal
