#include "alexander.hpp"

#include <algorithm>
#include <functional>

namespace cuspidal {

AlexanderResult alexander_degree(const CuspLocus& locus, int curve_degree) {
    AlexanderResult res;
    res.num_cusps = locus.count;
    if (curve_degree <= 0 || curve_degree % 6 != 0) {
        res.degree_is_6k = false; // trivial Alexander polynomial
        return res;
    }
    res.k = curve_degree / 6;
    const int d = 5 * res.k - 3;
    res.dim_I_at_5k_minus_3 = hilbert_function(locus.ideal, d);
    // cokernel of the evaluation map S_{5k-3} -> C^Sigma
    std::int64_t coker = res.num_cusps - (graded_dim(d) - res.dim_I_at_5k_minus_3);
    res.degree_via_hilbert = int(2 * coker);

    res.table = betti_table(locus.ideal);
    int top = 0;
    for (int b : res.table.syz_degrees)
        if (b == 5 * res.k) ++top;
    res.degree_via_betti = 2 * top;

    if (res.degree_via_hilbert != res.degree_via_betti)
        fail(errc::route_mismatch,
             "hilbert route gives " + std::to_string(res.degree_via_hilbert) +
                 ", betti route gives " + std::to_string(res.degree_via_betti));
    res.m = res.degree_via_hilbert / 2;
    return res;
}

namespace {

// descending multisets of `len` values in [lo, hi] with prescribed sum
void enum_multisets(int len, int lo, int hi, std::int64_t sum, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (len == 0) {
        if (sum == 0) emit(cur);
        return;
    }
    int top = cur.empty() ? hi : std::min(hi, cur.back());
    for (int v = top; v >= lo; --v) {
        if (std::int64_t(v) * len < sum) break; // values only shrink below v
        if (std::int64_t(lo) * len > sum) break;
        if (v > sum) continue;
        cur.push_back(v);
        enum_multisets(len - 1, lo, hi, sum - v, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<BettiTable> betti_candidates(int k, std::int64_t num_cusps) {
    std::vector<BettiTable> out;
    if (k < 1 || num_cusps < 1) return out;
    const int bmax = 5 * k;
    const int amin = int((num_cusps + 3 * k - 1) / (3 * k)); // ceil(n / 3k)
    if (amin > bmax - 1) return out;
    // t <= a_{t+1} <= 5k-1 since sum(b_i - a_i) over i<=t equals a_{t+1}
    for (int t = 1; t <= bmax - 1; ++t) {
        std::vector<int> cur;
        std::function<void(int)> rec_b = [&](int remaining) {
            if (remaining == 0) {
                std::int64_t sb = 0, sb2 = 0;
                for (int b : cur) {
                    sb += b;
                    sb2 += std::int64_t(b) * b;
                }
                // enumerate a with sum sb
                std::vector<int> ac;
                enum_multisets(t + 1, amin, bmax - 1, sb, ac, [&](const std::vector<int>& as) {
                    std::int64_t sa2 = 0;
                    for (int a : as) sa2 += std::int64_t(a) * a;
                    if (sb2 - sa2 != 2 * num_cusps) return;
                    BettiTable tb;
                    tb.gen_degrees = as;
                    tb.syz_degrees = cur;
                    if (!tb.positionwise_a_below_b()) return;
                    if (num_cusps > 3 * std::int64_t(k) * as.back()) return;
                    out.push_back(std::move(tb));
                });
                return;
            }
            int top = cur.empty() ? bmax : cur.back();
            for (int v = top; v >= 2; --v) {
                cur.push_back(v);
                rec_b(remaining - 1);
                cur.pop_back();
            }
        };
        rec_b(t);
    }
    std::sort(out.begin(), out.end(), [](const BettiTable& x, const BettiTable& y) {
        if (x.syz_degrees.size() != y.syz_degrees.size())
            return x.syz_degrees.size() < y.syz_degrees.size();
        if (x.syz_degrees != y.syz_degrees) return x.syz_degrees > y.syz_degrees;
        return x.gen_degrees > y.gen_degrees;
    });
    return out;
}

bool cusps_on_conic(const IdealBasis& cusp_ideal) { return cusp_ideal.ideal_dim(2) > 0; }

} // namespace cuspidal
