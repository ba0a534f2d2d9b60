#include "resolution.hpp"

#include <algorithm>
#include <unordered_map>

#include "linalg.hpp"

namespace cuspidal {

std::int64_t BettiTable::sum_a() const {
    std::int64_t s = 0;
    for (int a : gen_degrees) s += a;
    return s;
}

std::int64_t BettiTable::sum_b() const {
    std::int64_t s = 0;
    for (int b : syz_degrees) s += b;
    return s;
}

std::int64_t BettiTable::square_identity() const {
    std::int64_t s = 0;
    for (int b : syz_degrees) s += std::int64_t(b) * b;
    for (int a : gen_degrees) s -= std::int64_t(a) * a;
    return s;
}

bool BettiTable::positionwise_a_below_b() const {
    // both sorted descending; a has one more entry than b
    for (size_t i = 0; i < syz_degrees.size(); ++i) {
        if (i >= gen_degrees.size()) return false;
        if (!(gen_degrees[i] < syz_degrees[i])) return false;
    }
    return true;
}

namespace {

// indexing of the degree-d monomial basis
struct DegBasis {
    std::vector<Monomial> monos;
    std::unordered_map<std::uint64_t, int> index;
    explicit DegBasis(int d) {
        monos = monomials_of_degree(unsigned(std::max(d, 0)));
        for (size_t i = 0; i < monos.size(); ++i) index[monos[i].pack()] = int(i);
    }
};

std::vector<FieldElem> poly_to_vec(const Poly& p, const DegBasis& B, const FieldPtr& F) {
    std::vector<FieldElem> v(B.monos.size(), F->zero());
    for (const auto& t : p.terms()) {
        auto it = B.index.find(t.m.pack());
        if (it == B.index.end()) fail(errc::internal, "monomial outside graded piece");
        v[size_t(it->second)] = t.c;
    }
    return v;
}

// incremental row-echelon container for vectors over a field
struct Echelon {
    const FieldPtr& F;
    std::map<int, std::vector<FieldElem>> rows; // pivot column -> normalized row
    explicit Echelon(const FieldPtr& f) : F(f) {}

    // reduces v in place; returns true (and absorbs it) if independent
    bool insert(std::vector<FieldElem> v) {
        while (true) {
            int pivot = -1;
            for (size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) { pivot = int(i); break; }
            if (pivot < 0) return false;
            auto it = rows.find(pivot);
            if (it == rows.end()) {
                FieldElem inv = v[size_t(pivot)].inverse();
                for (auto& x : v) x = x * inv;
                rows.emplace(pivot, std::move(v));
                return true;
            }
            FieldElem c = v[size_t(pivot)];
            const auto& r = it->second;
            for (size_t i = size_t(pivot); i < v.size(); ++i) v[i] = v[i] - c * r[i];
        }
    }
    int rank() const { return int(rows.size()); }
};

} // namespace

std::vector<std::pair<int, Poly>> minimal_generators(const IdealBasis& I) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) fail(errc::not_homogeneous, "minimal generators need a homogeneous ideal");
    const FieldPtr& F = I.field();
    const auto& gb = I.reduced_gb();
    std::vector<std::pair<int, Poly>> out;
    if (gb.empty()) return out;
    int dmin = gb.front().degree(), dmax = gb.front().degree();
    for (const auto& g : gb) {
        dmin = std::min(dmin, g.degree());
        dmax = std::max(dmax, g.degree());
    }
    for (int d = dmin; d <= dmax; ++d) {
        DegBasis B(d);
        Echelon ech(F);
        // span of S_1 * I_{d-1}: all m*g with deg m >= 1
        for (const auto& g : gb) {
            int dg = g.degree();
            if (dg >= d || dg < 0) continue;
            for (const auto& m : monomials_of_degree(unsigned(d - dg)))
                ech.insert(poly_to_vec(g.mul_term(m, F->one()), B, F));
        }
        // generators of degree d complete the span of I_d
        for (const auto& g : gb) {
            if (g.degree() != d) continue;
            if (ech.insert(poly_to_vec(g, B, F))) out.push_back({d, g});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

namespace {

// basis of the degree-b piece of the syzygy module of gens (columns indexed
// by (generator i, monomial of degree b - a_i))
struct SyzPiece {
    std::vector<std::vector<FieldElem>> kernel; // vectors in column space
    std::vector<std::pair<int, Monomial>> cols;
};

SyzPiece syzygy_piece(const std::vector<std::pair<int, Poly>>& gens, int b, const FieldPtr& F) {
    SyzPiece out;
    DegBasis rows(b);
    for (size_t i = 0; i < gens.size(); ++i) {
        int rem = b - gens[i].first;
        if (rem < 0) continue;
        for (const auto& m : monomials_of_degree(unsigned(rem)))
            out.cols.push_back({int(i), m});
    }
    if (out.cols.empty()) return out;
    Mat M(rows.monos.size(), std::vector<FieldElem>(out.cols.size(), F->zero()));
    for (size_t c = 0; c < out.cols.size(); ++c) {
        const auto& [gi, m] = out.cols[c];
        Poly p = gens[size_t(gi)].second.mul_term(m, F->one());
        for (const auto& t : p.terms()) {
            auto it = rows.index.find(t.m.pack());
            if (it == rows.index.end()) fail(errc::internal, "degree mismatch in Macaulay block");
            M[size_t(it->second)][c] = M[size_t(it->second)][c] + t.c;
        }
    }
    out.kernel = kernel_basis(std::move(M), F);
    return out;
}

} // namespace

BettiTable betti_table(const IdealBasis& I) {
    const FieldPtr& F = I.field();
    if (!proj_zero_dimensional(I))
        fail(errc::unexpected_projective_dimension,
             "resolution shape needs a zero-dimensional subscheme");
    auto gens = minimal_generators(I);
    BettiTable table;
    for (const auto& [d, g] : gens) table.gen_degrees.push_back(d);
    std::sort(table.gen_degrees.rbegin(), table.gen_degrees.rend());

    const int t = int(gens.size()) - 1;
    if (t < 0) return table;
    if (t == 0)
        fail(errc::unexpected_projective_dimension, "principal ideal is not zero-dimensional");
    int amin = gens.back().first, amax = gens.front().first;
    for (const auto& [d, g] : gens) {
        amin = std::min(amin, d);
        amax = std::max(amax, d);
    }
    const int cap = 3 * amax;

    // previous-degree kernel basis, as (column labels, vectors)
    SyzPiece prev;
    int prev_b = -1;
    int found = 0;
    for (int b = amin + 1; b <= cap && found < t; ++b) {
        SyzPiece cur = syzygy_piece(gens, b, F);
        if (cur.cols.empty()) continue;
        std::unordered_map<std::uint64_t, int> col_index;
        auto key = [](int gi, const Monomial& m) {
            return (std::uint64_t(gi) << 56) ^ m.pack();
        };
        for (size_t c = 0; c < cur.cols.size(); ++c)
            col_index[key(cur.cols[c].first, cur.cols[c].second)] = int(c);

        Echelon ech(F);
        if (prev_b == b - 1) {
            for (const auto& kv : prev.kernel) {
                for (int var = 0; var < 3; ++var) {
                    std::vector<FieldElem> shifted(cur.cols.size(), F->zero());
                    Monomial xv;
                    xv.e[var] = 1;
                    for (size_t c = 0; c < prev.cols.size(); ++c) {
                        if (kv[c].is_zero()) continue;
                        auto it = col_index.find(key(prev.cols[c].first, prev.cols[c].second * xv));
                        if (it == col_index.end()) fail(errc::internal, "shift fell outside block");
                        size_t idx = size_t(it->second);
                        shifted[idx] = shifted[idx] + kv[c];
                    }
                    ech.insert(std::move(shifted));
                }
            }
        }
        int old_rank = ech.rank();
        (void)old_rank;
        int fresh = 0;
        for (const auto& kv : cur.kernel)
            if (ech.insert(kv)) ++fresh;
        // fresh = dim Syz_b - dim (S_1 Syz_{b-1}) = new minimal syzygies
        for (int k = 0; k < fresh; ++k) table.syz_degrees.push_back(b);
        found += fresh;
        if (found > t)
            fail(errc::unexpected_projective_dimension,
                 "more syzygies than a length-2 resolution allows");
        prev = std::move(cur);
        prev_b = b;
    }
    if (found != t)
        fail(errc::unexpected_projective_dimension,
             "syzygy search exhausted the degree cap with an incomplete resolution");
    std::sort(table.syz_degrees.rbegin(), table.syz_degrees.rend());
    if (table.sum_a() != table.sum_b())
        fail(errc::unexpected_projective_dimension, "resolution degree sums disagree");
    return table;
}

std::int64_t hilbert_function(const IdealBasis& I, int d) { return I.ideal_dim(d); }

std::int64_t quotient_dim(const IdealBasis& I, int d) { return I.quotient_dim(d); }

std::int64_t quotient_dim_from_betti(const BettiTable& t, int d) {
    auto B = [](int e) { return e < 0 ? 0 : std::int64_t(e + 1) * (e + 2) / 2; };
    std::int64_t s = B(d);
    for (int a : t.gen_degrees) s -= B(d - a);
    for (int b : t.syz_degrees) s += B(d - b);
    return s;
}

HilbertData hilbert_data(const IdealBasis& I) {
    if (!proj_zero_dimensional(I))
        fail(errc::not_zero_dimensional, "length of a positive-dimensional scheme");
    auto gens = minimal_generators(I);
    std::int64_t cap = 4;
    for (const auto& [d, g] : gens) cap += d;
    int start = 0;
    for (const auto& g : I.reduced_gb()) start = std::max(start, g.degree());
    HilbertData H;
    std::int64_t prev1 = -1, prev2 = -2;
    for (int d = 0; d <= cap; ++d) {
        std::int64_t v = I.quotient_dim(d);
        H.values[d] = v;
        if (d > start && v == prev1 && v == prev2) {
            H.stabilization_degree = d - 2;
            H.length = v;
            return H;
        }
        prev2 = prev1;
        prev1 = v;
    }
    fail(errc::no_stabilization, "Hilbert function did not stabilize below the cap");
}

std::int64_t scheme_length(const IdealBasis& I) { return hilbert_data(I).length; }

} // namespace cuspidal
