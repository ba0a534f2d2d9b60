#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "linalg.hpp"

namespace cuspidal {

namespace {

using TV = std::vector<Term>; // terms sorted descending under the engine order

struct Engine {
    Order ord;
    FieldPtr F;
    GroebnerGuard guard;
    std::size_t steps = 0;

    bool less(const Term& a, const Term& b) const { return cmp_mono(ord, a.m, b.m) < 0; }

    TV from_poly(const Poly& p) const {
        TV t = p.terms();
        if (ord != Order::grevlex)
            std::sort(t.begin(), t.end(),
                      [&](const Term& a, const Term& b) { return cmp_mono(ord, a.m, b.m) > 0; });
        return t;
    }

    Poly to_poly(TV t) const { return Poly(F, std::move(t)); }

    void bump(std::size_t n = 1) {
        steps += n;
        if (guard.enabled && steps > guard.max_reduction_steps)
            fail(errc::resource_exhausted,
                 "reduction budget exhausted after " + std::to_string(steps) + " steps");
    }

    // a -= c * x^m * b
    void sub_scaled(TV& a, const FieldElem& c, const Monomial& m, const TV& b) {
        TV out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            Monomial bm = b[j].m * m;
            int cc = cmp_mono(ord, a[i].m, bm);
            if (cc > 0)
                out.push_back(a[i++]);
            else if (cc < 0) {
                out.push_back({bm, -(c * b[j].c)});
                ++j;
            } else {
                FieldElem s = a[i].c - c * b[j].c;
                if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) {
            out.push_back({b[j].m * m, -(c * b[j].c)});
            ++j;
        }
        bump(a.size() + b.size());
        a = std::move(out);
    }

    // reduce only the leading term while possible; basis elements are monic
    template <typename TagHook>
    void top_reduce(TV& f, const std::vector<TV>& basis, TagHook&& hook) {
        while (!f.empty()) {
            bool reduced = false;
            for (size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].empty()) continue;
                if (!basis[k].front().m.divides(f.front().m)) continue;
                Monomial q = f.front().m / basis[k].front().m;
                FieldElem c = f.front().c;
                hook(k, c, q);
                sub_scaled(f, c, q, basis[k]);
                reduced = true;
                break;
            }
            if (!reduced) break;
        }
    }

    // full normal form (tail-reduced too)
    TV full_reduce(TV f, const std::vector<TV>& basis) {
        TV out;
        while (!f.empty()) {
            bool reduced = false;
            for (size_t k = 0; k < basis.size(); ++k) {
                if (basis[k].empty()) continue;
                if (!basis[k].front().m.divides(f.front().m)) continue;
                Monomial q = f.front().m / basis[k].front().m;
                sub_scaled(f, f.front().c, q, basis[k]);
                reduced = true;
                break;
            }
            if (!reduced) {
                out.push_back(f.front());
                f.erase(f.begin());
            }
        }
        return out;
    }
};

struct Pair {
    int sugar;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    Order ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = cmp_mono(ord, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct BuchbergerResult {
    std::vector<TV> basis;                      // raw (non-reduced) GB, monic
    std::vector<std::vector<TV>> syzygies;      // tags of zero reductions (if requested)
};

// Buchberger with sugar-strategy normal selection. When with_tags is set,
// every S-pair is processed (the coprime and chain criteria would drop the
// Koszul syzygies we need) and each zero reduction contributes a generating
// syzygy of the input tuple.
BuchbergerResult buchberger(Engine& eng, const std::vector<Poly>& inputs, bool with_tags) {
    BuchbergerResult res;
    std::vector<TV>& basis = res.basis;
    std::vector<std::vector<TV>> tags; // expression of each basis element in the inputs
    std::vector<int> sugar;

    const size_t n_in = inputs.size();
    for (size_t i = 0; i < n_in; ++i) {
        const Poly& p = inputs[i];
        if (p.is_zero()) {
            if (with_tags) fail(errc::internal, "zero input to tagged Buchberger");
            continue;
        }
        TV t = eng.from_poly(p);
        FieldElem lc = t.front().c;
        FieldElem inv = lc.inverse();
        for (auto& term : t) term.c = term.c * inv;
        basis.push_back(std::move(t));
        sugar.push_back(p.degree());
        if (with_tags) {
            std::vector<TV> tag(n_in);
            tag[i] = {Term{Monomial{}, inv}};
            tags.push_back(std::move(tag));
        }
    }

    PairLess pl{eng.ord};
    std::set<Pair, PairLess> pending(pl);
    auto push_pair = [&](int i, int j) {
        const Monomial &mi = basis[i].front().m, &mj = basis[j].front().m;
        Monomial l = mono_lcm(mi, mj);
        int sg = std::max(sugar[i] + int(l.deg() - mi.deg()), sugar[j] + int(l.deg() - mj.deg()));
        pending.insert(Pair{sg, l, i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(int(i), int(j));

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        const TV &gi = basis[pr.i], &gj = basis[pr.j];

        if (!with_tags) {
            if (mono_coprime(gi.front().m, gj.front().m)) continue;
            // chain criterion, well-founded form: a witness k whose lead
            // divides the lcm and whose sub-lcms both properly divide it;
            // induction on lcm divisibility keeps this sound regardless of
            // the processing state of the witness pairs
            bool chain = false;
            for (size_t k = 0; k < basis.size() && !chain; ++k) {
                if (int(k) == pr.i || int(k) == pr.j || basis[k].empty()) continue;
                const Monomial& mk = basis[k].front().m;
                if (!mk.divides(pr.lcm)) continue;
                if (mono_lcm(gi.front().m, mk) == pr.lcm) continue;
                if (mono_lcm(gj.front().m, mk) == pr.lcm) continue;
                chain = true;
            }
            if (chain) continue;
        }

        Monomial qi = pr.lcm / gi.front().m, qj = pr.lcm / gj.front().m;
        TV s;
        eng.sub_scaled(s, -eng.F->one(), qi, gi); // s = x^qi * gi
        std::vector<TV> tag;
        if (with_tags) {
            tag.assign(n_in, TV{});
            for (size_t t = 0; t < n_in; ++t) {
                tag[t] = tags[pr.i][t];
                for (auto& term : tag[t]) term.m = term.m * qi;
            }
            for (size_t t = 0; t < n_in; ++t) {
                TV sub = tags[pr.j][t];
                for (auto& term : sub) term.m = term.m * qj;
                TV merged = tag[t];
                eng.sub_scaled(merged, eng.F->one(), Monomial{}, sub);
                tag[t] = std::move(merged);
            }
        }
        eng.sub_scaled(s, eng.F->one(), qj, gj);

        auto hook = [&](size_t k, const FieldElem& c, const Monomial& q) {
            if (!with_tags) return;
            for (size_t t = 0; t < n_in; ++t) {
                TV sub = tags[k][t];
                if (sub.empty()) continue;
                TV merged = tag[t];
                // tag -= c * x^q * tag_k
                for (auto& term : sub) term.m = term.m * q;
                TV scaled = std::move(sub);
                for (auto& term : scaled) term.c = term.c * c;
                eng.sub_scaled(merged, eng.F->one(), Monomial{}, scaled);
                tag[t] = std::move(merged);
            }
        };
        eng.top_reduce(s, basis, hook);

        if (s.empty()) {
            if (with_tags) res.syzygies.push_back(std::move(tag));
            continue;
        }
        FieldElem inv = s.front().c.inverse();
        for (auto& term : s) term.c = term.c * inv;
        if (with_tags)
            for (auto& tg : tag)
                for (auto& term : tg) term.c = term.c * inv;
        int sg = std::max(pr.sugar, int(s.front().m.deg()));
        basis.push_back(std::move(s));
        sugar.push_back(sg);
        if (with_tags) tags.push_back(std::move(tag));
        int t = int(basis.size()) - 1;
        for (int k = 0; k < t; ++k)
            if (!basis[k].empty()) push_pair(k, t);
        if (eng.guard.enabled && basis.size() > eng.guard.max_basis)
            fail(errc::resource_exhausted,
                 "basis grew past " + std::to_string(eng.guard.max_basis) + " elements");
    }
    return res;
}

std::vector<Poly> reduce_basis(Engine& eng, std::vector<TV> basis) {
    // drop elements whose lead is divisible by another's lead
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].empty()) continue;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].empty()) continue;
            if (basis[j].front().m.divides(basis[i].front().m) &&
                !(i < j && basis[j].front().m == basis[i].front().m)) {
                basis[i].clear();
                break;
            }
        }
    }
    std::erase_if(basis, [](const TV& t) { return t.empty(); });
    // tail-reduce until stable
    bool changed = true;
    int rounds = 0;
    while (changed && rounds++ < 64) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            TV self = std::move(basis[i]);
            basis[i].clear();
            TV red = eng.full_reduce(std::move(self), basis);
            if (red.empty()) fail(errc::internal, "basis element vanished in interreduction");
            basis[i] = std::move(red);
        }
        // monic normalization and stability check happens via one more sweep
        for (auto& b : basis) {
            FieldElem lc = b.front().c;
            if (!lc.is_one()) {
                FieldElem inv = lc.inverse();
                for (auto& t : b) t.c = t.c * inv;
            }
        }
        // check: no term of any element divisible by another's lead
        for (size_t i = 0; i < basis.size() && !changed; ++i)
            for (const auto& t : basis[i]) {
                for (size_t j = 0; j < basis.size(); ++j) {
                    if (i == j) continue;
                    if (basis[j].front().m.divides(t.m)) { changed = true; break; }
                }
                if (changed) break;
            }
    }
    std::sort(basis.begin(), basis.end(), [&](const TV& a, const TV& b) {
        return cmp_mono(eng.ord, a.front().m, b.front().m) < 0;
    });
    std::vector<Poly> out;
    out.reserve(basis.size());
    for (auto& b : basis) out.push_back(eng.to_poly(std::move(b)));
    return out;
}

GroebnerGuard default_guard(const FieldPtr& f) {
    GroebnerGuard g;
    g.enabled = (f->characteristic() == 0);
    return g;
}

} // namespace

// ---------------------------------------------------------------------------

IdealBasis::IdealBasis(FieldPtr field, std::vector<Poly> gens, Order order,
                       std::optional<GroebnerGuard> guard)
    : field_(std::move(field)), gens_(std::move(gens)), order_(order),
      guard_(guard.value_or(default_guard(field_))) {
    for (const auto& g : gens_)
        if (!Field::same(g.field().get(), field_.get()))
            fail(errc::field_mismatch, "generator over a different field");
}

const std::vector<Poly>& IdealBasis::reduced_gb() const {
    if (!gb_) {
        Engine eng{order_, field_, guard_, 0};
        auto res = buchberger(eng, gens_, false);
        gb_ = reduce_basis(eng, std::move(res.basis));
        lead_.clear();
        for (const auto& g : *gb_) lead_.push_back(g.leading_term(order_).m);
    }
    return *gb_;
}

Poly IdealBasis::normal_form(const Poly& f) const {
    if (!Field::same(f.field().get(), field_.get()))
        fail(errc::field_mismatch, "normal form of a polynomial over a different field");
    const auto& gb = reduced_gb();
    Engine eng{order_, field_, guard_, 0};
    std::vector<TV> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) basis.push_back(eng.from_poly(g));
    return eng.to_poly(eng.full_reduce(eng.from_poly(f), basis));
}

bool IdealBasis::is_one() const {
    const auto& gb = reduced_gb();
    return gb.size() == 1 && gb[0].degree() == 0;
}

bool IdealBasis::lead_divides(const Monomial& m) const {
    reduced_gb();
    for (const auto& l : lead_)
        if (l.divides(m)) return true;
    return false;
}

std::vector<Monomial> IdealBasis::std_monomials(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (const auto& m : monomials_of_degree(unsigned(d)))
        if (!lead_divides(m)) out.push_back(m);
    return out;
}

std::int64_t IdealBasis::quotient_dim(int d) const {
    return std::int64_t(std_monomials(d).size());
}

std::int64_t IdealBasis::ideal_dim(int d) const { return graded_dim(d) - quotient_dim(d); }

std::vector<Poly> IdealBasis::graded_piece_basis(int d) const {
    std::vector<Poly> out;
    for (const auto& g : reduced_gb()) {
        int dg = g.degree();
        if (dg < 0 || dg > d) continue;
        for (const auto& m : monomials_of_degree(unsigned(d - dg)))
            out.push_back(g.mul_term(m, field_->one()));
    }
    return out;
}

IdealBasis with_order(const IdealBasis& I, Order ord) {
    return IdealBasis(I.field(), I.generators(), ord);
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    if (a.order() != b.order()) {
        IdealBasis b2 = with_order(b, a.order());
        const auto &ga = a.reduced_gb(), &gb = b2.reduced_gb();
        return ga == gb;
    }
    return a.reduced_gb() == b.reduced_gb();
}

IdealBasis eliminate(const IdealBasis& I, int var) {
    Order ord = var == 0 ? Order::elim_u : var == 1 ? Order::elim_v : Order::elim_w;
    IdealBasis J = with_order(I, ord);
    std::vector<Poly> kept;
    for (const auto& g : J.reduced_gb()) {
        bool free = true;
        for (const auto& t : g.terms())
            if (t.m.e[var] != 0) { free = false; break; }
        if (free) kept.push_back(g);
    }
    return IdealBasis(I.field(), std::move(kept), I.order());
}

// ---------------------------------------------------------------------------
// colon / saturation

namespace {

// invertible matrix A (and inverse) whose last row is the coefficient row of
// the linear form l, so that l(A^{-1} y) = y_w
std::pair<std::array<std::array<FieldElem, 3>, 3>, std::array<std::array<FieldElem, 3>, 3>>
frame_for_linear_form(const Poly& l) {
    const FieldPtr& F = l.field();
    std::array<FieldElem, 3> c{F->zero(), F->zero(), F->zero()};
    for (int j = 0; j < 3; ++j) {
        Monomial m;
        m.e[j] = 1;
        c[j] = l.coeff(m);
    }
    // complete with two standard basis rows keeping the matrix invertible
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            std::array<std::array<FieldElem, 3>, 3> A{{{F->zero(), F->zero(), F->zero()},
                                                       {F->zero(), F->zero(), F->zero()},
                                                       {F->zero(), F->zero(), F->zero()}}};
            A[0][a] = F->one();
            A[1][b] = F->one();
            A[2] = c;
            Poly l1 = Poly::variable(F, a), l2 = Poly::variable(F, b);
            Poly l3(F);
            for (int j = 0; j < 3; ++j) l3 = l3 + Poly::variable(F, j).scaled(c[j]);
            try {
                LinearTriple lt(l1, l2, l3);
                return {A, lt.inverse_matrix()};
            } catch (const error&) {
                continue;
            }
        }
    fail(errc::internal, "degenerate linear form");
}

Poly divide_out_w(const Poly& g, bool all_powers) {
    // divide by w (once, or by the full w-power)
    unsigned minw = UINT32_MAX;
    for (const auto& t : g.terms()) minw = std::min(minw, t.m.e[2]);
    if (minw == 0 || g.is_zero()) return g;
    unsigned k = all_powers ? minw : 1u;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
        Monomial m = t.m;
        m.e[2] -= k;
        ts.push_back({m, t.c});
    }
    return Poly(g.field(), std::move(ts));
}

bool all_homogeneous(const std::vector<Poly>& v) {
    for (const auto& g : v)
        if (!g.is_homogeneous()) return false;
    return true;
}

IdealBasis colon_by_w(const IdealBasis& I, bool saturate_fully) {
    // reverse-lex shortcut: on a reduced grevlex basis of a homogeneous
    // ideal, dividing each element by w (or its full w-power) generates
    // (I : w) (resp. (I : w^inf))
    IdealBasis J = with_order(I, Order::grevlex);
    for (int round = 0; round < 64; ++round) {
        bool any = false;
        std::vector<Poly> divided;
        for (const auto& g : J.reduced_gb()) {
            Poly d = divide_out_w(g, saturate_fully);
            if (!(d == g)) any = true;
            divided.push_back(std::move(d));
        }
        J = IdealBasis(I.field(), std::move(divided), Order::grevlex);
        if (!any || !saturate_fully) break;
    }
    return J;
}

} // namespace

std::vector<std::vector<Poly>> syzygies_of_tuple(const std::vector<Poly>& inputs, Order ord) {
    if (inputs.empty()) return {};
    Engine eng{ord, inputs[0].field(), GroebnerGuard{}, 0};
    auto res = buchberger(eng, inputs, true);
    std::vector<std::vector<Poly>> out;
    for (auto& tag : res.syzygies) {
        std::vector<Poly> s;
        s.reserve(tag.size());
        bool nonzero = false;
        for (auto& tv : tag) {
            Poly p = eng.to_poly(std::move(tv));
            if (!p.is_zero()) nonzero = true;
            s.push_back(std::move(p));
        }
        if (nonzero) out.push_back(std::move(s));
    }
    return out;
}

IdealBasis colon(const IdealBasis& I, const Poly& f) {
    if (f.is_zero()) fail(errc::internal, "colon by zero");
    if (f.degree() == 0) return I;
    if (f.degree() == 1 && f.is_homogeneous() && all_homogeneous(I.generators())) {
        auto [A, Ainv] = frame_for_linear_form(f);
        std::vector<Poly> moved;
        for (const auto& g : I.generators()) moved.push_back(linear_change(g, Ainv));
        IdealBasis J = colon_by_w(IdealBasis(I.field(), std::move(moved), Order::grevlex), false);
        std::vector<Poly> back;
        for (const auto& g : J.reduced_gb()) back.push_back(linear_change(g, A));
        return IdealBasis(I.field(), std::move(back), I.order());
    }
    // general case through syzygies of (f, reduced GB of I)
    std::vector<Poly> tuple{f};
    for (const auto& g : I.reduced_gb()) tuple.push_back(g);
    auto syz = syzygies_of_tuple(tuple, Order::grevlex);
    std::vector<Poly> gens = I.generators();
    for (auto& s : syz)
        if (!s[0].is_zero()) gens.push_back(s[0]);
    return IdealBasis(I.field(), std::move(gens), I.order());
}

IdealBasis saturate(const IdealBasis& I, const Poly& f) {
    if (f.is_zero()) fail(errc::internal, "saturation by zero");
    if (f.degree() == 0) return I;
    if (f.degree() == 1 && f.is_homogeneous() && all_homogeneous(I.generators())) {
        auto [A, Ainv] = frame_for_linear_form(f);
        std::vector<Poly> moved;
        for (const auto& g : I.generators()) moved.push_back(linear_change(g, Ainv));
        IdealBasis J = colon_by_w(IdealBasis(I.field(), std::move(moved), Order::grevlex), true);
        std::vector<Poly> back;
        for (const auto& g : J.reduced_gb()) back.push_back(linear_change(g, A));
        return IdealBasis(I.field(), std::move(back), I.order());
    }
    IdealBasis cur = I;
    for (int round = 0; round < 256; ++round) {
        IdealBasis next = colon(cur, f);
        if (ideal_equal(next, cur)) return cur;
        cur = std::move(next);
    }
    fail(errc::resource_exhausted, "saturation did not stabilize");
}

IdealBasis saturate_irrelevant(const IdealBasis& I, std::uint64_t seed) {
    const FieldPtr& F = I.field();
    std::mt19937_64 rng(seed ^ 0x1dea1ULL);
    auto random_linear = [&] {
        while (true) {
            Poly l(F);
            for (int j = 0; j < 3; ++j) l = l + Poly::variable(F, j).scaled(F->random_elem(rng));
            if (!l.is_zero() && l.degree() == 1) return l;
        }
    };
    IdealBasis cur = saturate(I, random_linear());
    for (int attempt = 0; attempt < 32; ++attempt) {
        IdealBasis again = saturate(cur, random_linear());
        if (ideal_equal(again, cur)) return cur;
        cur = std::move(again);
    }
    fail(errc::resource_exhausted, "irrelevant-ideal saturation did not stabilize");
}

// ---------------------------------------------------------------------------
// dimension test and radical

bool proj_zero_dimensional(const IdealBasis& I) {
    const auto& gb = I.reduced_gb();
    if (gb.empty()) return false; // zero ideal: the whole plane
    // Krull dim of S/LT <= 1  <=>  no 2-variable coordinate plane survives:
    // for each pair of variables some lead monomial uses only that pair
    for (int skip = 0; skip < 3; ++skip) {
        bool found = false;
        for (const auto& g : gb) {
            const Monomial& m = g.leading_term(I.order()).m;
            if (m.e[skip] == 0) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

UPoly chart_eliminant(const IdealBasis& affine_ideal, int keep_var, int elim_var) {
    IdealBasis J = eliminate(affine_ideal, elim_var);
    const FieldPtr& F = affine_ideal.field();
    UPoly acc = upoly_zero(F);
    for (const auto& g : J.reduced_gb()) {
        // expect univariate in keep_var
        std::vector<FieldElem> cs;
        bool ok = true;
        for (const auto& t : g.terms()) {
            for (int v = 0; v < 3; ++v)
                if (v != keep_var && t.m.e[v] != 0) { ok = false; break; }
            if (!ok) break;
            if (cs.size() <= t.m.e[keep_var]) cs.resize(t.m.e[keep_var] + 1, F->zero());
            cs[t.m.e[keep_var]] = t.c;
        }
        if (!ok) continue;
        UPoly u = upoly_from(F, std::move(cs));
        acc = acc.is_zero() ? u : upoly_gcd(acc, u);
    }
    return upoly_monic(acc);
}

IdealBasis radical_zero_dim(const IdealBasis& I, std::uint64_t seed) {
    const FieldPtr& F = I.field();
    if (!all_homogeneous(I.generators()))
        fail(errc::not_homogeneous, "radical expects homogeneous generators");
    if (!proj_zero_dimensional(I))
        fail(errc::not_zero_dimensional, "staircase is not zero-dimensional");

    std::mt19937_64 rng(seed ^ 0xadd1caULL);
    for (int attempt = 0; attempt < 40; ++attempt) {
        std::array<std::array<FieldElem, 3>, 3> M, Minv;
        if (attempt == 0) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    M[i][j] = i == j ? F->one() : F->zero();
                    Minv[i][j] = M[i][j];
                }
        } else {
            std::tie(M, Minv) = random_invertible_matrix(F, rng);
        }
        std::vector<Poly> moved;
        for (const auto& g : I.generators()) moved.push_back(linear_change(g, M));
        IdealBasis J(F, moved, Order::grevlex);

        // no zeros on the line w = 0: the restrictions to w=0 must have
        // trivial common divisor as binary forms in (u, v)
        std::vector<FieldElem> common;
        bool first = true;
        for (const auto& g : J.reduced_gb()) {
            Poly r(F);
            std::vector<Term> ts;
            for (const auto& t : g.terms())
                if (t.m.e[2] == 0) ts.push_back(t);
            Poly restr(F, std::move(ts));
            int d = g.degree();
            std::vector<FieldElem> bf(size_t(d + 1), F->zero());
            for (const auto& t : restr.terms()) bf[t.m.e[0]] = t.c;
            common = first ? bf : binform_gcd(F, common, bf);
            first = false;
            if (binform_degree(common) == 0) break; // already trivial
        }
        if (first) continue;
        // degree 0 certifies an empty intersection with the line w=0; the
        // zero form (degree -1) means every element vanished on it
        if (binform_degree(common) != 0) continue;

        // affine chart w = 1
        std::vector<Poly> aff;
        for (const auto& g : J.reduced_gb()) aff.push_back(g.dehomogenize(2));
        IdealBasis A(F, aff, Order::grevlex);
        if (A.is_one()) {
            // empty subscheme: radical is the irrelevant ideal
            std::vector<Poly> m{Poly::variable(F, 0), Poly::variable(F, 1), Poly::variable(F, 2)};
            return IdealBasis(F, std::move(m), I.order());
        }
        UPoly pu = chart_eliminant(A, 0, 1);
        UPoly pv = chart_eliminant(A, 1, 0);
        if (pu.is_zero() || pv.is_zero()) continue;
        std::int64_t p = F->characteristic();
        if (p != 0 && p <= std::max(pu.deg(), pv.deg()))
            fail(errc::characteristic_too_small,
                 "radical needs characteristic beyond the eliminant degrees");
        UPoly su = upoly_squarefree_part(pu), sv = upoly_squarefree_part(pv);
        auto to_poly = [&](const UPoly& q, int var) {
            std::vector<Term> ts;
            for (size_t i = 0; i < q.c.size(); ++i) {
                if (q.c[i].is_zero()) continue;
                Monomial m;
                m.e[var] = unsigned(i);
                ts.push_back({m, q.c[i]});
            }
            return Poly(F, std::move(ts));
        };
        std::vector<Poly> rg = aff;
        rg.push_back(to_poly(su, 0));
        rg.push_back(to_poly(sv, 1));
        IdealBasis R(F, std::move(rg), Order::grevlex);

        std::vector<Poly> back;
        for (const auto& g : R.reduced_gb()) back.push_back(linear_change(g.homogenize(2), Minv));
        IdealBasis out(F, std::move(back), I.order());
        for (const auto& g : I.generators())
            if (!out.contains(g)) fail(errc::internal, "radical lost a generator");
        return out;
    }
    fail(errc::resource_exhausted, "no usable coordinate change for the radical");
}

} // namespace cuspidal
