#include "kam/nishida.hpp"

#include <stdexcept>

namespace kam {

namespace {

// Recursion on e-subscript words (families UHat/UTilde share it; UPlain maps
// through e-subscripts).  Returns terms in the given flavor.
Element act_mono(long long i, const std::vector<int>& esubs, size_t pos, Flavor f,
                 const PrimeCtx& ctx) {
    const long long p = ctx.p();
    Element out(f);
    if (i < 0) return out;
    if (pos == esubs.size()) {
        if (i == 0) return Element::unit(f);
        return out;
    }
    long long j = esubs[pos];
    if ((j - i) % p != 0) return out;
    long long M = i + (j - i) / p;
    if (M < 0) return out;
    long long kmax = std::min(i, M / (p - 1));
    for (long long k = 0; k <= kmax; ++k) {
        uint32_t c = ctx.mul(ctx.sign(i - k), ctx.binom(M, i - k));
        if (c == 0) continue;
        long long lead = M - (p - 1) * k;  // e-subscript of the emitted generator
        Element tail = act_mono(k, esubs, pos + 1, f, ctx);
        for (auto& [tm, tc] : tail.terms()) {
            long long s = lead;
            if (f.family == Family::UPlain) {
                if (s % (p - 1) != 0) continue;  // cannot happen; guard anyway
                s /= p - 1;
            }
            if (!legal_subscript(f.family, s)) continue;
            Monomial m{f.family, {int(s)}};
            m.subs.insert(m.subs.end(), tm.subs.begin(), tm.subs.end());
            out.add_term(m, ctx.mul(c, tc), ctx);
        }
    }
    return out;
}

}  // namespace

Element act_d(long long i, const Element& x, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    Element out(x.flavor());
    for (auto& [m, c] : x.terms()) {
        std::vector<int> esubs = m.subs;
        if (m.family == Family::UPlain)
            for (int& s : esubs) s *= int(p) - 1;
        Element part = act_mono(i, esubs, 0, x.flavor(), ctx);
        for (auto& [pm, pc] : part.terms()) out.add_term(pm, ctx.mul(pc, c), ctx);
    }
    return out;
}

Element act_word(const std::vector<long long>& word, const Element& x, const PrimeCtx& ctx) {
    Element cur = x;
    for (long long i : word) cur = act_d(i, cur, ctx);
    return cur;
}

Element act_word(const Element& kword, const Element& x, const PrimeCtx& ctx) {
    if (kword.flavor().family != Family::UPlain)
        throw std::invalid_argument("act_word needs a U/K word element");
    Element out(x.flavor());
    for (auto& [m, c] : kword.terms()) {
        std::vector<long long> w(m.subs.begin(), m.subs.end());
        out = add(out, scale(act_word(w, x, ctx), c, ctx), ctx);
    }
    return out;
}

bool check_descent(const Element& relation_row, long long i, const PrimeCtx& ctx) {
    if (!relation_row.flavor().quotiented)
        throw std::invalid_argument("check_descent needs a quotiented flavor");
    return reduce_oracle(act_d(i, relation_row, ctx), ctx).is_zero();
}

DualElement steenrod_P_dual(long long j, const DualElement& f, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    if (f.bd.t % 2 != 0) throw std::invalid_argument("dual degree must be even");
    long long q = f.bd.t / 2;
    Bidegree target{f.bd.n, f.bd.t + 2 * (p - 1) * j};
    DualElement r{f.flavor, target, {}};
    if (j < 0 || j > q) return r;  // unstable range
    std::vector<Monomial> basis = f.flavor.quotiented
                                      ? admissible_basis(f.flavor, target, ctx)
                                      : enumerate_basis_monomials(f.flavor, target, ctx);
    uint32_t sgn = ctx.sign(q - j);
    for (auto& m : basis) {
        Element xm(f.flavor);
        xm.add_term(m, 1, ctx);
        uint32_t v = ctx.mul(sgn, pair_with(f, act_d(q - j, xm, ctx), ctx));
        if (v) r.coeffs[m] = v;
    }
    return r;
}

std::map<SeriesKey, Element> nishida_series_defect(long long D, const Element& x, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    Flavor f = x.flavor();
    if (f.family == Family::UPlain)
        throw std::invalid_argument("nishida_series_defect pairs e-generators with x; use hatU/tildeU");
    MPoly u = MPoly::variable(2, 0), v = MPoly::variable(2, 1);

    // LHS: d(u^{p-1}) * (e(v) x): coefficient at (i(p-1), j) is d_i * (e_j x).
    ElemSeries lhs{f, D, {}};
    for (long long jj = 0; jj <= D; ++jj) {
        Element ej = Element::single(f, {int(jj)}, 1, ctx);
        if (ej.is_zero()) continue;
        Element ejx = multiply(ej, x, ctx);
        for (long long i = 0; i * (p - 1) + jj <= D; ++i)
            lhs.add(i * (p - 1), jj, act_d(i, ejx, ctx), ctx);
    }

    // RHS: e(phi(v,u)) (d(phi(u,v)^{p-1}) * x)
    MPoly A = phi_of(u, v, ctx).pow(p - 1, ctx, D);
    ElemSeries inner{f, D, {}};
    {
        MPoly Ak = MPoly::constant(2, 1);
        long long mindeg = A.min_total_degree();
        for (long long k = 0; mindeg * k <= D; ++k) {
            if (k > 0) Ak = Ak.mul(A, ctx, D);
            if (Ak.is_zero()) break;
            Element dx = act_d(k, x, ctx);
            if (dx.is_zero()) continue;
            for (auto& [e, c] : Ak.terms()) inner.add(e[0], e[1], scale(dx, c, ctx), ctx);
        }
    }
    ElemSeries rhs = series_mul(gen_series(f, phi_of(v, u, ctx), D, ctx), inner, ctx);

    return series_sub(lhs, rhs, ctx).coeffs;
}

}  // namespace kam
