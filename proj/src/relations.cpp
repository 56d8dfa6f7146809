#include "kam/relations.hpp"

#include <stdexcept>

namespace kam {

namespace {

inline long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}
inline long long ceildiv(long long a, long long b) { return -floordiv(-a, b); }

inline long long emod(long long a, long long b) {
    long long r = a % b;
    return r < 0 ? r + b : r;
}

void add_pair(Element& out, Flavor f, long long l, long long k, uint32_t c, const PrimeCtx& ctx) {
    if (c == 0) return;
    if (!legal_subscript(f.family, l) || !legal_subscript(f.family, k)) return;
    Monomial m{f.family, {int(l), int(k)}};
    out.add_term(m, c, ctx);
}

}  // namespace

Element theta(long long i, long long j, Flavor f, const PrimeCtx& ctx) {
    if (f.family == Family::UPlain)
        throw std::invalid_argument("theta is e-indexed; use theta_d for U/K");
    const long long p = ctx.p();
    Element out(f);
    long long klo = std::max<long long>(0, ceildiv(i + (p - 1) * j, p));
    long long khi = floordiv(i + p * j, p);
    for (long long k = klo; k <= khi; ++k) {
        if (emod(p * k - i, p - 1) != 0) continue;
        long long q = (p * k - i) / (p - 1);
        uint32_t c = ctx.mul(ctx.sign(q), ctx.binom(k - j - 1, q - j));
        add_pair(out, f, i + p * j - p * k, k, c, ctx);
    }
    return out;
}

Element theta_d(long long i, long long j, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    Element out(flavors::Uplain);
    long long llo = std::max<long long>(0, ceildiv(i + (p - 1) * j, p));
    long long lhi = floordiv(i + p * j, p);
    for (long long l = llo; l <= lhi; ++l) {
        uint32_t c = ctx.mul(ctx.sign(p * l - i), ctx.binom((p - 1) * (l - j) - 1, p * l - i - (p - 1) * j));
        add_pair(out, flavors::Uplain, i + p * j - p * l, l, c, ctx);
    }
    return out;
}

Element full_relation(long long i, long long j, Flavor f, const PrimeCtx& ctx) {
    Element lead(f);
    if (legal_subscript(f.family, i) && legal_subscript(f.family, j))
        lead = Element::single(f, {int(i), int(j)}, 1, ctx);
    Element th = f.family == Family::UPlain ? theta_d(i, j, ctx) : theta(i, j, f, ctx);
    if (f.family == Family::UPlain && th.flavor() != f) {
        Element fixed(f);
        for (auto& [m, c] : th.terms()) fixed.add_term(Monomial{f.family, m.subs}, c, ctx);
        th = fixed;
    }
    return sub(lead, th, ctx);
}

Element theta_of(const Element& x, const PrimeCtx& ctx) {
    Element out(x.flavor());
    for (auto& [m, c] : x.terms()) {
        if (m.length() != 2) throw std::invalid_argument("theta_of needs length-2 terms");
        Element th = x.flavor().family == Family::UPlain
                         ? theta_d(m.subs[0], m.subs[1], ctx)
                         : theta(m.subs[0], m.subs[1], x.flavor(), ctx);
        for (auto& [tm, tc] : th.terms())
            out.add_term(Monomial{x.flavor().family, tm.subs}, ctx.mul(tc, c), ctx);
    }
    return out;
}

Element mays_relation_defect(long long r, long long s, Flavor f, const PrimeCtx& ctx) {
    if (f.family == Family::UPlain)
        throw std::invalid_argument("mays_relation_defect is e-indexed");
    const long long p = ctx.p();
    Element out(f);
    auto side = [&](long long rr, long long ss, bool subtract) {
        for (long long k = 0; ss - k * (p - 1) >= 0; ++k) {
            uint32_t c = ctx.mul(ctx.sign(k + ss), ctx.binom(ss - (p - 1) * k, k));
            if (subtract) c = ctx.neg(c);
            add_pair(out, f, rr + (p * k - ss) * (p - 1), ss - k * (p - 1), c, ctx);
        }
    };
    side(r, s, false);
    side(s, r, true);
    return out;
}

Element eta(const Element& x, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    Element out(x.flavor());
    for (auto& [m, c] : x.terms()) {
        if (m.length() != 2) throw std::invalid_argument("eta needs length-2 terms");
        long long i = m.subs[0], j = m.subs[1];
        add_pair(out, x.flavor(), i + p - 1, j, c, ctx);
        add_pair(out, x.flavor(), i - (p - 1) * (p - 1), j + p - 1, c, ctx);
    }
    return out;
}

Element ElemSeries::coeff(long long r, long long s) const {
    auto it = coeffs.find({r, s});
    return it == coeffs.end() ? Element(flavor) : it->second;
}

void ElemSeries::add(long long r, long long s, const Element& e, const PrimeCtx& ctx) {
    if (r + s > maxdeg || e.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace({r, s}, e);
    if (!inserted) {
        it->second = kam::add(it->second, e, ctx);
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

ElemSeries series_mul(const ElemSeries& a, const ElemSeries& b, const PrimeCtx& ctx) {
    ElemSeries out{a.flavor, std::min(a.maxdeg, b.maxdeg), {}};
    for (auto& [ka, ea] : a.coeffs)
        for (auto& [kb, eb] : b.coeffs) {
            long long r = ka.first + kb.first, s = ka.second + kb.second;
            if (r + s > out.maxdeg) continue;
            out.add(r, s, multiply(ea, eb, ctx), ctx);
        }
    return out;
}

ElemSeries series_sub(const ElemSeries& a, const ElemSeries& b, const PrimeCtx& ctx) {
    ElemSeries out = a;
    for (auto& [k, e] : b.coeffs) {
        Element neg = scale(e, ctx.p() - 1, ctx);
        out.add(k.first, k.second, neg, ctx);
    }
    return out;
}

ElemSeries gen_series(Flavor f, const MPoly& X, long long maxdeg, const PrimeCtx& ctx) {
    ElemSeries out{f, maxdeg, {}};
    long long mindeg = X.min_total_degree();
    if (mindeg <= 0) throw std::invalid_argument("gen_series needs a series with no constant term");
    MPoly Xi = MPoly::constant(X.nvars(), 1);
    for (long long i = 0; i * mindeg <= maxdeg; ++i) {
        if (i > 0) Xi = Xi.mul(X, ctx, maxdeg);
        if (Xi.is_zero()) break;
        Element gen = Element::single(f, {int(i)}, 1, ctx);
        if (gen.is_zero()) continue;  // flavor-illegal subscript
        for (auto& [e, c] : Xi.terms())
            out.add(e[0], e[1], scale(gen, c, ctx), ctx);
    }
    return out;
}

MPoly phi_of(const MPoly& a, const MPoly& b, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    return a.mul(a.pow(p - 1, ctx).sub(b.pow(p - 1, ctx), ctx), ctx);
}

MPoly psi_of(const MPoly& a, const MPoly& b, const PrimeCtx& ctx) {
    const long long p = ctx.p();
    return a.mul(a.sub(b, ctx).pow(p - 1, ctx), ctx);
}

namespace {

std::map<SeriesKey, Element> series_defect(Flavor f, bool use_psi, long long D, const PrimeCtx& ctx) {
    MPoly u = MPoly::variable(2, 0), v = MPoly::variable(2, 1);
    auto comp = [&](const MPoly& a, const MPoly& b) {
        return use_psi ? psi_of(a, b, ctx) : phi_of(a, b, ctx);
    };
    ElemSeries lhs = series_mul(gen_series(f, u, D, ctx), gen_series(f, comp(v, u), D, ctx), ctx);
    ElemSeries rhs = series_mul(gen_series(f, v, D, ctx), gen_series(f, comp(u, v), D, ctx), ctx);
    return series_sub(lhs, rhs, ctx).coeffs;
}

}  // namespace

std::map<SeriesKey, Element> e_series_defect(long long D, Flavor f, const PrimeCtx& ctx) {
    if (f.family == Family::UPlain) throw std::invalid_argument("e_series_defect is e-indexed");
    return series_defect(f, false, D, ctx);
}

std::map<SeriesKey, Element> d_series_defect(long long D, const PrimeCtx& ctx) {
    return series_defect(flavors::Uplain, true, D, ctx);
}

bool phi_composition_identity_holds(const PrimeCtx& ctx) {
    MPoly a = MPoly::variable(3, 0), b = MPoly::variable(3, 1), c = MPoly::variable(3, 2);
    MPoly lhs = phi_of(phi_of(a, b, ctx), phi_of(c, b, ctx), ctx);
    MPoly rhs = phi_of(phi_of(a, c, ctx), phi_of(b, c, ctx), ctx);
    return lhs == rhs;
}

}  // namespace kam
