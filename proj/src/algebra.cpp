#include "kam/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace kam {

const char* flavor_name(Flavor f) {
    switch (f.family) {
        case Family::UHat: return f.quotiented ? "hatK" : "hatU";
        case Family::UTilde: return f.quotiented ? "tildeK" : "tildeU";
        case Family::UPlain: return f.quotiented ? "K" : "U";
    }
    return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& s) {
    using namespace flavors;
    if (s == "hatU") return Uhat;
    if (s == "tildeU") return Utilde;
    if (s == "U") return Uplain;
    if (s == "hatK") return Khat;
    if (s == "tildeK") return Ktilde;
    if (s == "K") return Kplain;
    return std::nullopt;
}

bool legal_subscript(Family fam, long long s) {
    if (s < 0) return false;
    if (fam == Family::UTilde && s % 2 != 0) return false;
    return true;
}

long long top_degree(const Monomial& m, const PrimeCtx& ctx) {
    long long t = 0, pw = 1;
    long long scale = m.family == Family::UPlain ? ctx.p() - 1 : 1;
    for (int s : m.subs) {
        t += 2 * pw * scale * s;
        pw *= ctx.p();
    }
    return t;
}

Bidegree bidegree_of(const Monomial& m, const PrimeCtx& ctx) {
    return {int(m.length()), top_degree(m, ctx)};
}

bool monomial_less(const Monomial& a, const Monomial& b, const PrimeCtx& ctx) {
    if (a.length() != b.length()) return a.length() < b.length();
    long long ta = top_degree(a, ctx), tb = top_degree(b, ctx);
    if (ta != tb) return ta < tb;
    return a.subs < b.subs;
}

Element Element::single(Flavor f, std::vector<int> subs, uint32_t coeff, const PrimeCtx& ctx) {
    Element r(f);
    for (int s : subs)
        if (!legal_subscript(f.family, s)) return r;
    r.add_term(Monomial{f.family, std::move(subs)}, coeff, ctx);
    return r;
}

Element Element::unit(Flavor f) {
    Element r(f);
    r.terms_[Monomial{f.family, {}}] = 1;
    return r;
}

void Element::add_term(const Monomial& m, uint32_t c, const PrimeCtx& ctx) {
    c %= ctx.p();
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = ctx.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

uint32_t Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

Element add(const Element& a, const Element& b, const PrimeCtx& ctx) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("flavor mismatch in add");
    Element r = a;
    for (auto& [m, c] : b.terms()) r.add_term(m, c, ctx);
    return r;
}

Element sub(const Element& a, const Element& b, const PrimeCtx& ctx) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("flavor mismatch in sub");
    Element r = a;
    for (auto& [m, c] : b.terms()) r.add_term(m, ctx.neg(c), ctx);
    return r;
}

Element scale(const Element& a, uint32_t c, const PrimeCtx& ctx) {
    Element r(a.flavor());
    for (auto& [m, cc] : a.terms()) r.add_term(m, ctx.mul(cc, c), ctx);
    return r;
}

Element multiply(const Element& a, const Element& b, const PrimeCtx& ctx) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("flavor mismatch in multiply");
    Element r(a.flavor());
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) {
            Monomial m{ma.family, ma.subs};
            m.subs.insert(m.subs.end(), mb.subs.begin(), mb.subs.end());
            r.add_term(m, ctx.mul(ca, cb), ctx);
        }
    return r;
}

std::optional<Bidegree> homogeneous_bidegree(const Element& x, const PrimeCtx& ctx) {
    std::optional<Bidegree> bd;
    for (auto& [m, c] : x.terms()) {
        Bidegree b = bidegree_of(m, ctx);
        if (!bd) bd = b;
        else if (*bd != b) return std::nullopt;
    }
    return bd;
}

AdmissibleInfo excess_admissible(const Monomial& m) {
    AdmissibleInfo info{true, std::nullopt};
    for (size_t k = 1; k < m.subs.size(); ++k)
        if (m.subs[k - 1] > m.subs[k]) { info.admissible = false; break; }
    if (m.length() == 2 && info.admissible)
        info.excess = (long long)m.subs[1] - m.subs[0];
    return info;
}

Element apply_endo(const Element& x, EndoKind kind, const PrimeCtx& ctx) {
    Family fam = x.flavor().family;
    switch (kind) {
        case EndoKind::AlphaHat:
            if (fam != Family::UHat) throw std::invalid_argument("alpha-hat needs hatU/hatK");
            break;
        case EndoKind::AlphaTilde:
            if (fam != Family::UTilde) throw std::invalid_argument("alpha-tilde needs tildeU/tildeK");
            break;
        case EndoKind::Alpha:
            if (fam != Family::UPlain) throw std::invalid_argument("alpha needs U/K");
            break;
        default: break;
    }
    Element r(x.flavor());
    if (kind == EndoKind::Kappa) {
        for (auto& [m, c] : x.terms()) {
            Monomial mm{fam, {0}};
            mm.subs.insert(mm.subs.end(), m.subs.begin(), m.subs.end());
            r.add_term(mm, c, ctx);
        }
        return r;
    }
    int shift = kind == EndoKind::AlphaTilde ? 2 : 1;
    for (auto& [m, c] : x.terms()) {
        Monomial mm{fam, m.subs};
        bool dead = false;
        for (int& s : mm.subs) {
            if (kind == EndoKind::Verschiebung) {
                if (s % int(ctx.p()) != 0) { dead = true; break; }
                s /= int(ctx.p());
            } else {
                s -= shift;
                if (s < 0) { dead = true; break; }
            }
        }
        if (!dead) r.add_term(mm, c, ctx);
    }
    return r;
}

namespace {

void enumerate_rec(Family fam, int pos, int n, long long T, const PrimeCtx& ctx,
                   std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == n) {
        if (T == 0) out.push_back(Monomial{fam, cur});
        return;
    }
    // T = w + p * T_rest with w the weight at this position
    long long step = fam == Family::UTilde ? 2 : 1;
    long long wscale = fam == Family::UPlain ? ctx.p() - 1 : 1;
    for (long long w = 0; w <= T; ++w) {
        if ((T - w) % ctx.p() != 0) continue;
        if (w % wscale != 0) continue;
        long long s = w / wscale;
        if (s % step != 0 && fam == Family::UTilde) continue;
        cur[pos] = int(s);
        enumerate_rec(fam, pos + 1, n, (T - w) / ctx.p(), ctx, cur, out);
    }
}

}  // namespace

std::vector<Monomial> enumerate_basis_monomials(Flavor f, Bidegree bd, const PrimeCtx& ctx) {
    std::vector<Monomial> out;
    if (bd.n < 0 || bd.t < 0 || bd.t % 2 != 0) return out;
    if (bd.n == 0) {
        if (bd.t == 0) out.push_back(Monomial{f.family, {}});
        return out;
    }
    std::vector<int> cur(bd.n);
    enumerate_rec(f.family, 0, bd.n, bd.t / 2, ctx, cur, out);
    return out;
}

Element project(const Element& x, Flavor target, const PrimeCtx& ctx) {
    Element r(target);
    long long p1 = ctx.p() - 1;
    for (auto& [m, c] : x.terms()) {
        Monomial mm{target.family, {}};
        mm.subs.reserve(m.subs.size());
        bool dead = false;
        for (int s : m.subs) {
            long long e = m.family == Family::UPlain ? s * p1 : s;  // e-subscript
            long long out = target.family == Family::UPlain ? e / p1 : e;
            if (target.family == Family::UPlain && e % p1 != 0) { dead = true; break; }
            if (!legal_subscript(target.family, out)) { dead = true; break; }
            mm.subs.push_back(int(out));
        }
        if (!dead) r.add_term(mm, c, ctx);
    }
    return r;
}

}  // namespace kam
