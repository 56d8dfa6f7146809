#include "kam/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kam {

MPoly MPoly::constant(int nvars, uint32_t c) {
    MPoly r(nvars);
    if (c) r.terms_[Expo(nvars, 0)] = c;
    return r;
}

MPoly MPoly::variable(int nvars, int idx) {
    MPoly r(nvars);
    Expo e(nvars, 0);
    e.at(idx) = 1;
    r.terms_[e] = 1;
    return r;
}

void MPoly::add_term(const Expo& e, uint32_t c, const PrimeCtx& ctx) {
    if (c % ctx.p() == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c % ctx.p();
    } else {
        it->second = ctx.add(it->second, c % ctx.p());
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::add(const MPoly& o, const PrimeCtx& ctx) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c, ctx);
    return r;
}

MPoly MPoly::sub(const MPoly& o, const PrimeCtx& ctx) const {
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, ctx.neg(c), ctx);
    return r;
}

MPoly MPoly::mul(const MPoly& o, const PrimeCtx& ctx, long long maxdeg) const {
    MPoly r(nvars_);
    Expo e(nvars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            long long d = 0;
            for (int v = 0; v < nvars_; ++v) {
                e[v] = ea[v] + eb[v];
                d += e[v];
            }
            if (maxdeg >= 0 && d > maxdeg) continue;
            r.add_term(e, ctx.mul(ca, cb), ctx);
        }
    return r;
}

MPoly MPoly::pow(long long e, const PrimeCtx& ctx, long long maxdeg) const {
    MPoly r = constant(nvars_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(b, ctx, maxdeg);
        e >>= 1;
        if (e) b = b.mul(b, ctx, maxdeg);
    }
    return r;
}

MPoly MPoly::scale(uint32_t c, const PrimeCtx& ctx) const {
    MPoly r(nvars_);
    for (auto& [e, cc] : terms_) r.add_term(e, ctx.mul(cc, c), ctx);
    return r;
}

MPoly MPoly::subst(const std::vector<MPoly>& images, const PrimeCtx& ctx) const {
    int out_vars = images.empty() ? 0 : images[0].nvars();
    MPoly r(out_vars);
    for (auto& [e, c] : terms_) {
        MPoly term = constant(out_vars, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) term = term.mul(images.at(v).pow(e[v], ctx), ctx);
        r = r.add(term, ctx);
    }
    return r;
}

long long MPoly::total_degree() const {
    long long d = -1;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0LL));
    return d;
}

long long MPoly::min_total_degree() const {
    long long d = -1;
    for (auto& [e, c] : terms_) {
        long long s = std::accumulate(e.begin(), e.end(), 0LL);
        if (d < 0 || s < d) d = s;
    }
    return d;
}

std::string MPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    // degree-graded then lex, matching the element renderer's spirit
    std::vector<std::pair<Expo, uint32_t>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
        long long da = std::accumulate(a.first.begin(), a.first.end(), 0LL);
        long long db = std::accumulate(b.first.begin(), b.first.end(), 0LL);
        return da != db ? da < db : a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : v) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) {
                if (any) mono << "*";
                any = true;
                mono << var << (i + 1);
                if (e[i] > 1) mono << "^" << e[i];
            }
        if (!any) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace kam
