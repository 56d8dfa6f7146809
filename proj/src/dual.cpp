#include "kam/dual.hpp"

#include <stdexcept>

#include "kam/coalgebra.hpp"

namespace kam {

DualElement dual_zero(Flavor f, Bidegree bd) { return DualElement{f, bd, {}}; }

DualElement dual_basis_functional(Flavor f, const Monomial& m, const PrimeCtx& ctx) {
    DualElement r{f, bidegree_of(m, ctx), {}};
    if (f.quotiented && !is_basis_monomial(f, m, ctx))
        throw std::invalid_argument("dual_basis_functional needs a basis monomial");
    r.coeffs[m] = 1;
    return r;
}

uint32_t pair_with(const DualElement& f, const Element& x, const PrimeCtx& ctx) {
    Element y = x;
    if (f.flavor.quotiented) y = normalize(x, ctx);
    uint32_t s = 0;
    for (auto& [m, c] : y.terms()) {
        auto it = f.coeffs.find(m);
        if (it != f.coeffs.end()) s = ctx.add(s, ctx.mul(it->second, c));
    }
    return s;
}

DualElement dual_add(const DualElement& a, const DualElement& b, const PrimeCtx& ctx) {
    if (a.flavor != b.flavor || a.bd != b.bd) throw std::invalid_argument("dual_add mismatch");
    DualElement r = a;
    for (auto& [m, c] : b.coeffs) {
        uint32_t v = ctx.add(r.coeffs.count(m) ? r.coeffs[m] : 0, c);
        if (v) r.coeffs[m] = v;
        else r.coeffs.erase(m);
    }
    return r;
}

DualElement dual_scale(const DualElement& a, uint32_t c, const PrimeCtx& ctx) {
    DualElement r{a.flavor, a.bd, {}};
    c %= ctx.p();
    if (c == 0) return r;
    for (auto& [m, cc] : a.coeffs) r.coeffs[m] = ctx.mul(cc, c);
    return r;
}

DualElement dual_multiply(const DualElement& a, const DualElement& b, const PrimeCtx& ctx) {
    if (a.flavor != b.flavor) throw std::invalid_argument("dual_multiply flavor mismatch");
    if (a.bd.n != b.bd.n) throw std::invalid_argument("dual_multiply length mismatch");
    Flavor f = a.flavor;
    Bidegree target{a.bd.n, a.bd.t + b.bd.t};
    DualElement r{f, target, {}};

    if (!f.quotiented) {
        // (e_I)^* (e_J)^* = (e_{I+J})^* componentwise
        for (auto& [ma, ca] : a.coeffs)
            for (auto& [mb, cb] : b.coeffs) {
                Monomial m{ma.family, ma.subs};
                for (size_t k = 0; k < m.subs.size(); ++k) m.subs[k] += mb.subs[k];
                uint32_t v = ctx.add(r.coeffs.count(m) ? r.coeffs[m] : 0, ctx.mul(ca, cb));
                if (v) r.coeffs[m] = v;
                else r.coeffs.erase(m);
            }
        return r;
    }

    for (auto& m : admissible_basis(f, target, ctx)) {
        Element xm(f);
        xm.add_term(m, 1, ctx);
        TensorElement d = diagonal(xm, ctx);
        uint32_t s = 0;
        for (auto& [k, c] : d.terms()) {
            if (bidegree_of(k.first, ctx) != a.bd || bidegree_of(k.second, ctx) != b.bd) continue;
            auto ia = a.coeffs.find(k.first);
            if (ia == a.coeffs.end()) continue;
            auto ib = b.coeffs.find(k.second);
            if (ib == b.coeffs.end()) continue;
            s = ctx.add(s, ctx.mul(c, ctx.mul(ia->second, ib->second)));
        }
        if (s) r.coeffs[m] = s;
    }
    return r;
}

DualElement dual_power(const DualElement& a, long long k, const PrimeCtx& ctx) {
    if (k < 1) throw std::invalid_argument("dual_power needs k >= 1");
    DualElement r = a;
    for (long long i = 1; i < k; ++i) r = dual_multiply(r, a, ctx);
    return r;
}

DualElement sigma_map(const DualElement& f, const PrimeCtx& ctx) {
    if (!f.flavor.quotiented) throw std::invalid_argument("sigma_map needs a quotiented dual");
    Flavor free{f.flavor.family, false};
    DualElement r{free, f.bd, {}};
    for (auto& m : enumerate_basis_monomials(free, f.bd, ctx)) {
        Element nf = normal_form_cached(f.flavor, Monomial{f.flavor.family, m.subs}, ctx);
        uint32_t s = 0;
        for (auto& [bm, bc] : nf.terms()) {
            auto it = f.coeffs.find(bm);
            if (it != f.coeffs.end()) s = ctx.add(s, ctx.mul(it->second, bc));
        }
        if (s) r.coeffs[m] = s;
    }
    return r;
}

DualElement vtilde_dual(int n, int a, const PrimeCtx& ctx) {
    if (a < 0 || a >= n) throw std::invalid_argument("vtilde_dual needs 0 <= a < n");
    std::vector<int> subs(n, 0);
    subs[a] = 2;
    return dual_basis_functional(flavors::Utilde, Monomial{Family::UTilde, subs}, ctx);
}

DualElement stilde_dual(int n, const PrimeCtx& ctx) {
    std::vector<int> subs(n, 2);
    return dual_basis_functional(flavors::Ktilde, Monomial{Family::UTilde, subs}, ctx);
}

DualElement dickson_dual(int n, int a, const PrimeCtx& ctx) {
    if (a < 0 || a > n) throw std::invalid_argument("dickson_dual needs 0 <= a <= n");
    std::vector<int> subs;
    for (int k = 0; k < a; ++k) subs.push_back(0);
    for (int k = a; k < n; ++k) subs.push_back(int(ctx.p()) - 1);
    return dual_basis_functional(flavors::Ktilde, Monomial{Family::UTilde, subs}, ctx);
}

}  // namespace kam
