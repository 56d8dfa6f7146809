#include "kam/coalgebra.hpp"

#include <stdexcept>

#include "kam/fplinalg.hpp"

namespace kam {

void TensorElement::add_term(const Monomial& a, const Monomial& b, uint32_t c, const PrimeCtx& ctx) {
    c %= ctx.p();
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = ctx.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void TensorElement::add_scaled(const Element& a, const Element& b, uint32_t c, const PrimeCtx& ctx) {
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms())
            add_term(ma, mb, ctx.mul(c, ctx.mul(ca, cb)), ctx);
}

uint32_t TensorElement::coeff(const Monomial& a, const Monomial& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? 0 : it->second;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx) {
    TensorElement r = a;
    for (auto& [k, c] : b.terms()) r.add_term(k.first, k.second, c, ctx);
    return r;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx) {
    TensorElement r = a;
    for (auto& [k, c] : b.terms()) r.add_term(k.first, k.second, ctx.neg(c), ctx);
    return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("flavor mismatch in tensor_multiply");
    TensorElement r(a.flavor());
    bool quot = a.flavor().quotiented;
    for (auto& [ka, ca] : a.terms())
        for (auto& [kb, cb] : b.terms()) {
            Monomial left{ka.first.family, ka.first.subs};
            left.subs.insert(left.subs.end(), kb.first.subs.begin(), kb.first.subs.end());
            Monomial right{ka.second.family, ka.second.subs};
            right.subs.insert(right.subs.end(), kb.second.subs.begin(), kb.second.subs.end());
            uint32_t c = ctx.mul(ca, cb);
            if (quot) {
                Element nl = normal_form_cached(a.flavor(), left, ctx);
                Element nr = normal_form_cached(a.flavor(), right, ctx);
                r.add_scaled(nl, nr, c, ctx);
            } else {
                r.add_term(left, right, c, ctx);
            }
        }
    return r;
}

TensorElement diagonal(const Element& x, const PrimeCtx& ctx) {
    Flavor f = x.flavor();
    Family fam = f.family;
    int step = fam == Family::UTilde ? 2 : 1;
    TensorElement out(f);
    for (auto& [m, c] : x.terms()) {
        // product over the generators of m, one tensor factor at a time
        TensorElement cur(f);
        cur.add_term(Monomial{fam, {}}, Monomial{fam, {}}, 1, ctx);
        for (int s : m.subs) {
            TensorElement gen(f);
            for (int a = 0; a <= s; a += step)
                gen.add_term(Monomial{fam, {a}}, Monomial{fam, {s - a}}, 1, ctx);
            cur = tensor_multiply(cur, gen, ctx);
        }
        for (auto& [k, cc] : cur.terms()) out.add_term(k.first, k.second, ctx.mul(cc, c), ctx);
    }
    return out;
}

TensorElement quotient_legs(const TensorElement& t, const PrimeCtx& ctx) {
    if (t.flavor().quotiented) throw std::invalid_argument("quotient_legs expects a free-flavor tensor");
    Flavor target{t.flavor().family, true};
    TensorElement out(target);
    for (auto& [k, c] : t.terms()) {
        Element nl = normal_form_cached(target, Monomial{target.family, k.first.subs}, ctx);
        Element nr = normal_form_cached(target, Monomial{target.family, k.second.subs}, ctx);
        out.add_scaled(nl, nr, c, ctx);
    }
    return out;
}

PrimitivesReport primitives(Flavor f, int n, long long t_max, const PrimeCtx& ctx) {
    if (n < 1) throw std::invalid_argument("primitives needs length >= 1");
    PrimitivesReport rep;
    rep.flavor = f;
    rep.n = n;
    rep.t_max = t_max;
    rep.grouplike = Element::single(f, std::vector<int>(n, 0), 1, ctx);
    Monomial g{f.family, std::vector<int>(n, 0)};

    for (long long t = 2; t <= t_max; t += 2) {
        Bidegree bd{n, t};
        std::vector<Monomial> basis = f.quotiented ? admissible_basis(f, bd, ctx)
                                                   : enumerate_basis_monomials(f, bd, ctx);
        if (basis.empty()) continue;

        // columns: basis monomials; rows: tensor coordinates of L(b)
        std::map<std::pair<Monomial, Monomial>, size_t, MonoPairLess> coord;
        std::vector<TensorElement> images;
        images.reserve(basis.size());
        for (auto& b : basis) {
            Element xb(f);
            xb.add_term(b, 1, ctx);
            TensorElement L = diagonal(xb, ctx);
            L.add_term(b, g, ctx.p() - 1, ctx);
            L.add_term(g, b, ctx.p() - 1, ctx);
            for (auto& [k, c] : L.terms()) coord.try_emplace(k, coord.size());
            images.push_back(std::move(L));
        }
        FpMat mat(coord.size(), basis.size());
        for (size_t j = 0; j < images.size(); ++j)
            for (auto& [k, c] : images[j].terms()) mat.at(coord.at(k), j) = c;
        auto kb = kernel_basis(std::move(mat), ctx);
        if (kb.empty()) continue;

        PrimitivesBlock blk;
        blk.bd = bd;
        for (auto& v : kb) {
            Element e(f);
            for (size_t j = 0; j < basis.size(); ++j)
                if (v[j]) e.add_term(basis[j], v[j], ctx);
            blk.basis.push_back(std::move(e));
        }
        rep.blocks.push_back(std::move(blk));
    }
    return rep;
}

}  // namespace kam
