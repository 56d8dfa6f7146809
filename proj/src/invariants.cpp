#include "kam/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "kam/quotient.hpp"

namespace kam {

namespace {

// All vectors in F_p^k, in odometer order.
void for_each_tuple(int k, uint32_t p, const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> v(k, 0);
    while (true) {
        fn(v);
        int pos = k - 1;
        while (pos >= 0 && v[pos] == p - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
}

MPoly linear_form(int nvars, const std::vector<uint32_t>& coef, const PrimeCtx& ctx) {
    MPoly f(nvars);
    for (int i = 0; i < static_cast<int>(coef.size()); ++i) {
        if (coef[i] == 0) continue;
        MPoly::Expo e(nvars, 0);
        e[i] = 1;
        f.add_term(e, coef[i], ctx);
    }
    return f;
}

}  // namespace

MPoly mui_V(int n, int i, const PrimeCtx& ctx) {
    if (i < 1 || i > n) throw std::invalid_argument("mui_V: need 1 <= i <= n");
    MPoly out = MPoly::constant(n, 1);
    for_each_tuple(i - 1, ctx.p(), [&](const std::vector<uint32_t>& lambda) {
        std::vector<uint32_t> coef(lambda);
        coef.resize(i, 0);
        coef[i - 1] = 1;
        out = out.mul(linear_form(n, coef, ctx), ctx);
    });
    return out;
}

MPoly mui_Vtilde(int n, int i, const PrimeCtx& ctx) {
    MPoly v = mui_V(n, i, ctx);
    return v.mul(v, ctx);
}

std::vector<MPoly> dickson_polys(int n, const PrimeCtx& ctx) {
    // Expand prod_{v in F_p^n} (X - v.t) as a polynomial in X whose
    // coefficients live in F_p[t_1..t_n]; only the X^{p^i} slots survive.
    std::vector<MPoly> xcoef = {MPoly::constant(n, 1)};  // xcoef[j] multiplies X^j
    for_each_tuple(n, ctx.p(), [&](const std::vector<uint32_t>& v) {
        MPoly form = linear_form(n, v, ctx);
        std::vector<MPoly> next(xcoef.size() + 1, MPoly(n));
        for (size_t j = 0; j < xcoef.size(); ++j) {
            next[j + 1] = next[j + 1].add(xcoef[j], ctx);
            next[j] = next[j].sub(xcoef[j].mul(form, ctx), ctx);
        }
        xcoef = std::move(next);
    });
    std::vector<MPoly> c(n + 1, MPoly(n));
    long long q = 1;
    for (int i = 0; i <= n; ++i, q *= ctx.p())
        c[i] = xcoef[static_cast<size_t>(q)].scale(ctx.sign(n - i), ctx);
    return c;
}

MPoly stilde_poly(int n, const PrimeCtx& ctx) {
    MPoly out = MPoly::constant(n, 1);
    for (int i = 1; i <= n; ++i) out = out.mul(mui_Vtilde(n, i, ctx), ctx);
    return out;
}

const char* group_name(GroupKind k) {
    switch (k) {
        case GroupKind::Unipotent: return "unipotent";
        case GroupKind::UpperPm1: return "upper-pm1";
        case GroupKind::Upper: return "upper";
        case GroupKind::SlPm: return "sl-pm";
        case GroupKind::Gl: return "gl";
    }
    return "?";
}

std::optional<GroupKind> group_from_name(const std::string& s) {
    for (GroupKind k : {GroupKind::Unipotent, GroupKind::UpperPm1, GroupKind::Upper,
                        GroupKind::SlPm, GroupKind::Gl})
        if (s == group_name(k)) return k;
    return std::nullopt;
}

std::vector<FpMat> group_generators(GroupSpec g, const PrimeCtx& ctx) {
    const int n = g.n;
    if (n < 1) throw std::invalid_argument("group_generators: need n >= 1");
    auto ident = [&] {
        FpMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    };
    std::vector<FpMat> gens;
    bool lower = g.kind == GroupKind::SlPm || g.kind == GroupKind::Gl;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || (i > j && !lower)) continue;
            FpMat m = ident();
            m.at(i, j) = 1;
            gens.push_back(m);
        }
    switch (g.kind) {
        case GroupKind::Unipotent: break;
        case GroupKind::UpperPm1:
            for (int k = 0; k < n; ++k) {
                FpMat m = ident();
                m.at(k, k) = ctx.p() - 1;
                gens.push_back(m);
            }
            break;
        case GroupKind::Upper:
            for (int k = 0; k < n; ++k) {
                FpMat m = ident();
                m.at(k, k) = ctx.primitive_root();
                gens.push_back(m);
            }
            break;
        case GroupKind::SlPm: {
            FpMat m = ident();
            m.at(0, 0) = ctx.p() - 1;
            gens.push_back(m);
            break;
        }
        case GroupKind::Gl: {
            FpMat m = ident();
            m.at(0, 0) = ctx.primitive_root();
            gens.push_back(m);
            break;
        }
    }
    return gens;
}

MPoly poly_act(const FpMat& g, const MPoly& f, const PrimeCtx& ctx) {
    int n = f.nvars();
    if (g.rows != static_cast<size_t>(n) || g.cols != static_cast<size_t>(n))
        throw std::invalid_argument("poly_act: matrix size mismatch");
    std::vector<MPoly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        MPoly img(n);
        for (int i = 0; i < n; ++i) {
            if (g.at(i, j) == 0) continue;
            MPoly::Expo e(n, 0);
            e[i] = 1;
            img.add_term(e, g.at(i, j), ctx);
        }
        images.push_back(img);
    }
    return f.subst(images, ctx);
}

bool is_invariant(const MPoly& f, GroupSpec g, const PrimeCtx& ctx) {
    for (const FpMat& m : group_generators(g, ctx))
        if (!(poly_act(m, f, ctx) == f)) return false;
    return true;
}

namespace {

std::vector<MPoly::Expo> degree_monomials(int n, long long d) {
    std::vector<MPoly::Expo> out;
    MPoly::Expo cur(n, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == n - 1) {
            cur[pos] = static_cast<int>(left);
            out.push_back(cur);
            return;
        }
        for (long long a = 0; a <= left; ++a) {
            cur[pos] = static_cast<int>(a);
            rec(pos + 1, left - a);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

}  // namespace

std::vector<std::pair<long long, long long>> invariant_dimensions(GroupSpec g, long long max_topdeg,
                                                                  const PrimeCtx& ctx) {
    std::vector<FpMat> gens = group_generators(g, ctx);
    std::vector<std::pair<long long, long long>> out;
    for (long long d = 0; 2 * d <= max_topdeg; ++d) {
        std::vector<MPoly::Expo> monos = degree_monomials(g.n, d);
        std::map<MPoly::Expo, size_t> idx;
        for (size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
        size_t nm = monos.size();
        FpMat stacked(gens.size() * nm, nm);
        for (size_t gi = 0; gi < gens.size(); ++gi)
            for (size_t j = 0; j < nm; ++j) {
                MPoly m(g.n);
                m.add_term(monos[j], 1, ctx);
                MPoly im = poly_act(gens[gi], m, ctx);
                im = im.sub(m, ctx);
                for (const auto& [e, c] : im.terms()) stacked.at(gi * nm + idx.at(e), j) = c;
            }
        out.emplace_back(2 * d, static_cast<long long>(nm - rank(std::move(stacked), ctx)));
    }
    return out;
}

MPoly poly_steenrod(long long k, const MPoly& f, const PrimeCtx& ctx) {
    int n = f.nvars();
    MPoly out(n);
    if (k < 0) return out;
    for (const auto& [e, c] : f.terms()) {
        // Distribute the weight over the variables: P^{k_i} t^a = C(a, k_i) t^{a + k_i(p-1)}.
        std::function<void(int, long long, uint32_t, MPoly::Expo&)> rec =
            [&](int pos, long long left, uint32_t acc, MPoly::Expo& target) {
                if (acc == 0) return;
                if (pos == n) {
                    if (left == 0) out.add_term(target, acc, ctx);
                    return;
                }
                for (long long ki = 0; ki <= std::min<long long>(left, e[pos]); ++ki) {
                    uint32_t b = ctx.binom(e[pos], ki);
                    if (b == 0) continue;
                    target[pos] = e[pos] + static_cast<int>(ki * (ctx.p() - 1));
                    rec(pos + 1, left - ki, ctx.mul(acc, b), target);
                }
                target[pos] = e[pos];
            };
        MPoly::Expo target(e);
        rec(0, k, c, target);
    }
    return out;
}

MPoly omega_map(const DualElement& f, const PrimeCtx& ctx) {
    if (f.flavor != flavors::Utilde)
        throw std::invalid_argument("omega_map expects a free tildeU functional");
    int n = f.bd.n;
    MPoly out(n);
    std::vector<MPoly> vt;
    for (int i = 1; i <= n; ++i) vt.push_back(mui_Vtilde(n, i, ctx));
    for (const auto& [m, c] : f.coeffs) {
        MPoly term = MPoly::constant(n, c);
        for (int i = 0; i < n; ++i) {
            long long half = m.subs[i] / 2;
            if (half > 0) term = term.mul(vt[i].pow(half, ctx), ctx);
        }
        out = out.add(term, ctx);
    }
    return out;
}

DualElement sigma_closed_form_c(int n, int i, const PrimeCtx& ctx) {
    if (i < 0 || i > n) throw std::invalid_argument("sigma_closed_form_c: need 0 <= i <= n");
    long long p = ctx.p();
    long long t = 0;  // all summands share the topdeg of the (n,i) Dickson class
    DualElement out = dual_zero(flavors::Utilde, Bidegree{n, 0});
    int r = n - i;
    std::vector<int> j(r);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == r) {
            std::vector<int> subs;
            int prev = 0;
            for (int s = 1; s <= r; ++s) {
                for (int z = 0; z < j[s - 1] - prev - 1; ++z) subs.push_back(0);
                long long powexp = i + s - j[s - 1];
                long long val = p - 1;
                for (long long z = 0; z < powexp; ++z) val *= p;
                subs.push_back(static_cast<int>(val));
                prev = j[s - 1];
            }
            for (int z = 0; z < n - prev; ++z) subs.push_back(0);
            Monomial m{Family::UTilde, subs};
            if (t == 0) t = top_degree(m, ctx);
            out.coeffs[m] = ctx.add(out.coeffs.count(m) ? out.coeffs.at(m) : 0, 1);
            return;
        }
        for (int v = lo; v <= n - (r - pos - 1); ++v) {
            j[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    out.bd = Bidegree{n, t};
    return out;
}

namespace {

std::vector<long long> poly_hilbert_dims(const std::vector<long long>& gen_topdegs,
                                         long long max_topdeg) {
    std::vector<long long> dims(max_topdeg + 1, 0);
    dims[0] = 1;
    for (long long d : gen_topdegs)
        for (long long t = d; t <= max_topdeg; ++t) dims[t] += dims[t - d];
    return dims;
}

long long dual_dim(Flavor f, int n, long long t, const PrimeCtx& ctx) {
    Bidegree bd{n, t};
    if (f.quotiented) return static_cast<long long>(admissible_basis(f, bd, ctx).size());
    return static_cast<long long>(enumerate_basis_monomials(f, bd, ctx).size());
}

CornerCheck corner_check(Flavor f, GroupKind gk, std::vector<long long> gen_topdegs, int n,
                         long long max_topdeg, const PrimeCtx& ctx) {
    CornerCheck c;
    c.label = std::string(flavor_name(f)) + "* / " + group_name(gk);
    c.gen_topdegs = std::move(gen_topdegs);
    c.ok = true;
    auto fixed = invariant_dimensions(GroupSpec{gk, n}, max_topdeg, ctx);
    auto hilbert = poly_hilbert_dims(c.gen_topdegs, max_topdeg);
    for (const auto& [t, dim] : fixed) {
        long long dd = dual_dim(f, n, t, ctx);
        if (dim != hilbert[t] || dim != dd) {
            c.ok = false;
            c.details = "topdeg " + std::to_string(t) + ": fixed " + std::to_string(dim) +
                        ", polynomial " + std::to_string(hilbert[t]) + ", basis " +
                        std::to_string(dd);
            break;
        }
    }
    return c;
}

}  // namespace

std::vector<CornerCheck> duality_corner_checks(int n, long long max_topdeg, const PrimeCtx& ctx) {
    long long pn = 1;
    for (int z = 0; z < n; ++z) pn *= ctx.p();
    std::vector<long long> v_degs, vt_degs, sl_degs, gl_degs;
    long long pw = 1, ssum = 0;
    for (int z = 0; z < n; ++z, pw *= ctx.p()) {
        v_degs.push_back(2 * pw);
        vt_degs.push_back(4 * pw);
        ssum += 4 * pw;
        if (z >= 1) sl_degs.push_back(2 * (pn - pw));
        gl_degs.push_back(2 * (pn - pw));
    }
    sl_degs.push_back(ssum);
    return {
        corner_check(flavors::Uhat, GroupKind::Unipotent, v_degs, n, max_topdeg, ctx),
        corner_check(flavors::Utilde, GroupKind::UpperPm1, vt_degs, n, max_topdeg, ctx),
        corner_check(flavors::Ktilde, GroupKind::SlPm, sl_degs, n, max_topdeg, ctx),
        corner_check(flavors::Kplain, GroupKind::Gl, gl_degs, n, max_topdeg, ctx),
    };
}

bool CommuteReport::all_ok() const {
    if (!sigma_closed_form_ok || !dims_ok) return false;
    for (const auto& l : lines)
        if (!l.match || !l.tau_invariant) return false;
    return true;
}

CommuteReport commuting_square_report(int n, const PrimeCtx& ctx, long long dims_topdeg) {
    if (n < 2) throw std::invalid_argument("commuting_square_report: need n >= 2");
    CommuteReport rep;
    rep.n = n;
    rep.p = ctx.p();
    rep.dims_topdeg = dims_topdeg;

    std::vector<MPoly> dickson = dickson_polys(n, ctx);
    auto add_line = [&](const std::string& name, const DualElement& dual, const MPoly& classical) {
        CommuteLine line;
        line.name = name;
        line.topdeg = 2 * classical.total_degree();
        MPoly image = omega_map(sigma_map(dual, ctx), ctx);
        line.match = image == classical;
        line.tau_invariant = is_invariant(classical, GroupSpec{GroupKind::SlPm, n}, ctx);
        line.image = image.str();
        rep.lines.push_back(std::move(line));
    };
    add_line("s", stilde_dual(n, ctx), stilde_poly(n, ctx));
    for (int i = 1; i < n; ++i)
        add_line("c" + std::to_string(i), dickson_dual(n, i, ctx), dickson[i]);

    rep.sigma_closed_form_ok = true;
    for (int i = 1; i < n; ++i)
        if (!(sigma_map(dickson_dual(n, i, ctx), ctx) == sigma_closed_form_c(n, i, ctx)))
            rep.sigma_closed_form_ok = false;

    rep.dims_ok = true;
    for (const CornerCheck& c : duality_corner_checks(n, dims_topdeg, ctx))
        if (!c.ok) rep.dims_ok = false;
    return rep;
}

}  // namespace kam
