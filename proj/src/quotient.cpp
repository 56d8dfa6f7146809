#include "kam/quotient.hpp"

#include <atomic>
#include <iostream>
#include <mutex>
#include <tuple>

#include "kam/fpkernels.hpp"
#include "kam/relations.hpp"

namespace kam {

namespace {

std::mutex g_space_mu;
std::map<std::tuple<Family, uint32_t, int, long long>, RelationSpacePtr> g_spaces;

std::mutex g_norm_mu;
std::map<std::tuple<Family, uint32_t, std::vector<int>>, Element> g_norm_memo;

std::atomic<uint64_t> g_rewrites{0}, g_fallbacks{0};

long long congruence_class(Family fam, int s, const PrimeCtx& ctx) {
    return fam == Family::UPlain ? 0 : s % (int(ctx.p()) - 1);
}

// Kill rules valid in the quotient: any adjacent pair with noncongruent
// subscripts (mod p-1) dies at length >= 2, and in hatK so does any odd
// subscript.  UPlain has no kill rule.
bool killed_monomial(Flavor f, const Monomial& m, const PrimeCtx& ctx) {
    if (f.family == Family::UPlain || m.length() < 2) return false;
    if (f.family == Family::UHat)
        for (int s : m.subs)
            if (s % 2 != 0) return true;
    for (size_t k = 1; k < m.subs.size(); ++k)
        if (congruence_class(f.family, m.subs[k - 1], ctx) != congruence_class(f.family, m.subs[k], ctx))
            return true;
    return false;
}

}  // namespace

bool is_basis_monomial(Flavor f, const Monomial& m, const PrimeCtx& ctx) {
    if (f.family == Family::UPlain) {
        for (size_t k = 1; k < m.subs.size(); ++k)
            if (m.subs[k - 1] > m.subs[k]) return false;
        return true;
    }
    if (f.family == Family::UHat && m.length() <= 1) return true;
    if (f.family == Family::UHat)
        for (int s : m.subs)
            if (s % 2 != 0) return false;
    for (size_t k = 1; k < m.subs.size(); ++k) {
        if (m.subs[k - 1] > m.subs[k]) return false;
        if ((m.subs[k] - m.subs[k - 1]) % (int(ctx.p()) - 1) != 0) return false;
    }
    return true;
}

std::vector<Monomial> RelationSpace::complement() const {
    std::vector<Monomial> out;
    for (size_t c = 0; c < columns.size(); ++c)
        if (!is_pivot[c]) out.push_back(columns[c]);
    return out;
}

RelationSpacePtr relation_space(Flavor f, Bidegree bd, const PrimeCtx& ctx) {
    if (!f.quotiented) throw std::invalid_argument("relation_space needs a quotiented flavor");
    auto key = std::make_tuple(f.family, ctx.p(), bd.n, bd.t);
    {
        std::lock_guard<std::mutex> lk(g_space_mu);
        auto it = g_spaces.find(key);
        if (it != g_spaces.end()) return it->second;
    }

    auto sp = std::make_shared<RelationSpace>();
    sp->flavor = f;
    sp->bd = bd;

    std::vector<Monomial> all = enumerate_basis_monomials(f, bd, ctx);
    std::vector<Monomial> nonbasis, basis;
    for (auto& m : all)
        (is_basis_monomial(f, m, ctx) ? basis : nonbasis).push_back(m);
    sp->columns = nonbasis;
    sp->columns.insert(sp->columns.end(), basis.begin(), basis.end());

    std::map<Monomial, size_t, MonoStorageLess> index;
    for (size_t c = 0; c < sp->columns.size(); ++c) index[sp->columns[c]] = c;

    std::vector<std::vector<uint32_t>> rows;
    for (auto& m : all) {
        for (size_t q = 0; q + 1 < m.length(); ++q) {
            Element rel = full_relation(m.subs[q], m.subs[q + 1], f, ctx);
            if (rel.is_zero()) continue;
            std::vector<uint32_t> row(sp->columns.size(), 0);
            for (auto& [rm, rc] : rel.terms()) {
                Monomial full{f.family, {}};
                full.subs.reserve(m.subs.size());
                full.subs.insert(full.subs.end(), m.subs.begin(), m.subs.begin() + q);
                full.subs.insert(full.subs.end(), rm.subs.begin(), rm.subs.end());
                full.subs.insert(full.subs.end(), m.subs.begin() + q + 2, m.subs.end());
                row[index.at(full)] = rc;
            }
            rows.push_back(std::move(row));
        }
    }

    FpMat mat(rows.size(), sp->columns.size());
    for (size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].begin(), rows[r].end(), mat.row(r));
    auto pivots = rref(mat, ctx);
    FpMat keep(pivots.size(), mat.cols);
    for (size_t r = 0; r < pivots.size(); ++r)
        std::copy(mat.row(r), mat.row(r) + mat.cols, keep.row(r));
    sp->rows = std::move(keep);
    sp->pivots = pivots;
    sp->is_pivot.assign(sp->columns.size(), 0);
    for (size_t c : pivots) sp->is_pivot[c] = 1;

    std::lock_guard<std::mutex> lk(g_space_mu);
    auto [it, inserted] = g_spaces.try_emplace(key, sp);
    return it->second;
}

std::vector<Monomial> admissible_basis(Flavor f, Bidegree bd, const PrimeCtx& ctx) {
    std::vector<Monomial> out;
    for (auto& m : enumerate_basis_monomials(f, bd, ctx))
        if (is_basis_monomial(f, m, ctx)) out.push_back(m);
    return out;
}

namespace {

// One homogeneous component through the echelon rows.
Element reduce_component(const Element& x, Bidegree bd, const PrimeCtx& ctx) {
    auto sp = relation_space(x.flavor(), bd, ctx);
    std::vector<uint32_t> v(sp->columns.size(), 0);
    std::map<Monomial, size_t, MonoStorageLess> index;
    for (size_t c = 0; c < sp->columns.size(); ++c) index[sp->columns[c]] = c;
    for (auto& [m, c] : x.terms()) v[index.at(m)] = c;
    for (size_t r = 0; r < sp->pivots.size(); ++r) {
        uint32_t coef = v[sp->pivots[r]];
        if (coef) fp_axpy(v.data(), sp->rows.row(r), ctx.p() - coef, v.size(), ctx.p());
    }
    Element out(x.flavor());
    for (size_t c = 0; c < v.size(); ++c)
        if (v[c]) out.add_term(sp->columns[c], v[c], ctx);
    return out;
}

}  // namespace

Element reduce_oracle(const Element& x, const PrimeCtx& ctx) {
    if (!x.flavor().quotiented) throw std::invalid_argument("reduce_oracle needs a quotiented flavor");
    std::map<Bidegree, Element> split;
    for (auto& [m, c] : x.terms()) {
        auto [it, ins] = split.try_emplace(bidegree_of(m, ctx), Element(x.flavor()));
        it->second.add_term(m, c, ctx);
    }
    Element out(x.flavor());
    for (auto& [bd, comp] : split)
        out = add(out, reduce_component(comp, bd, ctx), ctx);
    return out;
}

namespace {

Element theta_cached(Family fam, int i, int j, const PrimeCtx& ctx) {
    // straightening calls hit the same (i,j) constantly; memoized per family/p
    static std::mutex mu;
    static std::map<std::tuple<Family, uint32_t, int, int>, Element> memo;
    auto key = std::make_tuple(fam, ctx.p(), i, j);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Element th = fam == Family::UPlain ? theta_d(i, j, ctx)
                                       : theta(i, j, Flavor{fam, false}, ctx);
    std::lock_guard<std::mutex> lk(mu);
    return memo.try_emplace(key, std::move(th)).first->second;
}

// Straighten one homogeneous component; nullopt when the budget runs out.
std::optional<Element> straighten_component(const Element& x, Bidegree bd, const PrimeCtx& ctx) {
    Flavor f = x.flavor();
    bool capped = f.family != Family::UPlain;
    long long budget = 0;
    if (capped)
        budget = 10 * (long long)enumerate_basis_monomials(f, bd, ctx).size();
    long long safety = 100000000;  // UPlain straightening provably terminates; guard anyway

    Element::Terms work;
    for (auto& [m, c] : x.terms())
        if (!killed_monomial(f, m, ctx)) work[m] = c;

    Element done(f);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        uint32_t c = it->second;
        work.erase(it);
        size_t q = 0;
        for (; q + 1 < m.length(); ++q)
            if (m.subs[q] > m.subs[q + 1]) break;
        if (q + 1 >= m.length()) {
            done.add_term(m, c, ctx);
            continue;
        }
        if (capped && budget-- <= 0) return std::nullopt;
        if (!capped && --safety <= 0) throw std::logic_error("straightening failed to terminate");
        ++g_rewrites;
        Element th = theta_cached(f.family, m.subs[q], m.subs[q + 1], ctx);
        for (auto& [tm, tc] : th.terms()) {
            Monomial nm = m;
            nm.subs[q] = tm.subs[0];
            nm.subs[q + 1] = tm.subs[1];
            if (killed_monomial(f, nm, ctx)) continue;
            auto [wit, ins] = work.try_emplace(nm, 0);
            wit->second = ctx.add(wit->second, ctx.mul(c, tc));
            if (wit->second == 0) work.erase(wit);
        }
    }
    return done;
}

}  // namespace

Element normalize(const Element& x, const PrimeCtx& ctx) {
    if (!x.flavor().quotiented) throw std::invalid_argument("normalize needs a quotiented flavor");
    std::map<Bidegree, Element> split;
    for (auto& [m, c] : x.terms()) {
        auto [it, ins] = split.try_emplace(bidegree_of(m, ctx), Element(x.flavor()));
        it->second.add_term(m, c, ctx);
    }
    Element out(x.flavor());
    for (auto& [bd, comp] : split) {
        auto res = straighten_component(comp, bd, ctx);
        if (!res) {
            ++g_fallbacks;
            std::cerr << "normalize: rewrite budget exceeded in component (n=" << bd.n
                      << ", t=" << bd.t << "), falling back to reduce_oracle\n";
            res = reduce_component(comp, bd, ctx);
        }
        out = add(out, *res, ctx);
    }
    return out;
}

Element normal_form_cached(Flavor f, const Monomial& m, const PrimeCtx& ctx) {
    if (!f.quotiented) throw std::invalid_argument("normal_form_cached needs a quotiented flavor");
    auto key = std::make_tuple(f.family, ctx.p(), m.subs);
    {
        std::lock_guard<std::mutex> lk(g_norm_mu);
        auto it = g_norm_memo.find(key);
        if (it != g_norm_memo.end()) return it->second;
    }
    Element x(f);
    x.add_term(m, 1, ctx);
    Element nf = normalize(x, ctx);
    std::lock_guard<std::mutex> lk(g_norm_mu);
    return g_norm_memo.try_emplace(key, std::move(nf)).first->second;
}

bool check_negative_redundancy(long long i, long long j, Flavor f, const PrimeCtx& ctx) {
    if (!f.quotiented) throw std::invalid_argument("check_negative_redundancy needs a quotiented flavor");
    Element rel = full_relation(i, j, f, ctx);
    return reduce_oracle(rel, ctx).is_zero();
}

NormalizeStats normalize_stats() {
    return {g_rewrites.load(), g_fallbacks.load()};
}

void clear_quotient_caches() {
    std::lock_guard<std::mutex> lk1(g_space_mu);
    std::lock_guard<std::mutex> lk2(g_norm_mu);
    g_spaces.clear();
    g_norm_memo.clear();
}

}  // namespace kam
