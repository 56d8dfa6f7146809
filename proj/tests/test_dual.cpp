#include "doctest.h"
#include "kam/dual.hpp"

using namespace kam;

namespace {

Element mono(Flavor f, std::vector<int> subs, const PrimeCtx& ctx, uint32_t c = 1) {
    return Element::single(f, std::move(subs), c, ctx);
}

DualElement star(Flavor f, std::vector<int> subs, const PrimeCtx& ctx) {
    return dual_basis_functional(f, Monomial{f.family, std::move(subs)}, ctx);
}

}  // namespace

TEST_CASE("pairing picks out one basis monomial") {
    PrimeCtx ctx(3);
    DualElement f = star(flavors::Utilde, {0, 2}, ctx);
    CHECK(f.bd == Bidegree{2, 12});
    CHECK(pair_with(f, mono(flavors::Utilde, {0, 2}, ctx, 2), ctx) == 2);
    CHECK(pair_with(f, mono(flavors::Utilde, {6, 0}, ctx), ctx) == 0);
}

TEST_CASE("pairing normalizes quotient arguments first") {
    PrimeCtx ctx(3);
    DualElement f = star(flavors::Ktilde, {0, 2}, ctx);
    // e_6 e_0 straightens to e_0 e_2 before pairing
    CHECK(pair_with(f, mono(flavors::Ktilde, {6, 0}, ctx), ctx) == 1);
    CHECK(pair_with(f, mono(flavors::Ktilde, {4, 2}, ctx), ctx) == 0);
}

TEST_CASE("free dual product adds subscripts componentwise") {
    PrimeCtx ctx(3);
    CHECK(dual_multiply(star(flavors::Utilde, {2}, ctx), star(flavors::Utilde, {4}, ctx), ctx) ==
          star(flavors::Utilde, {6}, ctx));
    CHECK(dual_multiply(star(flavors::Utilde, {0, 2}, ctx), star(flavors::Utilde, {2, 0}, ctx), ctx) ==
          star(flavors::Utilde, {2, 2}, ctx));
    // unit component: the dual of the bottom monomial
    DualElement f = star(flavors::Utilde, {0, 2}, ctx);
    CHECK(dual_multiply(star(flavors::Utilde, {0, 0}, ctx), f, ctx) == f);
}

TEST_CASE("dual product is commutative and associative on samples") {
    PrimeCtx ctx(3);
    DualElement a = star(flavors::Utilde, {2, 0}, ctx);
    DualElement b = star(flavors::Utilde, {0, 2}, ctx);
    DualElement c = star(flavors::Utilde, {2, 2}, ctx);
    CHECK(dual_multiply(a, b, ctx) == dual_multiply(b, a, ctx));
    CHECK(dual_multiply(dual_multiply(a, b, ctx), c, ctx) ==
          dual_multiply(a, dual_multiply(b, c, ctx), ctx));
}

TEST_CASE("dual product against an explicit diagonal coefficient") {
    PrimeCtx ctx(3);
    // <f g, x> = <f (x) g, Dx>: coefficient of e_2 (x) e_4 in D(e_6) is 1
    DualElement prod = dual_multiply(star(flavors::Uhat, {2}, ctx), star(flavors::Uhat, {4}, ctx), ctx);
    CHECK(pair_with(prod, mono(flavors::Uhat, {6}, ctx), ctx) == 1);
}

TEST_CASE("dual powers multiply out") {
    PrimeCtx ctx(3);
    DualElement v = vtilde_dual(2, 0, ctx);
    DualElement sq = dual_multiply(v, v, ctx);
    CHECK(dual_power(v, 2, ctx) == sq);
    CHECK(dual_power(v, 3, ctx) == dual_multiply(sq, v, ctx));
    CHECK(dual_power(v, 1, ctx) == v);
}

TEST_CASE("dual linear arithmetic cancels") {
    PrimeCtx ctx(3);
    DualElement a = star(flavors::Utilde, {0, 2}, ctx);
    CHECK(dual_add(a, dual_scale(a, 2, ctx), ctx).is_zero());
    CHECK(dual_scale(a, 0, ctx).is_zero());
}

TEST_CASE("named generators sit in the right components") {
    PrimeCtx ctx(3);
    CHECK(vtilde_dual(2, 0, ctx).bd == Bidegree{2, 4});
    CHECK(vtilde_dual(2, 1, ctx).bd == Bidegree{2, 12});
    CHECK(stilde_dual(2, ctx).bd == Bidegree{2, 16});
    CHECK(dickson_dual(2, 0, ctx).bd == Bidegree{2, 16});
    CHECK(dickson_dual(2, 1, ctx).bd == Bidegree{2, 12});
    CHECK(stilde_dual(2, ctx).flavor == flavors::Ktilde);
    CHECK(vtilde_dual(2, 0, ctx).flavor == flavors::Utilde);
    // n=3 degrees: 4(1+p+p^2) and 2(p^n - p^a)
    CHECK(stilde_dual(3, ctx).bd == Bidegree{3, 52});
    CHECK(dickson_dual(3, 1, ctx).bd == Bidegree{3, 48});
    CHECK(dickson_dual(3, 2, ctx).bd == Bidegree{3, 36});
}

TEST_CASE("precomposition with the projection expands a Dickson dual") {
    PrimeCtx ctx(3);
    DualElement sig = sigma_map(dickson_dual(2, 1, ctx), ctx);
    CHECK(sig.flavor == flavors::Utilde);
    CHECK(sig.bd == Bidegree{2, 12});
    DualElement want = dual_add(star(flavors::Utilde, {6, 0}, ctx),
                                star(flavors::Utilde, {0, 2}, ctx), ctx);
    CHECK(sig == want);
}

TEST_CASE("projection precomposition is a ring map on a sample") {
    PrimeCtx ctx(3);
    DualElement a = dickson_dual(2, 1, ctx);
    DualElement b = stilde_dual(2, ctx);
    CHECK(sigma_map(dual_multiply(a, b, ctx), ctx) ==
          dual_multiply(sigma_map(a, ctx), sigma_map(b, ctx), ctx));
}
