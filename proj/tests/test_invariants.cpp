#include "doctest.h"
#include "kam/invariants.hpp"

using namespace kam;

namespace {

MPoly t(int nvars, int idx) { return MPoly::variable(nvars, idx); }

}  // namespace

TEST_CASE("orbit product polynomials in two variables") {
    PrimeCtx ctx(3);
    CHECK(mui_V(2, 1, ctx) == t(2, 0));
    // V_2 = prod_l (l t_1 + t_2) = t_2 (t_2 - t_1)(t_2 + t_1) = t_2^3 - t_1^2 t_2
    MPoly want(2);
    want.add_term({0, 3}, 1, ctx);
    want.add_term({2, 1}, ctx.reduce(-1), ctx);
    CHECK(mui_V(2, 2, ctx) == want);
    CHECK(mui_Vtilde(2, 2, ctx) == want.mul(want, ctx));
    CHECK(mui_Vtilde(2, 1, ctx) == t(2, 0).mul(t(2, 0), ctx));
}

TEST_CASE("top orbit product against the full product") {
    PrimeCtx ctx(3);
    // stilde = V_1^2 V_2^2
    CHECK(stilde_poly(2, ctx) == mui_Vtilde(2, 1, ctx).mul(mui_Vtilde(2, 2, ctx), ctx));
    CHECK(stilde_poly(1, ctx) == mui_Vtilde(1, 1, ctx));
}

TEST_CASE("one-variable classical coefficients") {
    PrimeCtx ctx(3);
    // prod_{v in F_3} (X - v t) = X^3 - t^2 X
    auto d1 = dickson_polys(1, ctx);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == t(1, 0).pow(2, ctx));
    CHECK(d1[1] == MPoly::constant(1, 1));
}

TEST_CASE("two-variable classical coefficients") {
    PrimeCtx ctx(3);
    auto d2 = dickson_polys(2, ctx);
    REQUIRE(d2.size() == 3);
    CHECK(d2[2] == MPoly::constant(2, 1));
    // bottom coefficient is the full orbit product stilde
    CHECK(d2[0] == stilde_poly(2, ctx));
    // middle coefficient, degree p^2 - p
    MPoly want(2);
    want.add_term({0, 6}, 1, ctx);
    want.add_term({2, 4}, 1, ctx);
    want.add_term({4, 2}, 1, ctx);
    want.add_term({6, 0}, 1, ctx);
    CHECK(d2[1] == want);
    CHECK(d2[1].total_degree() == 6);
    CHECK(d2[0].total_degree() == 8);
}

TEST_CASE("substitution action of group generators") {
    PrimeCtx ctx(3);
    auto gens = group_generators({GroupKind::Unipotent, 2}, ctx);
    REQUIRE_FALSE(gens.empty());
    // a transvection adds t_1 into t_2 and fixes t_1
    bool saw_shift = false;
    for (auto& g : gens) {
        MPoly gt1 = poly_act(g, t(2, 0), ctx);
        MPoly gt2 = poly_act(g, t(2, 1), ctx);
        if (gt1 == t(2, 0) && gt2 == t(2, 1).add(t(2, 0), ctx)) saw_shift = true;
    }
    CHECK(saw_shift);
}

TEST_CASE("classical polynomials are invariant for their groups") {
    PrimeCtx ctx(3);
    CHECK(is_invariant(mui_Vtilde(2, 1, ctx), {GroupKind::UpperPm1, 2}, ctx));
    CHECK(is_invariant(mui_Vtilde(2, 2, ctx), {GroupKind::UpperPm1, 2}, ctx));
    CHECK(is_invariant(mui_V(2, 2, ctx), {GroupKind::Unipotent, 2}, ctx));
    CHECK(is_invariant(stilde_poly(2, ctx), {GroupKind::SlPm, 2}, ctx));
    for (auto& q : dickson_polys(2, ctx)) CHECK(is_invariant(q, {GroupKind::Gl, 2}, ctx));
    // and visibly not invariant under a bigger group
    CHECK_FALSE(is_invariant(t(2, 1), {GroupKind::Unipotent, 2}, ctx));
    CHECK_FALSE(is_invariant(mui_V(2, 2, ctx), {GroupKind::Gl, 2}, ctx));
}

TEST_CASE("fixed-space dimensions in one variable") {
    PrimeCtx ctx(3);
    // trivial group: everything is fixed, one monomial per degree
    for (auto& [td, dim] : invariant_dimensions({GroupKind::Unipotent, 1}, 12, ctx))
        CHECK(dim == 1);
    // units of F_3 fix exactly the even powers of t
    for (auto& [td, dim] : invariant_dimensions({GroupKind::Gl, 1}, 16, ctx)) {
        long long deg = td / 2;
        CHECK(dim == (deg % 2 == 0 ? 1 : 0));
    }
}

TEST_CASE("fixed-space dimensions match the invariant subring in two variables") {
    PrimeCtx ctx(3);
    // gl_2 invariants are a polynomial ring on degrees 6 and 8
    auto dims = invariant_dimensions({GroupKind::Gl, 2}, 28, ctx);
    for (auto& [td, dim] : dims) {
        long long deg = td / 2;
        long long count = 0;
        for (long long a = 0; 6 * a <= deg; ++a)
            if ((deg - 6 * a) % 8 == 0) ++count;
        CHECK(dim == count);
    }
}

TEST_CASE("weight pieces of the total power operation") {
    PrimeCtx ctx(3);
    MPoly f = t(2, 0);
    CHECK(poly_steenrod(0, f, ctx) == f);
    CHECK(poly_steenrod(1, f, ctx) == f.pow(3, ctx));
    CHECK(poly_steenrod(2, f, ctx).is_zero());
    // product rule: P^1(t1 t2) = t1^3 t2 + t1 t2^3
    MPoly prod = t(2, 0).mul(t(2, 1), ctx);
    MPoly want = t(2, 0).pow(3, ctx).mul(t(2, 1), ctx).add(
        t(2, 0).mul(t(2, 1).pow(3, ctx), ctx), ctx);
    CHECK(poly_steenrod(1, prod, ctx) == want);
    // on a power: C(2,1) t^{2+2}
    CHECK(poly_steenrod(1, f.pow(2, ctx), ctx) == f.pow(4, ctx).scale(2, ctx));
}

TEST_CASE("monomial transfer from duals to polynomials") {
    PrimeCtx ctx(3);
    CHECK(omega_map(vtilde_dual(2, 0, ctx), ctx) == mui_Vtilde(2, 1, ctx));
    CHECK(omega_map(vtilde_dual(2, 1, ctx), ctx) == mui_Vtilde(2, 2, ctx));
    // multiplicative on the generators
    DualElement v0 = vtilde_dual(2, 0, ctx);
    DualElement v1 = vtilde_dual(2, 1, ctx);
    CHECK(omega_map(dual_multiply(v0, v1, ctx), ctx) ==
          mui_Vtilde(2, 1, ctx).mul(mui_Vtilde(2, 2, ctx), ctx));
}

TEST_CASE("index-sequence expansion agrees with the projection oracle") {
    PrimeCtx ctx(3);
    CHECK(sigma_closed_form_c(2, 1, ctx) == sigma_map(dickson_dual(2, 1, ctx), ctx));
    CHECK(sigma_closed_form_c(2, 0, ctx) == sigma_map(dickson_dual(2, 0, ctx), ctx));
}

TEST_CASE("corner checks and the commuting report at n=2") {
    PrimeCtx ctx(3);
    auto corners = duality_corner_checks(2, 40, ctx);
    REQUIRE(corners.size() == 4);
    for (auto& c : corners) CHECK(c.ok);
    CommuteReport rep = commuting_square_report(2, ctx, 24);
    CHECK(rep.all_ok());
    REQUIRE(rep.lines.size() == 2);
    CHECK(rep.lines[0].name == "s");
    CHECK(rep.lines[1].name == "c1");
}
