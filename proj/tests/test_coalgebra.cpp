#include "doctest.h"
#include "kam/coalgebra.hpp"
#include "kam/relations.hpp"

using namespace kam;

namespace {

Element mono(Flavor f, std::vector<int> subs, const PrimeCtx& ctx, uint32_t c = 1) {
    return Element::single(f, std::move(subs), c, ctx);
}

Monomial mk(Family fam, std::vector<int> subs) { return Monomial{fam, std::move(subs)}; }

}  // namespace

TEST_CASE("diagonal of one generator") {
    PrimeCtx ctx(3);
    TensorElement want(flavors::Uhat);
    for (int a = 0; a <= 2; ++a)
        want.add_term(mk(Family::UHat, {a}), mk(Family::UHat, {2 - a}), 1, ctx);
    CHECK(diagonal(mono(flavors::Uhat, {2}, ctx), ctx) == want);

    // tildeU keeps only the even splits
    TensorElement wantT(flavors::Utilde);
    wantT.add_term(mk(Family::UTilde, {0}), mk(Family::UTilde, {2}), 1, ctx);
    wantT.add_term(mk(Family::UTilde, {2}), mk(Family::UTilde, {0}), 1, ctx);
    CHECK(diagonal(mono(flavors::Utilde, {2}, ctx), ctx) == wantT);

    // d-indices split on the d scale
    TensorElement wantD(flavors::Uplain);
    for (int a = 0; a <= 2; ++a)
        wantD.add_term(mk(Family::UPlain, {a}), mk(Family::UPlain, {2 - a}), 1, ctx);
    CHECK(diagonal(mono(flavors::Uplain, {2}, ctx), ctx) == wantD);
}

TEST_CASE("diagonal is an algebra map on a sample product") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Uhat, {2}, ctx);
    Element y = mono(flavors::Uhat, {4}, ctx, 2);
    CHECK(diagonal(multiply(x, y, ctx), ctx) ==
          tensor_multiply(diagonal(x, ctx), diagonal(y, ctx), ctx));
}

TEST_CASE("the length-n bottom class is grouplike") {
    PrimeCtx ctx(3);
    Element g = mono(flavors::Uhat, {0, 0}, ctx);
    TensorElement want(flavors::Uhat);
    want.add_scaled(g, g, 1, ctx);
    CHECK(diagonal(g, ctx) == want);
}

TEST_CASE("tensor arithmetic cancels") {
    PrimeCtx ctx(3);
    TensorElement a(flavors::Uhat);
    a.add_term(mk(Family::UHat, {1}), mk(Family::UHat, {2}), 2, ctx);
    TensorElement b(flavors::Uhat);
    b.add_term(mk(Family::UHat, {1}), mk(Family::UHat, {2}), 1, ctx);
    CHECK(tensor_add(a, b, ctx).is_zero());
    CHECK(tensor_sub(a, a, ctx).is_zero());
    CHECK(a.coeff(mk(Family::UHat, {1}), mk(Family::UHat, {2})) == 2);
    CHECK(a.coeff(mk(Family::UHat, {2}), mk(Family::UHat, {1})) == 0);
}

TEST_CASE("diagonal on a quotient stays on basis monomials") {
    PrimeCtx ctx(3);
    TensorElement dx = diagonal(mono(flavors::Ktilde, {6, 0}, ctx), ctx);
    for (auto& [mm, c] : dx.terms()) {
        CHECK(is_basis_monomial(flavors::Ktilde, mm.first, ctx));
        CHECK(is_basis_monomial(flavors::Ktilde, mm.second, ctx));
    }
    // and agrees with the diagonal of the normal form
    CHECK(dx == diagonal(normalize(mono(flavors::Ktilde, {6, 0}, ctx), ctx), ctx));
}

TEST_CASE("relation rows die legwise under the diagonal") {
    PrimeCtx ctx(3);
    for (auto [i, j] : {std::pair{1, 2}, {4, 2}, {0, 2}}) {
        Element row = full_relation(i, j, flavors::Uhat, ctx);
        if (row.is_zero()) continue;
        CHECK(quotient_legs(diagonal(row, ctx), ctx).is_zero());
    }
    Element rowT = full_relation(6, 0, flavors::Utilde, ctx);
    CHECK(quotient_legs(diagonal(rowT, ctx), ctx).is_zero());
}

TEST_CASE("primitives of the length-2 quotient at p=3") {
    PrimeCtx ctx(3);
    PrimitivesReport rep = primitives(flavors::Ktilde, 2, 16, ctx);
    CHECK(rep.grouplike == mono(flavors::Ktilde, {0, 0}, ctx));
    REQUIRE(rep.blocks.size() == 2);
    CHECK(rep.blocks[0].bd == Bidegree{2, 12});
    REQUIRE(rep.blocks[0].basis.size() == 1);
    CHECK(rep.blocks[0].basis[0].coeff(mk(Family::UTilde, {0, 2})) != 0);
    CHECK(rep.blocks[0].basis[0].term_count() == 1);
    CHECK(rep.blocks[1].bd == Bidegree{2, 16});
    REQUIRE(rep.blocks[1].basis.size() == 1);
    CHECK(rep.blocks[1].basis[0].coeff(mk(Family::UTilde, {2, 2})) != 0);
}

TEST_CASE("primitive defect vanishes for a known primitive") {
    PrimeCtx ctx(3);
    // Dx - x (x) g - g (x) x for x = e_0 e_2 in the length-2 quotient
    Element x = mono(flavors::Ktilde, {0, 2}, ctx);
    Element g = mono(flavors::Ktilde, {0, 0}, ctx);
    TensorElement defect = diagonal(x, ctx);
    TensorElement cross(flavors::Ktilde);
    cross.add_scaled(x, g, 1, ctx);
    cross.add_scaled(g, x, 1, ctx);
    CHECK(tensor_sub(defect, cross, ctx).is_zero());
}
