#include <vector>

#include "doctest.h"
#include "kam/algebra.hpp"

using namespace kam;

namespace {

Element mono(Flavor f, std::vector<int> subs, const PrimeCtx& ctx, uint32_t c = 1) {
    return Element::single(f, std::move(subs), c, ctx);
}

}  // namespace

TEST_CASE("flavor names round trip") {
    for (Flavor f : {flavors::Uhat, flavors::Utilde, flavors::Uplain, flavors::Khat,
                     flavors::Ktilde, flavors::Kplain}) {
        auto back = flavor_from_name(flavor_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(flavor_from_name("Q").has_value());
}

TEST_CASE("subscript legality per family") {
    CHECK(legal_subscript(Family::UHat, 0));
    CHECK(legal_subscript(Family::UHat, 3));
    CHECK_FALSE(legal_subscript(Family::UHat, -1));
    CHECK(legal_subscript(Family::UTilde, 4));
    CHECK_FALSE(legal_subscript(Family::UTilde, 3));
    CHECK(legal_subscript(Family::UPlain, 7));
    CHECK_FALSE(legal_subscript(Family::UPlain, -2));
}

TEST_CASE("topological degree weights subscripts by p powers") {
    PrimeCtx ctx(3);
    CHECK(top_degree(Monomial{Family::UHat, {5}}, ctx) == 10);
    // leftmost weight p^0: e_1 e_2 has 2(1 + 3*2)
    CHECK(top_degree(Monomial{Family::UHat, {1, 2}}, ctx) == 14);
    CHECK(top_degree(Monomial{Family::UHat, {2, 1}}, ctx) == 10);
    // d-subscripts carry the (p-1) scale
    CHECK(top_degree(Monomial{Family::UPlain, {5}}, ctx) == 20);
    CHECK(top_degree(Monomial{Family::UPlain, {1, 2}}, ctx) == 2 * 2 * (1 + 3 * 2));
    CHECK(bidegree_of(Monomial{Family::UHat, {1, 2}}, ctx) == Bidegree{2, 14});
}

TEST_CASE("degree of a product skews the right factor") {
    PrimeCtx ctx(5);
    Monomial x{Family::UHat, {3, 1}};
    Monomial y{Family::UHat, {2, 0, 4}};
    Monomial xy{Family::UHat, {3, 1, 2, 0, 4}};
    long long pn = 25;  // p^{len x}
    CHECK(top_degree(xy, ctx) == top_degree(x, ctx) + pn * top_degree(y, ctx));
}

TEST_CASE("single drops flavor-illegal subscripts") {
    PrimeCtx ctx(3);
    CHECK(mono(flavors::Utilde, {3}, ctx).is_zero());
    CHECK(mono(flavors::Uhat, {-1}, ctx).is_zero());
    CHECK_FALSE(mono(flavors::Uhat, {3}, ctx).is_zero());
    CHECK(mono(flavors::Uhat, {3}, ctx, 0).is_zero());
}

TEST_CASE("element arithmetic cancels mod p") {
    PrimeCtx ctx(3);
    Element a = mono(flavors::Uhat, {1, 2}, ctx, 2);
    Element b = mono(flavors::Uhat, {1, 2}, ctx, 1);
    CHECK(add(a, b, ctx).is_zero());
    CHECK(sub(a, a, ctx).is_zero());
    CHECK(scale(a, 0, ctx).is_zero());
    CHECK(scale(a, 2, ctx) == b);
    Element s = add(a, mono(flavors::Uhat, {0}, ctx), ctx);
    CHECK(s.term_count() == 2);
    CHECK(s.coeff(Monomial{Family::UHat, {1, 2}}) == 2);
}

TEST_CASE("multiply concatenates and is bilinear") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Uhat, {1}, ctx, 2);
    Element y = mono(flavors::Uhat, {2, 0}, ctx, 2);
    CHECK(multiply(x, y, ctx) == mono(flavors::Uhat, {1, 2, 0}, ctx, 1));
    CHECK(multiply(Element::unit(flavors::Uhat), x, ctx) == x);
    CHECK(multiply(x, Element::unit(flavors::Uhat), ctx) == x);

    Element u = add(mono(flavors::Uhat, {0}, ctx), mono(flavors::Uhat, {1}, ctx), ctx);
    Element v = add(mono(flavors::Uhat, {2}, ctx), mono(flavors::Uhat, {3}, ctx, 2), ctx);
    Element w = mono(flavors::Uhat, {4}, ctx);
    CHECK(multiply(multiply(u, v, ctx), w, ctx) == multiply(u, multiply(v, w, ctx), ctx));
    CHECK(multiply(u, add(v, w, ctx), ctx) ==
          add(multiply(u, v, ctx), multiply(u, w, ctx), ctx));
}

TEST_CASE("homogeneous bidegree detects mixed sums") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Uhat, {1, 2}, ctx);
    auto bd = homogeneous_bidegree(x, ctx);
    REQUIRE(bd.has_value());
    CHECK(*bd == Bidegree{2, 14});
    CHECK_FALSE(homogeneous_bidegree(add(x, mono(flavors::Uhat, {0}, ctx), ctx), ctx).has_value());
    CHECK_FALSE(homogeneous_bidegree(Element(flavors::Uhat), ctx).has_value());
    // same topdeg, both length 2: still homogeneous
    Element y = add(x, mono(flavors::Uhat, {4, 1}, ctx), ctx);
    CHECK(homogeneous_bidegree(y, ctx).has_value());
}

TEST_CASE("excess and admissibility") {
    auto a = excess_admissible(Monomial{Family::UHat, {2, 4}});
    CHECK(a.admissible);
    REQUIRE(a.excess.has_value());
    CHECK(*a.excess == 2);
    auto b = excess_admissible(Monomial{Family::UHat, {4, 2}});
    CHECK_FALSE(b.admissible);
    auto c = excess_admissible(Monomial{Family::UHat, {1, 1, 3}});
    CHECK(c.admissible);
    CHECK_FALSE(c.excess.has_value());
}

TEST_CASE("endomorphisms shift, prepend, divide") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Uhat, {2, 3}, ctx);
    CHECK(apply_endo(x, EndoKind::AlphaHat, ctx) == mono(flavors::Uhat, {1, 2}, ctx));
    CHECK(apply_endo(mono(flavors::Uhat, {0, 3}, ctx), EndoKind::AlphaHat, ctx).is_zero());
    CHECK(apply_endo(mono(flavors::Utilde, {4, 2}, ctx), EndoKind::AlphaTilde, ctx) ==
          mono(flavors::Utilde, {2, 0}, ctx));
    CHECK(apply_endo(mono(flavors::Uplain, {3}, ctx), EndoKind::Alpha, ctx) ==
          mono(flavors::Uplain, {2}, ctx));
    CHECK(apply_endo(x, EndoKind::Kappa, ctx) == mono(flavors::Uhat, {0, 2, 3}, ctx));
    CHECK(apply_endo(mono(flavors::Uhat, {6, 3}, ctx), EndoKind::Verschiebung, ctx) ==
          mono(flavors::Uhat, {2, 1}, ctx));
    CHECK(apply_endo(mono(flavors::Uhat, {6, 4}, ctx), EndoKind::Verschiebung, ctx).is_zero());
}

TEST_CASE("Verschiebung is multiplicative") {
    PrimeCtx ctx(3);
    Element x = add(mono(flavors::Uhat, {3}, ctx), mono(flavors::Uhat, {6}, ctx), ctx);
    Element y = add(mono(flavors::Uhat, {0}, ctx, 2), mono(flavors::Uhat, {9}, ctx), ctx);
    CHECK(apply_endo(multiply(x, y, ctx), EndoKind::Verschiebung, ctx) ==
          multiply(apply_endo(x, EndoKind::Verschiebung, ctx),
                   apply_endo(y, EndoKind::Verschiebung, ctx), ctx));
}

TEST_CASE("basis monomial enumeration matches a direct search") {
    PrimeCtx ctx(3);
    auto got = enumerate_basis_monomials(flavors::Utilde, Bidegree{2, 12}, ctx);
    std::vector<Monomial> want;
    for (int a = 0; a <= 6; a += 2)
        for (int b = 0; b <= 2; b += 2)
            if (2 * (a + 3 * b) == 12) want.push_back(Monomial{Family::UTilde, {a, b}});
    REQUIRE(got.size() == 2);
    CHECK(got == want);
    CHECK(got[0].subs == std::vector<int>{0, 2});
    CHECK(got[1].subs == std::vector<int>{6, 0});

    // odd topdeg has no monomials; length 0 only the empty word at t=0
    CHECK(enumerate_basis_monomials(flavors::Uhat, Bidegree{2, 13}, ctx).empty());
    CHECK(enumerate_basis_monomials(flavors::Uhat, Bidegree{0, 0}, ctx).size() == 1);
    CHECK(enumerate_basis_monomials(flavors::Uplain, Bidegree{1, 20}, ctx).size() == 1);
}

TEST_CASE("family projections drop what does not embed") {
    PrimeCtx ctx(3);
    // d-index 2 corresponds to e-subscript 4
    CHECK(project(mono(flavors::Uhat, {4}, ctx), flavors::Uplain, ctx) ==
          mono(flavors::Uplain, {2}, ctx));
    CHECK(project(mono(flavors::Uhat, {3}, ctx), flavors::Uplain, ctx).is_zero());
    CHECK(project(mono(flavors::Uplain, {2}, ctx), flavors::Uhat, ctx) ==
          mono(flavors::Uhat, {4}, ctx));
    CHECK(project(mono(flavors::Utilde, {2, 6}, ctx), flavors::Uhat, ctx) ==
          mono(flavors::Uhat, {2, 6}, ctx));
    CHECK(project(mono(flavors::Uhat, {2, 3}, ctx), flavors::Utilde, ctx).is_zero());
}

TEST_CASE("graded monomial order sorts by length, degree, lex") {
    PrimeCtx ctx(3);
    Monomial a{Family::UHat, {5}};        // t=10
    Monomial b{Family::UHat, {0, 2}};     // t=12
    Monomial c{Family::UHat, {6, 0}};     // t=12
    CHECK(monomial_less(a, b, ctx));
    CHECK(monomial_less(b, c, ctx));
    CHECK_FALSE(monomial_less(c, b, ctx));
    CHECK_FALSE(monomial_less(a, a, ctx));
}
