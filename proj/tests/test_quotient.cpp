#include <random>

#include "doctest.h"
#include "kam/quotient.hpp"
#include "kam/relations.hpp"

using namespace kam;

namespace {

Element mono(Flavor f, std::vector<int> subs, const PrimeCtx& ctx, uint32_t c = 1) {
    return Element::single(f, std::move(subs), c, ctx);
}

Element random_element(Flavor f, std::mt19937_64& rng, const PrimeCtx& ctx) {
    int step = f.family == Family::UTilde ? 2 : 1;
    Element x(f);
    for (int t = 0; t < 3; ++t) {
        std::vector<int> subs;
        for (int k = 0; k < 2; ++k) subs.push_back(step * int(rng() % 5));
        x = add(x, mono(f, subs, ctx, 1 + uint32_t(rng() % (ctx.p() - 1))), ctx);
    }
    return x;
}

}  // namespace

TEST_CASE("closed-form basis conditions") {
    PrimeCtx ctx3(3), ctx5(5);
    CHECK(is_basis_monomial(flavors::Kplain, Monomial{Family::UPlain, {1, 2}}, ctx3));
    CHECK_FALSE(is_basis_monomial(flavors::Kplain, Monomial{Family::UPlain, {2, 1}}, ctx3));
    CHECK(is_basis_monomial(flavors::Ktilde, Monomial{Family::UTilde, {0, 2}}, ctx3));
    CHECK_FALSE(is_basis_monomial(flavors::Ktilde, Monomial{Family::UTilde, {6, 0}}, ctx3));
    // adjacent subscripts must agree mod p-1
    CHECK_FALSE(is_basis_monomial(flavors::Ktilde, Monomial{Family::UTilde, {0, 2}}, ctx5));
    CHECK(is_basis_monomial(flavors::Ktilde, Monomial{Family::UTilde, {0, 4}}, ctx5));
    // length one is unrestricted in hatK, longer words need even subscripts
    CHECK(is_basis_monomial(flavors::Khat, Monomial{Family::UHat, {3}}, ctx3));
    CHECK_FALSE(is_basis_monomial(flavors::Khat, Monomial{Family::UHat, {1, 3}}, ctx3));
    CHECK(is_basis_monomial(flavors::Khat, Monomial{Family::UHat, {0, 2}}, ctx3));
}

TEST_CASE("admissible basis of a small component") {
    PrimeCtx ctx(3);
    auto b12 = admissible_basis(flavors::Ktilde, Bidegree{2, 12}, ctx);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0].subs == std::vector<int>{0, 2});
    // the (2, 20) component dies entirely
    CHECK(admissible_basis(flavors::Ktilde, Bidegree{2, 20}, ctx).empty());
}

TEST_CASE("relation span rank complements the closed-form count") {
    PrimeCtx ctx(3);
    Bidegree bd{2, 20};
    auto space = relation_space(flavors::Ktilde, bd, ctx);
    size_t dim = enumerate_basis_monomials(flavors::Utilde, bd, ctx).size();
    CHECK(space->rank() == dim);
    CHECK(space->complement().empty());

    Bidegree bd12{2, 12};
    auto space12 = relation_space(flavors::Ktilde, bd12, ctx);
    CHECK(space12->rank() == 1);
    REQUIRE(space12->complement().size() == 1);
    CHECK(space12->complement()[0].subs == std::vector<int>{0, 2});
}

TEST_CASE("normal forms of known straightenings") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Ktilde, {6, 0}, ctx);
    Element want = mono(flavors::Ktilde, {0, 2}, ctx);
    CHECK(normalize(x, ctx) == want);
    CHECK(reduce_oracle(x, ctx) == want);
    CHECK(normal_form_cached(flavors::Ktilde, Monomial{Family::UTilde, {6, 0}}, ctx) == want);
    // everything in (2, 20) reduces to zero
    CHECK(normalize(mono(flavors::Ktilde, {4, 2}, ctx), ctx).is_zero());
    CHECK(normalize(mono(flavors::Ktilde, {10, 0}, ctx), ctx).is_zero());
}

TEST_CASE("kill rules erase odd and noncongruent pairs") {
    PrimeCtx ctx3(3), ctx5(5);
    CHECK(normalize(mono(flavors::Khat, {1, 3}, ctx3), ctx3).is_zero());
    CHECK(normalize(mono(flavors::Khat, {2, 1}, ctx3), ctx3).is_zero());
    CHECK(normalize(mono(flavors::Ktilde, {0, 2}, ctx5), ctx5).is_zero());
    CHECK_FALSE(normalize(mono(flavors::Khat, {3}, ctx3), ctx3).is_zero());
}

TEST_CASE("normal form is idempotent linear and oracle-equal") {
    std::mt19937_64 rng(42);
    for (Flavor f : {flavors::Khat, flavors::Ktilde, flavors::Kplain}) {
        PrimeCtx ctx(3);
        for (int trial = 0; trial < 12; ++trial) {
            Element x = random_element(f, rng, ctx);
            Element y = random_element(f, rng, ctx);
            Element nx = normalize(x, ctx);
            CHECK(normalize(nx, ctx) == nx);
            CHECK(nx == reduce_oracle(x, ctx));
            CHECK(normalize(add(x, y, ctx), ctx) == add(normalize(x, ctx), normalize(y, ctx), ctx));
            CHECK(normalize(scale(x, 2, ctx), ctx) == scale(nx, 2, ctx));
        }
    }
}

TEST_CASE("normal forms land on basis monomials") {
    std::mt19937_64 rng(7);
    PrimeCtx ctx(5);
    for (int trial = 0; trial < 10; ++trial) {
        Element x = random_element(flavors::Kplain, rng, ctx);
        Element nx = normalize(x, ctx);
        for (auto& [m, c] : nx.terms())
            CHECK(is_basis_monomial(flavors::Kplain, m, ctx));
    }
}

TEST_CASE("relation rows reduce to zero") {
    PrimeCtx ctx(3);
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
            Element row = full_relation(i, j, flavors::Khat, ctx);
            CHECK(normalize(row, ctx).is_zero());
            CHECK(reduce_oracle(row, ctx).is_zero());
        }
}

TEST_CASE("negative-index relations are redundant") {
    PrimeCtx ctx(3);
    CHECK(check_negative_redundancy(-1, 3, flavors::Ktilde, ctx));
    CHECK(check_negative_redundancy(-2, 3, flavors::Khat, ctx));
    CHECK(check_negative_redundancy(5, -2, flavors::Khat, ctx));
    CHECK(check_negative_redundancy(-4, -2, flavors::Ktilde, ctx));
    CHECK(check_negative_redundancy(7, -1, flavors::Kplain, ctx));
}

TEST_CASE("normalize rejects free flavors") {
    PrimeCtx ctx(3);
    Element x = mono(flavors::Uhat, {2, 1}, ctx);
    CHECK_THROWS_AS(normalize(x, ctx), std::invalid_argument);
    CHECK_THROWS_AS(reduce_oracle(x, ctx), std::invalid_argument);
}
