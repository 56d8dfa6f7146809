#pragma once
#include <map>

#include "kam/algebra.hpp"
#include "kam/quotient.hpp"

namespace kam {

// Functional on one (length, topdeg) component, stored by its values on the
// component's preferred basis: admissible monomials for a quotiented flavor,
// all monomials otherwise.  The topdeg doubles as cohomological degree.
struct DualElement {
    Flavor flavor;
    Bidegree bd;
    std::map<Monomial, uint32_t, MonoStorageLess> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const DualElement& o) const = default;
};

DualElement dual_zero(Flavor f, Bidegree bd);

// m^*: the functional dual to one basis monomial.
DualElement dual_basis_functional(Flavor f, const Monomial& m, const PrimeCtx& ctx);

// f(x); x is normalized first when the flavor is quotiented.
uint32_t pair_with(const DualElement& f, const Element& x, const PrimeCtx& ctx);

// Convolution product dual to the diagonal.  For free flavors this works out
// to componentwise subscript addition; the general path pairs against the
// diagonal of each basis monomial of the target component.
DualElement dual_multiply(const DualElement& a, const DualElement& b, const PrimeCtx& ctx);
DualElement dual_power(const DualElement& a, long long k, const PrimeCtx& ctx);

// Precompose with the quotient projection: (sigma f)(x) = f(normal form of x).
// Takes a quotiented-flavor dual to the free dual of the same family.
DualElement sigma_map(const DualElement& f, const PrimeCtx& ctx);

DualElement dual_add(const DualElement& a, const DualElement& b, const PrimeCtx& ctx);
DualElement dual_scale(const DualElement& a, uint32_t c, const PrimeCtx& ctx);

// Named generators on the dual side.
DualElement vtilde_dual(int n, int a, const PrimeCtx& ctx);   // (e_0^a e_2 e_0^{n-a-1})^*, free tildeU
DualElement stilde_dual(int n, const PrimeCtx& ctx);          // (e_2^n)^*, tildeK
DualElement dickson_dual(int n, int a, const PrimeCtx& ctx);  // (e_0^a e_{p-1}^{n-a})^*, tildeK

}  // namespace kam
