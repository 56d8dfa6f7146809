#pragma once
#include <map>

#include "kam/algebra.hpp"
#include "kam/quotient.hpp"

namespace kam {

struct MonoPairLess {
    bool operator()(const std::pair<Monomial, Monomial>& a,
                    const std::pair<Monomial, Monomial>& b) const {
        MonoStorageLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

class TensorElement {
public:
    using Terms = std::map<std::pair<Monomial, Monomial>, uint32_t, MonoPairLess>;

    TensorElement() : flavor_(flavors::Uhat) {}
    explicit TensorElement(Flavor f) : flavor_(f) {}

    Flavor flavor() const { return flavor_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& a, const Monomial& b, uint32_t c, const PrimeCtx& ctx);
    void add_scaled(const Element& a, const Element& b, uint32_t c, const PrimeCtx& ctx);
    uint32_t coeff(const Monomial& a, const Monomial& b) const;

    bool operator==(const TensorElement& o) const {
        return flavor_ == o.flavor_ && terms_ == o.terms_;
    }

private:
    Flavor flavor_;
    Terms terms_;
};

TensorElement tensor_add(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx);
// componentwise product (x1 (x) y1)(x2 (x) y2) = x1 x2 (x) y1 y2
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, const PrimeCtx& ctx);

// Diagonal: e_i -> sum_a e_a (x) e_{i-a} (d_i -> sum d_a (x) d_{i-a}),
// extended multiplicatively; flavor-illegal terms drop (tildeU keeps even a).
// On a quotiented flavor both legs are renormalized after every generator
// step, so the result is expressed on basis monomials throughout.
TensorElement diagonal(const Element& x, const PrimeCtx& ctx);

// Normalize both legs of a free-flavor tensor in the quotient of the same
// family (used to check that relation rows die legwise).
TensorElement quotient_legs(const TensorElement& t, const PrimeCtx& ctx);

struct PrimitivesBlock {
    Bidegree bd;
    std::vector<Element> basis;  // primitive space basis in this component
};

struct PrimitivesReport {
    Flavor flavor;
    int n = 0;
    long long t_max = 0;
    Element grouplike;  // e_0^n; reported apart from the strict primitives
    std::vector<PrimitivesBlock> blocks;  // only components with primitives
};

// Strict primitives: kernel of x -> Dx - x(x)g - g(x)x in each topdeg <= t_max.
PrimitivesReport primitives(Flavor f, int n, long long t_max, const PrimeCtx& ctx);

}  // namespace kam
