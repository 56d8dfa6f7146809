#pragma once
#include <memory>

#include "kam/algebra.hpp"
#include "kam/fplinalg.hpp"

namespace kam {

// Echelonized span of the embedded relation rows x * Theta(i,j) * y inside a
// single (length, topdeg) component.  Columns are the free monomials of the
// component with the non-basis monomials (by the closed-form conditions)
// listed first, so the pivots consume exactly the non-basis monomials
// whenever the basis description is correct.
struct RelationSpace {
    Flavor flavor;  // quotiented
    Bidegree bd;
    std::vector<Monomial> columns;
    FpMat rows;                   // reduced row echelon form
    std::vector<size_t> pivots;   // pivot column per row
    std::vector<char> is_pivot;   // per column

    size_t rank() const { return pivots.size(); }
    std::vector<Monomial> complement() const;
};

using RelationSpacePtr = std::shared_ptr<const RelationSpace>;

// Cached per (family, p, bidegree); safe under concurrent fills.
RelationSpacePtr relation_space(Flavor f, Bidegree bd, const PrimeCtx& ctx);

// Closed-form basis conditions: UPlain: d-subscripts nondecreasing;
// UTilde: nondecreasing and adjacent subscripts congruent mod p-1;
// UHat: length <= 1 unrestricted, otherwise the UTilde conditions plus
// evenness.  (Subscript legality is assumed.)
bool is_basis_monomial(Flavor f, const Monomial& m, const PrimeCtx& ctx);

// Monomials of the component surviving in the quotient, in lex order.
std::vector<Monomial> admissible_basis(Flavor f, Bidegree bd, const PrimeCtx& ctx);

// Normal form through the echelonized relation span.  Linear, idempotent,
// and the authority the fast rewriter is measured against.
Element reduce_oracle(const Element& x, const PrimeCtx& ctx);

// Fast normal form: kill rules (odd or noncongruent adjacent subscripts where
// they apply) plus leftmost straightening of inadmissible pairs, with an
// iteration budget of 10x the component dimension and an oracle fallback.
// U/K uses pure rewriting (no fallback; excess descent terminates).
Element normalize(const Element& x, const PrimeCtx& ctx);

// normalize of a single monomial, memoized per (family, p, subscripts).
// The diagonal and dual computations reduce the same monomials over and over.
Element normal_form_cached(Flavor f, const Monomial& m, const PrimeCtx& ctx);

// reduce_oracle(Theta(i,j)) == 0; meant for instances with i < 0 or j < 0,
// which exercises the claim that the negative-index relations are redundant.
bool check_negative_redundancy(long long i, long long j, Flavor f, const PrimeCtx& ctx);

struct NormalizeStats {
    uint64_t rewrite_steps = 0;
    uint64_t fallbacks = 0;
};
NormalizeStats normalize_stats();
void clear_quotient_caches();

}  // namespace kam
