#pragma once
#include <map>
#include <utility>

#include "kam/algebra.hpp"
#include "kam/mpoly.hpp"

namespace kam {

// Straightening sum for e_i e_j, defined for ALL integers i, j:
//   theta(i,j) = sum_k (-1)^q C(k-j-1, q-j) e_{i+pj-pk} e_k,  q = (pk-i)/(p-1),
// over the k with q integral (k == i mod p-1); monomials with a negative (or,
// in tildeU, odd) subscript are dropped, and the generalized binomial kills
// q < j.  The flavor's family must be UHat or UTilde.
Element theta(long long i, long long j, Flavor f, const PrimeCtx& ctx);

// Same sum written on the d-indexed generators (family UPlain):
//   theta_d(i,j) = sum_l (-1)^{pl-i} C((p-1)(l-j)-1, pl-i-(p-1)j) d_{i+pj-pl} d_l.
Element theta_d(long long i, long long j, const PrimeCtx& ctx);

// Theta(i,j) = e_i e_j - theta(i,j), with the leading monomial replaced by 0
// when i or j is negative or flavor-illegal.  The Adem relations are the
// i, j >= 0 instances; all integer instances are valid relations.
Element full_relation(long long i, long long j, Flavor f, const PrimeCtx& ctx);

// Linear extension of theta over the length-2 monomials of x.
Element theta_of(const Element& x, const PrimeCtx& ctx);

// Commutation defect of the symmetric-function relation pair (r, s):
//   sum_k (-1)^{k+s} C(s-(p-1)k, k) e_{r+(pk-s)(p-1)} e_{s-k(p-1)}
// minus the same sum with r and s exchanged.
Element mays_relation_defect(long long r, long long s, Flavor f, const PrimeCtx& ctx);

// eta(e_i e_j) = e_{i+p-1} e_j + e_{i-(p-1)^2} e_{j+p-1}, linearly extended
// over a length-2 element; negative subscripts drop the monomial.
Element eta(const Element& x, const PrimeCtx& ctx);

// ---- generating series in two formal variables u = var 0, v = var 1 ----

using SeriesKey = std::pair<long long, long long>;  // (power of u, power of v)

struct ElemSeries {
    Flavor flavor;
    long long maxdeg = 0;  // keep (r,s) with r+s <= maxdeg
    std::map<SeriesKey, Element> coeffs;

    Element coeff(long long r, long long s) const;
    void add(long long r, long long s, const Element& e, const PrimeCtx& ctx);
};

ElemSeries series_mul(const ElemSeries& a, const ElemSeries& b, const PrimeCtx& ctx);
ElemSeries series_sub(const ElemSeries& a, const ElemSeries& b, const PrimeCtx& ctx);

// e(X) resp. d(X): sum_i e_i X^i with X a polynomial in u, v; truncated.
ElemSeries gen_series(Flavor f, const MPoly& X, long long maxdeg, const PrimeCtx& ctx);

// phi(a,b) = a (a^{p-1} - b^{p-1});  psi(a,b) = a (a-b)^{p-1}.
MPoly phi_of(const MPoly& a, const MPoly& b, const PrimeCtx& ctx);
MPoly psi_of(const MPoly& a, const MPoly& b, const PrimeCtx& ctx);

// Nonzero coefficients of e(u)e(phi(v,u)) - e(v)e(phi(u,v)) up to r+s <= D.
std::map<SeriesKey, Element> e_series_defect(long long D, Flavor f, const PrimeCtx& ctx);
// Same for d(u)d(psi(v,u)) - d(v)d(psi(u,v)) in family UPlain.
std::map<SeriesKey, Element> d_series_defect(long long D, const PrimeCtx& ctx);

// phi(phi(a,b), phi(c,b)) == phi(phi(a,c), phi(b,c)) as exact polynomials.
bool phi_composition_identity_holds(const PrimeCtx& ctx);

}  // namespace kam
