#pragma once
#include <map>
#include <vector>

#include "kam/algebra.hpp"
#include "kam/dual.hpp"
#include "kam/mpoly.hpp"
#include "kam/relations.hpp"

namespace kam {

// The operation d_i acting on a word algebra element:
//   d_i * 1 = [i = 0],
//   d_i * (e_j x) = sum_k (-1)^{i-k} C(i + (j-i)/p, i-k) e_{i+(j-i)/p - (p-1)k} (d_k * x),
// the whole clause zero unless p | (j - i).  Defined on every family (UPlain
// converts through its e-subscripts and lands back on d-indices).  The result
// is on free representatives; callers normalize when they need normal forms.
Element act_d(long long i, const Element& x, const PrimeCtx& ctx);

// Word action: d_{i_1}..d_{i_m} * x = d_{i_m} * ( ... (d_{i_1} * x) ... ),
// i.e. the leftmost factor acts first (the word algebra acts through its
// opposite).  The Element overload extends linearly over a U/K word element.
Element act_word(const std::vector<long long>& word, const Element& x, const PrimeCtx& ctx);
Element act_word(const Element& kword, const Element& x, const PrimeCtx& ctx);

// reduce_oracle(d_i * r) == 0 for a relation-row r of a quotiented flavor.
bool check_descent(const Element& relation_row, long long i, const PrimeCtx& ctx);

// (P^j f)(x) = (-1)^{q-j} f(d_{q-j} * x) for f dual to a (n, 2q) component;
// the result pairs with (n, 2q + 2(p-1)j).  Zero when j > q.
DualElement steenrod_P_dual(long long j, const DualElement& f, const PrimeCtx& ctx);

// Coefficients of d(u^{p-1}) * (e(v) x)  minus  e(phi(v,u)) (d(phi(u,v)^{p-1}) * x)
// up to total degree D; empty iff the series identity holds on x.
std::map<SeriesKey, Element> nishida_series_defect(long long D, const Element& x, const PrimeCtx& ctx);

}  // namespace kam
