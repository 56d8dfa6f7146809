#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "kam/algebra.hpp"

namespace kam {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "2 e0 e2 + e6 e0" style rendering; terms in degree-graded order, canonical
// coefficients, "0" for the zero element, bare integer for unit multiples.
std::string render_element(const Element& x, const PrimeCtx& ctx);
std::string render_monomial(const Monomial& m);

// element := term (('+'|'-') term)*
// term    := [coefficient '*'?] generator+
// generator := ('e'|'d') integer
// 'd' generators are only valid in the U/K flavors; flavor-illegal subscripts
// contribute zero and push a warning.  Malformed input throws UsageError.
Element parse_element(const std::string& text, Flavor f, const PrimeCtx& ctx,
                      std::vector<std::string>* warnings = nullptr);

}  // namespace kam
