#pragma once
#include <map>
#include <string>
#include <vector>

#include "kam/fp.hpp"

namespace kam {

// Sparse polynomial over F_p in a fixed number of commuting variables.
// Doubles as the coefficient ring for the two-variable series work and as
// F_p[t_1..t_n] on the invariant-theory side (each t_i in topological
// degree 2, i.e. topdeg = 2 * polynomial degree).
class MPoly {
public:
    using Expo = std::vector<int>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, uint32_t c);
    static MPoly variable(int nvars, int idx);  // t_idx, 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, uint32_t>& terms() const { return terms_; }

    void add_term(const Expo& e, uint32_t c, const PrimeCtx& ctx);

    MPoly add(const MPoly& o, const PrimeCtx& ctx) const;
    MPoly sub(const MPoly& o, const PrimeCtx& ctx) const;
    // maxdeg < 0: no truncation; otherwise terms of total degree > maxdeg are dropped.
    MPoly mul(const MPoly& o, const PrimeCtx& ctx, long long maxdeg = -1) const;
    MPoly pow(long long e, const PrimeCtx& ctx, long long maxdeg = -1) const;
    MPoly scale(uint32_t c, const PrimeCtx& ctx) const;

    // Substitute images[v] for variable v; images share some variable count.
    MPoly subst(const std::vector<MPoly>& images, const PrimeCtx& ctx) const;

    long long total_degree() const;  // -1 for the zero polynomial
    long long min_total_degree() const;

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    std::string str(const std::string& var = "t") const;

private:
    int nvars_;
    std::map<Expo, uint32_t> terms_;
};

}  // namespace kam
