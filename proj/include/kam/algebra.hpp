#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kam/fp.hpp"

namespace kam {

// The three free families, each optionally quotiented by the Adem span:
//   UHat   : generators e_i, i >= 0               (quotient written Khat)
//   UTilde : generators e_i, i >= 0 even          (quotient Ktilde)
//   UPlain : generators d_i = e_{i(p-1)}, stored by their d-index (quotient K)
// Topological degree is skewed: |xy| = |x| + p|y|, |e_i| = 2i.
enum class Family : uint8_t { UHat, UTilde, UPlain };

struct Flavor {
    Family family;
    bool quotiented;

    bool operator==(const Flavor&) const = default;
    auto operator<=>(const Flavor&) const = default;
};

namespace flavors {
inline constexpr Flavor Uhat{Family::UHat, false};
inline constexpr Flavor Utilde{Family::UTilde, false};
inline constexpr Flavor Uplain{Family::UPlain, false};
inline constexpr Flavor Khat{Family::UHat, true};
inline constexpr Flavor Ktilde{Family::UTilde, true};
inline constexpr Flavor Kplain{Family::UPlain, true};
}  // namespace flavors

const char* flavor_name(Flavor f);                 // hatU, tildeU, U, hatK, tildeK, K
std::optional<Flavor> flavor_from_name(const std::string& s);

// Subscript legality within a family (UPlain subscripts are d-indices).
bool legal_subscript(Family fam, long long s);

struct Monomial {
    Family family = Family::UHat;
    std::vector<int> subs;

    size_t length() const { return subs.size(); }
    bool operator==(const Monomial&) const = default;
};

// Storage order: by length, then lex on subscripts.  The degree-graded order
// used for enumeration, pivoting and rendering lives in monomial_less below.
struct MonoStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.subs.size() != b.subs.size()) return a.subs.size() < b.subs.size();
        return a.subs < b.subs;
    }
};

struct Bidegree {
    int n = 0;           // word length
    long long t = 0;     // topological degree (always even)
    bool operator==(const Bidegree&) const = default;
    auto operator<=>(const Bidegree&) const = default;
};

long long top_degree(const Monomial& m, const PrimeCtx& ctx);
Bidegree bidegree_of(const Monomial& m, const PrimeCtx& ctx);

// (length, topdeg, lex) order used wherever a deterministic listing matters.
bool monomial_less(const Monomial& a, const Monomial& b, const PrimeCtx& ctx);

class Element {
public:
    using Terms = std::map<Monomial, uint32_t, MonoStorageLess>;

    Element() : flavor_(flavors::Uhat) {}
    explicit Element(Flavor f) : flavor_(f) {}

    Flavor flavor() const { return flavor_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Returns the zero element when any subscript is illegal for the flavor.
    static Element single(Flavor f, std::vector<int> subs, uint32_t coeff, const PrimeCtx& ctx);
    static Element unit(Flavor f);  // the empty monomial

    void add_term(const Monomial& m, uint32_t c, const PrimeCtx& ctx);
    uint32_t coeff(const Monomial& m) const;

    bool operator==(const Element& o) const { return flavor_ == o.flavor_ && terms_ == o.terms_; }

private:
    Flavor flavor_;
    Terms terms_;
};

Element add(const Element& a, const Element& b, const PrimeCtx& ctx);
Element sub(const Element& a, const Element& b, const PrimeCtx& ctx);
Element scale(const Element& a, uint32_t c, const PrimeCtx& ctx);
// Concatenation product, bilinear; throws on flavor mismatch.
Element multiply(const Element& a, const Element& b, const PrimeCtx& ctx);

// Is x homogeneous?  Returns its bidegree if so (zero -> nullopt).
std::optional<Bidegree> homogeneous_bidegree(const Element& x, const PrimeCtx& ctx);

struct AdmissibleInfo {
    bool admissible;                    // subscripts nondecreasing
    std::optional<long long> excess;    // j - i when the length is 2
};
AdmissibleInfo excess_admissible(const Monomial& m);

enum class EndoKind { AlphaHat, AlphaTilde, Alpha, Kappa, Verschiebung };

// AlphaHat: e_i -> e_{i-1} on UHat; AlphaTilde: e_i -> e_{i-2} on UTilde;
// Alpha: d_i -> d_{i-1} on UPlain; Kappa: left multiplication by the degree-0
// generator; Verschiebung: e_i -> e_{i/p} (d_i -> d_{i/p}), zero unless p | i.
// All extended so that a monomial with any failing generator is dropped.
Element apply_endo(const Element& x, EndoKind kind, const PrimeCtx& ctx);

// All flavor-legal monomials of the bidegree, in lex order on subscripts.
std::vector<Monomial> enumerate_basis_monomials(Flavor f, Bidegree bd, const PrimeCtx& ctx);

// Family conversion: UTilde/UPlain embed into UHat; projections drop the
// monomials whose subscripts are illegal on the target side.
Element project(const Element& x, Flavor target, const PrimeCtx& ctx);

}  // namespace kam
