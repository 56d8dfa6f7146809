#pragma once
#include <optional>
#include <string>
#include <vector>

#include "kam/dual.hpp"
#include "kam/fplinalg.hpp"
#include "kam/mpoly.hpp"

namespace kam {

// Classical families in F_p[t_1..t_n], each t_i in topological degree 2.

// V_i = prod over (p^{i-1}) tuples lambda of (lambda_1 t_1 + .. + lambda_{i-1} t_{i-1} + t_i).
MPoly mui_V(int n, int i, const PrimeCtx& ctx);     // 1 <= i <= n
MPoly mui_Vtilde(int n, int i, const PrimeCtx& ctx);  // V_i^2

// c_{n,0}..c_{n,n} from prod_{v in F_p^n} (X - v.t) = sum_i (-1)^{n-i} c_{n,i} X^{p^i}.
std::vector<MPoly> dickson_polys(int n, const PrimeCtx& ctx);

MPoly stilde_poly(int n, const PrimeCtx& ctx);  // prod_i V_i^2

enum class GroupKind { Unipotent, UpperPm1, Upper, SlPm, Gl };
const char* group_name(GroupKind k);
std::optional<GroupKind> group_from_name(const std::string& s);

struct GroupSpec {
    GroupKind kind;
    int n;
};

// Generating matrices: unipotent = transvections E_ij(1), i < j; upper-pm1
// adds the diagonal sign flips; upper adds per-slot primitive units; sl-pm =
// all transvections plus diag(-1,1,..); gl = transvections plus diag(g,1,..).
std::vector<FpMat> group_generators(GroupSpec g, const PrimeCtx& ctx);

// Substitution action t_j -> sum_i g_ij t_i, extended to polynomials.
MPoly poly_act(const FpMat& g, const MPoly& f, const PrimeCtx& ctx);
bool is_invariant(const MPoly& f, GroupSpec g, const PrimeCtx& ctx);

// (topdeg, dim of fixed subspace) for each topdeg 2d <= max_topdeg.
std::vector<std::pair<long long, long long>> invariant_dimensions(GroupSpec g, long long max_topdeg,
                                                                  const PrimeCtx& ctx);

// Total power operation determined by P^0 t = t, P^1 t = t^p, higher zero,
// extended as a ring endomorphism; poly_steenrod extracts the weight-k part
// (on a monomial: sum over k_1+..+k_n = k of prod C(a_i, k_i) t_i^{a_i + k_i(p-1)}).
MPoly poly_steenrod(long long k, const MPoly& f, const PrimeCtx& ctx);

// (e_{2i_1} .. e_{2i_n})^* -> Vtilde_1^{i_1} .. Vtilde_n^{i_n} on free tildeU duals.
MPoly omega_map(const DualElement& f, const PrimeCtx& ctx);

// Independent expansion of sigma(c_{n,i}): sum over index sequences
// 1 <= j_1 < .. < j_{n-i} <= n (j_0 = 0) of the dual of
//   prod_s [e_0^{j_s - j_{s-1} - 1} e_{(p-1) p^{i+s-j_s}}]  then  e_0^{n - j_{n-i}}.
DualElement sigma_closed_form_c(int n, int i, const PrimeCtx& ctx);

// One flavor/group pairing whose graded dimensions must agree three ways:
// count of basis monomials on the algebra side, fixed-space dimension on the
// invariant side, and the coefficient of a free polynomial algebra on the
// listed generator degrees.
struct CornerCheck {
    std::string label;
    std::vector<long long> gen_topdegs;
    bool ok = false;
    std::string details;  // first mismatch, empty when ok
};

// The four classical pairings at word length n:
//   hatU*  vs unipotent, tildeU* vs upper-pm1, tildeK* vs sl-pm, K* vs gl.
std::vector<CornerCheck> duality_corner_checks(int n, long long max_topdeg, const PrimeCtx& ctx);

struct CommuteLine {
    std::string name;       // "s" or "c<i>"
    long long topdeg = 0;
    bool match = false;     // omega(sigma(dual)) == classical polynomial
    bool tau_invariant = false;
    std::string image;      // rendered polynomial
};

struct CommuteReport {
    int n = 0;
    uint32_t p = 0;
    std::vector<CommuteLine> lines;
    bool sigma_closed_form_ok = false;  // sigma via oracle == index-sequence formula
    bool dims_ok = false;               // graded dims, both squares' corners
    long long dims_topdeg = 0;
    bool all_ok() const;
};

CommuteReport commuting_square_report(int n, const PrimeCtx& ctx, long long dims_topdeg = 40);

}  // namespace kam
