#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kam/coalgebra.hpp"
#include "kam/dual.hpp"
#include "kam/invariants.hpp"
#include "kam/io.hpp"
#include "kam/nishida.hpp"
#include "kam/quotient.hpp"
#include "kam/verify.hpp"

using kam::Element;
using kam::Flavor;
using kam::PrimeCtx;
using ordered_json = nlohmann::ordered_json;

namespace {

// exit 3; guards the handful of parameters that can request unbounded work
struct ResourceCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void cap(bool ok, const std::string& what) {
    if (!ok) throw ResourceCap("resource cap exceeded: " + what);
}

struct Options {
    std::string format = "text";
    uint64_t seed = 20260822;
    int jobs = 1;
    uint32_t prime = 3;
    std::string flavor;
    std::string expr;
    int length = 2;
    long long topdeg = 0;
    long long max_topdeg = 40;
    long long d_index = 0;
    long long j_index = 0;
    std::string generator;
    int n = 2;
    std::string map_name = "none";
    std::string group = "gl";
    int vars = 2;
    long long max_deg = 40;
    std::string suite = "all";
    long long max_index = -1;
    long long truncation = -1;
};

PrimeCtx make_ctx(uint32_t prime) {
    if (!kam::is_odd_prime(prime))
        throw kam::UsageError("--prime must be an odd prime (got " + std::to_string(prime) + ")");
    cap(prime <= 1000, "--prime " + std::to_string(prime) + " (limit 1000 for CLI runs)");
    return PrimeCtx(prime);
}

Flavor parse_flavor(const std::string& name) {
    auto f = kam::flavor_from_name(name);
    if (!f) throw kam::UsageError("unknown flavor '" + name + "' (hatU tildeU U hatK tildeK K)");
    return *f;
}

ordered_json element_terms(const Element& x) {
    ordered_json arr = ordered_json::array();
    for (auto& [m, c] : x.terms()) {
        ordered_json term;
        term["coeff"] = c;
        term["monomial"] = m.subs;
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json dual_terms(const kam::DualElement& f) {
    ordered_json arr = ordered_json::array();
    for (auto& [m, c] : f.coeffs) {
        ordered_json term;
        term["coeff"] = c;
        term["monomial"] = m.subs;
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json poly_terms(const kam::MPoly& f) {
    ordered_json arr = ordered_json::array();
    for (auto& [e, c] : f.terms()) {
        ordered_json term;
        term["coeff"] = c;
        term["exponents"] = e;
        arr.push_back(std::move(term));
    }
    return arr;
}

ordered_json envelope(const Options& opt, const std::string& command,
                      const std::optional<std::string>& flavor,
                      const std::optional<std::string>& input) {
    ordered_json out;
    out["prime"] = opt.prime;
    out["flavor"] = flavor ? ordered_json(*flavor) : ordered_json(nullptr);
    out["command"] = command;
    out["input"] = input ? ordered_json(*input) : ordered_json(nullptr);
    return out;
}

void emit(const ordered_json& out) { std::cout << out.dump(2) << "\n"; }

std::string render_functional(const kam::DualElement& f, const PrimeCtx&) {
    if (f.coeffs.empty()) return "0";
    std::string s;
    for (auto& [m, c] : f.coeffs) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + " ";
        s += "(" + kam::render_monomial(m) + ")*";
    }
    return s;
}

kam::DualElement named_dual(const std::string& name, int n, const PrimeCtx& ctx, bool* free_side) {
    *free_side = false;
    if (name == "s" || name == "s0") return kam::stilde_dual(n, ctx);
    if (name.size() >= 2 && name[0] == 'c') {
        int a = std::stoi(name.substr(1));
        if (a < 1 || a >= n)
            throw kam::UsageError("generator '" + name + "' needs 1 <= index <= n-1");
        return kam::dickson_dual(n, a, ctx);
    }
    if (name.size() >= 2 && name[0] == 'v') {
        int a = std::stoi(name.substr(1));
        if (a < 1 || a > n) throw kam::UsageError("generator '" + name + "' needs 1 <= index <= n");
        *free_side = true;
        return kam::vtilde_dual(n, a - 1, ctx);  // v1..vn name topdegs 4p^0..4p^{n-1}
    }
    throw kam::UsageError("unknown generator '" + name + "' (s, c1..c(n-1), v1..vn)");
}

int run_normalize(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    Flavor f = parse_flavor(opt.flavor);
    std::vector<std::string> warnings;
    Element x = kam::parse_element(opt.expr, f, ctx, &warnings);
    for (auto& w : warnings) std::cerr << "warning: " << w << "\n";
    Element nf = f.quotiented ? kam::normalize(x, ctx) : x;
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "normalize", opt.flavor, opt.expr);
        out["result"] = element_terms(nf);
        emit(out);
    } else {
        std::cout << kam::render_element(nf, ctx) << "\n";
    }
    return 0;
}

int run_basis(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    Flavor f = parse_flavor(opt.flavor);
    cap(opt.length >= 0 && opt.length <= 10, "--length " + std::to_string(opt.length));
    cap(opt.topdeg >= 0 && opt.topdeg <= 20000, "--topdeg " + std::to_string(opt.topdeg));
    kam::Bidegree bd{opt.length, opt.topdeg};
    std::vector<kam::Monomial> basis = f.quotiented
                                           ? kam::admissible_basis(f, bd, ctx)
                                           : kam::enumerate_basis_monomials(f, bd, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "basis", opt.flavor, std::nullopt);
        out["length"] = opt.length;
        out["topdeg"] = opt.topdeg;
        ordered_json arr = ordered_json::array();
        for (auto& m : basis) {
            ordered_json term;
            term["coeff"] = 1;
            term["monomial"] = m.subs;
            arr.push_back(std::move(term));
        }
        out["result"] = std::move(arr);
        out["count"] = basis.size();
        emit(out);
    } else {
        for (auto& m : basis) std::cout << kam::render_monomial(m) << "\n";
        std::cout << "count " << basis.size() << "\n";
    }
    return 0;
}

int run_primitives(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    Flavor f = parse_flavor(opt.flavor);
    cap(opt.length >= 1 && opt.length <= 6, "--length " + std::to_string(opt.length));
    cap(opt.max_topdeg >= 0 && opt.max_topdeg <= 4000, "--max-topdeg " + std::to_string(opt.max_topdeg));
    kam::PrimitivesReport rep = kam::primitives(f, opt.length, opt.max_topdeg, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "primitives", opt.flavor, std::nullopt);
        out["length"] = opt.length;
        out["max_topdeg"] = opt.max_topdeg;
        out["grouplike"] = element_terms(rep.grouplike);
        ordered_json blocks = ordered_json::array();
        for (auto& b : rep.blocks) {
            ordered_json jb;
            jb["topdeg"] = b.bd.t;
            ordered_json basis = ordered_json::array();
            for (auto& e : b.basis) basis.push_back(element_terms(e));
            jb["basis"] = std::move(basis);
            blocks.push_back(std::move(jb));
        }
        out["result"] = std::move(blocks);
        emit(out);
    } else {
        std::cout << "grouplike: " << kam::render_element(rep.grouplike, ctx) << "\n";
        for (auto& b : rep.blocks)
            for (auto& e : b.basis)
                std::cout << "t=" << b.bd.t << ": " << kam::render_element(e, ctx) << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    cap(opt.truncation <= 60, "--truncation " + std::to_string(opt.truncation));
    cap(opt.max_index <= 5000, "--max-index " + std::to_string(opt.max_index));
    kam::VerifyOptions vopt;
    vopt.seed = opt.seed;
    vopt.jobs = opt.jobs;
    vopt.max_index = opt.max_index;
    vopt.truncation = opt.truncation;
    std::vector<kam::PropertyResult> results;
    try {
        results = kam::run_verify_suite(opt.suite, vopt);
    } catch (const std::invalid_argument& e) {
        throw kam::UsageError(e.what());
    }
    size_t failed = 0;
    for (auto& r : results)
        if (!r.pass) ++failed;
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "verify", std::nullopt, opt.suite);
        ordered_json arr = ordered_json::array();
        for (auto& r : results) {
            ordered_json jr;
            jr["suite"] = r.suite;
            jr["name"] = r.name;
            jr["pass"] = r.pass;
            jr["millis"] = r.millis;
            jr["details"] = r.details;
            arr.push_back(std::move(jr));
        }
        out["result"] = std::move(arr);
        out["passed"] = results.size() - failed;
        out["failed"] = failed;
        emit(out);
    } else {
        for (auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " ("
                      << r.millis << " ms)";
            if (!r.pass && !r.details.empty()) std::cout << ": " << r.details;
            std::cout << "\n";
        }
        std::cout << "passed " << (results.size() - failed) << " failed " << failed << "\n";
    }
    return failed == 0 ? 0 : 1;
}

int run_nishida(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    Flavor f = parse_flavor(opt.flavor);
    cap(opt.d_index >= 0 && opt.d_index <= 100000, "--d " + std::to_string(opt.d_index));
    std::vector<std::string> warnings;
    Element x = kam::parse_element(opt.expr, f, ctx, &warnings);
    for (auto& w : warnings) std::cerr << "warning: " << w << "\n";
    Element acted = kam::act_d(opt.d_index, x, ctx);
    if (f.quotiented) acted = kam::normalize(acted, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "nishida", opt.flavor, opt.expr);
        out["d"] = opt.d_index;
        out["result"] = element_terms(acted);
        emit(out);
    } else {
        std::cout << kam::render_element(acted, ctx) << "\n";
    }
    return 0;
}

int run_steenrod(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    cap(opt.n >= 1 && opt.n <= 5, "--n " + std::to_string(opt.n));
    cap(opt.j_index <= 100000, "--j " + std::to_string(opt.j_index));
    bool free_side = false;
    kam::DualElement g = named_dual(opt.generator, opt.n, ctx, &free_side);
    if (free_side)
        throw kam::UsageError("steenrod acts on the quotient-side generators (s, c1..c(n-1))");
    kam::DualElement pg = kam::steenrod_P_dual(opt.j_index, g, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "steenrod", std::nullopt, opt.generator);
        out["n"] = opt.n;
        out["j"] = opt.j_index;
        out["topdeg"] = pg.bd.t;
        out["result"] = dual_terms(pg);
        emit(out);
    } else {
        std::cout << render_functional(pg, ctx) << "\n";
    }
    return 0;
}

int run_dual(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    cap(opt.n >= 1 && opt.n <= 5, "--n " + std::to_string(opt.n));
    bool free_side = false;
    kam::DualElement g = named_dual(opt.generator, opt.n, ctx, &free_side);
    ordered_json out = envelope(opt, "dual", std::nullopt, opt.generator);
    out["n"] = opt.n;
    out["map"] = opt.map_name;
    if (opt.map_name == "none") {
        if (opt.format == "json") {
            out["result"] = dual_terms(g);
            emit(out);
        } else
            std::cout << render_functional(g, ctx) << "\n";
        return 0;
    }
    if (opt.map_name == "sigma") {
        if (free_side) throw kam::UsageError("sigma applies to quotient-side generators");
        kam::DualElement sg = kam::sigma_map(g, ctx);
        if (opt.format == "json") {
            out["result"] = dual_terms(sg);
            emit(out);
        } else
            std::cout << render_functional(sg, ctx) << "\n";
        return 0;
    }
    if (opt.map_name == "omega" || opt.map_name == "omega-sigma") {
        kam::DualElement free_f = g;
        if (!free_side) {
            if (opt.map_name == "omega")
                throw kam::UsageError("omega applies to free-side functionals; use omega-sigma");
            free_f = kam::sigma_map(g, ctx);
        }
        kam::MPoly img = kam::omega_map(free_f, ctx);
        if (opt.format == "json") {
            out["result"] = poly_terms(img);
            out["polynomial"] = img.str();
            emit(out);
        } else
            std::cout << img.str() << "\n";
        return 0;
    }
    throw kam::UsageError("unknown --map '" + opt.map_name + "' (none sigma omega omega-sigma)");
}

int run_invariants(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    auto kind = kam::group_from_name(opt.group);
    if (!kind)
        throw kam::UsageError("unknown --group '" + opt.group +
                              "' (unipotent upper-pm1 upper sl-pm gl)");
    cap(opt.vars >= 1 && opt.vars <= 4, "--vars " + std::to_string(opt.vars));
    cap(opt.max_deg >= 0 && opt.max_deg <= 400, "--max-deg " + std::to_string(opt.max_deg));
    auto dims = kam::invariant_dimensions(kam::GroupSpec{*kind, opt.vars}, opt.max_deg, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "invariants", std::nullopt, opt.group);
        out["vars"] = opt.vars;
        out["max_deg"] = opt.max_deg;
        ordered_json arr = ordered_json::array();
        for (auto& [t, dim] : dims) {
            ordered_json row;
            row["topdeg"] = t;
            row["dim"] = dim;
            arr.push_back(std::move(row));
        }
        out["result"] = std::move(arr);
        emit(out);
    } else {
        for (auto& [t, dim] : dims) std::cout << "t=" << t << " dim=" << dim << "\n";
    }
    return 0;
}

int run_commute(const Options& opt) {
    PrimeCtx ctx = make_ctx(opt.prime);
    cap(opt.n >= 1 && opt.n <= 4, "--n " + std::to_string(opt.n));
    kam::CommuteReport rep = kam::commuting_square_report(opt.n, ctx);
    if (opt.format == "json") {
        ordered_json out = envelope(opt, "commute", std::nullopt, std::nullopt);
        out["n"] = opt.n;
        ordered_json arr = ordered_json::array();
        for (auto& l : rep.lines) {
            ordered_json row;
            row["name"] = l.name;
            row["topdeg"] = l.topdeg;
            row["match"] = l.match;
            row["tau_invariant"] = l.tau_invariant;
            row["image"] = l.image;
            arr.push_back(std::move(row));
        }
        out["result"] = std::move(arr);
        out["sigma_closed_form_ok"] = rep.sigma_closed_form_ok;
        out["dims_ok"] = rep.dims_ok;
        out["dims_topdeg"] = rep.dims_topdeg;
        emit(out);
    } else {
        for (auto& l : rep.lines)
            std::cout << l.name << ": topdeg " << l.topdeg << " match=" << (l.match ? "yes" : "no")
                      << " tau-invariant=" << (l.tau_invariant ? "yes" : "no") << " image=" << l.image
                      << "\n";
        std::cout << "sigma-closed-form: " << (rep.sigma_closed_form_ok ? "ok" : "MISMATCH") << "\n";
        std::cout << "corner-dims (topdeg<=" << rep.dims_topdeg << "): "
                  << (rep.dims_ok ? "ok" : "MISMATCH") << "\n";
    }
    return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Kudo-Araki-May algebra calculator: free and Adem-quotient algebras over F_p,\n"
                 "their diagonals and primitives, the Nishida action, duals, and the classical\n"
                 "invariant-theory comparison"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for sampled verification properties");
    app.add_option("--jobs", opt.jobs, "worker threads for 'verify all'")->check(CLI::Range(1, 64));

    auto* c_norm = app.add_subcommand("normalize", "normal form of an expression");
    c_norm->add_option("--prime", opt.prime, "odd prime p");
    c_norm->add_option("--flavor", opt.flavor, "hatU tildeU U hatK tildeK K")->required();
    c_norm->add_option("expr", opt.expr, "element expression, e.g. \"e6 e0\"")->required();

    auto* c_basis = app.add_subcommand("basis", "monomial basis of one (length, topdeg) component");
    c_basis->add_option("--prime", opt.prime, "odd prime p");
    c_basis->add_option("--flavor", opt.flavor, "hatU tildeU U hatK tildeK K")->required();
    c_basis->add_option("--length", opt.length, "word length")->required();
    c_basis->add_option("--topdeg", opt.topdeg, "topological degree")->required();

    auto* c_prim = app.add_subcommand("primitives", "strict primitives up to a topdeg bound");
    c_prim->add_option("--prime", opt.prime, "odd prime p");
    c_prim->add_option("--flavor", opt.flavor, "hatU tildeU U hatK tildeK K")->required();
    c_prim->add_option("--length", opt.length, "word length")->required();
    c_prim->add_option("--max-topdeg", opt.max_topdeg, "largest topdeg to scan")->required();

    auto* c_verify = app.add_subcommand("verify", "run a property suite (or 'all')");
    c_verify->add_option("suite", opt.suite, "suite name or 'all'");
    c_verify->add_option("--max-index", opt.max_index, "override the suite's index/topdeg bound");
    c_verify->add_option("--truncation", opt.truncation, "override the series truncation degree");

    auto* c_nish = app.add_subcommand("nishida", "apply the operation d_i to an expression");
    c_nish->add_option("--prime", opt.prime, "odd prime p");
    c_nish->add_option("--flavor", opt.flavor, "hatU tildeU U hatK tildeK K")->required();
    c_nish->add_option("--d", opt.d_index, "index i of d_i")->required();
    c_nish->add_option("expr", opt.expr, "element expression")->required();

    auto* c_st = app.add_subcommand("steenrod", "Steenrod power on a dual generator");
    c_st->add_option("--prime", opt.prime, "odd prime p");
    c_st->add_option("--j", opt.j_index, "power P^j")->required();
    c_st->add_option("--generator", opt.generator, "s, or c1..c(n-1)")->required();
    c_st->add_option("--n", opt.n, "word length of the dual component")->required();

    auto* c_dual = app.add_subcommand("dual", "dual generators and the comparison maps");
    c_dual->add_option("--prime", opt.prime, "odd prime p");
    c_dual->add_option("--n", opt.n, "word length of the dual component")->required();
    c_dual->add_option("--generator", opt.generator, "s, c1..c(n-1), or v1..vn")->required();
    c_dual->add_option("--map", opt.map_name, "none sigma omega omega-sigma");

    auto* c_inv = app.add_subcommand("invariants", "graded dimensions of a fixed ring");
    c_inv->add_option("--prime", opt.prime, "odd prime p");
    c_inv->add_option("--group", opt.group, "unipotent upper-pm1 upper sl-pm gl")->required();
    c_inv->add_option("--vars", opt.vars, "number of variables")->required();
    c_inv->add_option("--max-deg", opt.max_deg, "largest topological degree")->required();

    auto* c_comm = app.add_subcommand("commute", "dual-to-invariants comparison report");
    c_comm->add_option("--prime", opt.prime, "odd prime p");
    c_comm->add_option("--n", opt.n, "word length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_norm)) return run_normalize(opt);
        if (app.got_subcommand(c_basis)) return run_basis(opt);
        if (app.got_subcommand(c_prim)) return run_primitives(opt);
        if (app.got_subcommand(c_verify)) return run_verify(opt);
        if (app.got_subcommand(c_nish)) return run_nishida(opt);
        if (app.got_subcommand(c_st)) return run_steenrod(opt);
        if (app.got_subcommand(c_dual)) return run_dual(opt);
        if (app.got_subcommand(c_inv)) return run_invariants(opt);
        if (app.got_subcommand(c_comm)) return run_commute(opt);
    } catch (const kam::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
