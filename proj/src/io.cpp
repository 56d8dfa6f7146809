#include "kam/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kam {

std::string render_monomial(const Monomial& m) {
    char g = m.family == Family::UPlain ? 'd' : 'e';
    std::ostringstream os;
    for (size_t i = 0; i < m.subs.size(); ++i) {
        if (i) os << ' ';
        os << g << m.subs[i];
    }
    return os.str();
}

std::string render_element(const Element& x, const PrimeCtx& ctx) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<Monomial, uint32_t>> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](auto& a, auto& b) { return monomial_less(a.first, b.first, ctx); });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m.subs.empty()) {
            os << c;
        } else {
            if (c != 1) os << c << ' ';
            os << render_monomial(m);
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }

    long long integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) throw UsageError("expected integer at position " + std::to_string(start));
        return std::stoll(s.substr(start, i - start));
    }
};

}  // namespace

Element parse_element(const std::string& text, Flavor f, const PrimeCtx& ctx,
                      std::vector<std::string>* warnings) {
    Lexer lx{text};
    Element result(f);
    bool negate = false, first_term = true;
    while (!lx.done()) {
        if (!first_term) {
            char c = lx.peek();
            if (c != '+' && c != '-') throw UsageError("expected '+' or '-' between terms");
            ++lx.i;
            negate = c == '-';
        } else if (lx.peek() == '-') {  // tolerate a leading sign
            ++lx.i;
            negate = true;
        }
        first_term = false;

        uint32_t coeff = 1;
        bool had_coeff = false;
        if (std::isdigit((unsigned char)lx.peek())) {
            coeff = ctx.reduce(lx.integer());
            had_coeff = true;
            if (lx.peek() == '*') ++lx.i;
        }
        std::vector<int> subs;
        bool illegal = false;
        char bad_gen = 0;
        while (lx.peek() == 'e' || lx.peek() == 'd') {
            char g = lx.peek();
            ++lx.i;
            long long v = lx.integer();
            if (g == 'd' && f.family != Family::UPlain)
                throw UsageError("'d' generators require the U or K flavor");
            if (g == 'e' && f.family == Family::UPlain) {
                // accept e-subscripts divisible by p-1 as their d-form
                if (v % (ctx.p() - 1) != 0) { illegal = true; bad_gen = 'e'; continue; }
                v /= ctx.p() - 1;
            }
            if (!legal_subscript(f.family, v)) { illegal = true; bad_gen = g; continue; }
            subs.push_back(int(v));
        }
        if (subs.empty() && !had_coeff && !illegal)
            throw UsageError("expected a generator or coefficient");
        if (illegal) {
            if (warnings)
                warnings->push_back(std::string("dropped term with ") + (bad_gen ? bad_gen : '?') +
                                    "-generator illegal for flavor " + flavor_name(f));
            continue;
        }
        Element t = Element::single(f, subs, negate ? ctx.neg(coeff) : coeff, ctx);
        result = kam::add(result, t, ctx);
    }
    return result;
}

}  // namespace kam
