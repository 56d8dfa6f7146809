#include "kam/fp.hpp"

namespace kam {

bool is_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeCtx::PrimeCtx(uint32_t p) : p_(p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("prime must be an odd prime >= 3");
    if (p > 32749) throw std::invalid_argument("prime too large for kernel arithmetic");
    fact_.resize(p);
    finv_.resize(p);
    fact_[0] = 1;
    for (uint32_t i = 1; i < p; ++i) fact_[i] = mul(fact_[i - 1], i);
    finv_[p - 1] = inv(fact_[p - 1]);
    for (uint32_t i = p - 1; i > 0; --i) finv_[i - 1] = mul(finv_[i], i);
}

uint32_t PrimeCtx::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeCtx::inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

uint32_t PrimeCtx::binom_small(uint32_t m, uint32_t n) const {
    if (n > m) return 0;
    return mul(fact_[m], mul(finv_[n], finv_[m - n]));
}

uint32_t PrimeCtx::binom_nonneg(uint64_t m, uint64_t n) const {
    uint32_t r = 1;
    while (n > 0 || m > 0) {
        uint32_t md = uint32_t(m % p_), nd = uint32_t(n % p_);
        r = mul(r, binom_small(md, nd));
        if (r == 0) return 0;
        m /= p_;
        n /= p_;
    }
    return r;
}

uint32_t PrimeCtx::binom(int64_t m, int64_t n) const {
    if (n < 0) return 0;
    if (m >= 0) return binom_nonneg(uint64_t(m), uint64_t(n));
    uint32_t c = binom_nonneg(uint64_t(n - m - 1), uint64_t(n));
    return mul(sign(n), c);
}

uint32_t PrimeCtx::primitive_root() const {
    // p - 1 = 2^a * m; g is primitive iff g^((p-1)/q) != 1 for every prime q | p-1.
    std::vector<uint32_t> qs;
    uint32_t m = p_ - 1;
    for (uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (uint32_t g = 2; g < p_; ++g) {
        bool ok = true;
        for (uint32_t q : qs)
            if (pow(g, (p_ - 1) / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

}  // namespace kam
