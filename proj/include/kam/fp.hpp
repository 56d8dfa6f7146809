#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kam {

// Arithmetic context for a fixed odd prime p.  Everything downstream stores
// coefficients as canonical residues in [0, p).  p is capped well below 2^15
// so that a + c*b with a,b,c < p stays inside uint32_t in the row kernels.
class PrimeCtx {
public:
    explicit PrimeCtx(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % int64_t(p_);
        return uint32_t(r < 0 ? r + p_ : r);
    }
    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t(uint64_t(a) * b % p_); }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;

    // Binomial coefficient C(m, n) mod p for arbitrary integer m and n.
    // n < 0 gives 0; m >= 0 goes through Lucas; m < 0 uses the reflection
    // C(m, n) = (-1)^n C(n - m - 1, n).
    uint32_t binom(int64_t m, int64_t n) const;

    uint32_t sign(int64_t k) const { return (k % 2 == 0) ? 1u : p_ - 1; }

    // Smallest primitive root mod p.
    uint32_t primitive_root() const;

private:
    uint32_t p_;
    std::vector<uint32_t> fact_, finv_;

    uint32_t binom_nonneg(uint64_t m, uint64_t n) const;  // Lucas
    uint32_t binom_small(uint32_t m, uint32_t n) const;   // m, n < p
};

bool is_odd_prime(uint32_t p);

}  // namespace kam
