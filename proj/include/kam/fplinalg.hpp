#pragma once
#include <vector>

#include "kam/fp.hpp"

namespace kam {

// Dense row-major matrix over F_p, used for every echelon computation
// (relation spans, primitive kernels, invariant fixed spaces).
struct FpMat {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    FpMat() = default;
    FpMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    uint32_t* row(size_t r) { return a.data() + r * cols; }
    const uint32_t* row(size_t r) const { return a.data() + r * cols; }
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<size_t> rref(FpMat& m, const PrimeCtx& ctx);

size_t rank(FpMat m, const PrimeCtx& ctx);

// Basis of { x : m x = 0 }, one vector per non-pivot column.
std::vector<std::vector<uint32_t>> kernel_basis(FpMat m, const PrimeCtx& ctx);

}  // namespace kam
