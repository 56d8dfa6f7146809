#include "kam/fplinalg.hpp"

#include "kam/fpkernels.hpp"

namespace kam {

std::vector<size_t> rref(FpMat& m, const PrimeCtx& ctx) {
    const uint32_t p = ctx.p();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pr = r;
        while (pr < m.rows && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        uint32_t piv = m.at(r, c);
        if (piv != 1) fp_scale(m.row(r), ctx.inv(piv), m.cols, p);
        for (size_t rr = 0; rr < m.rows; ++rr) {
            if (rr == r) continue;
            uint32_t f = m.at(rr, c);
            if (f) fp_axpy(m.row(rr), m.row(r), p - f, m.cols, p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(FpMat m, const PrimeCtx& ctx) { return rref(m, ctx).size(); }

std::vector<std::vector<uint32_t>> kernel_basis(FpMat m, const PrimeCtx& ctx) {
    auto pivots = rref(m, ctx);
    std::vector<bool> ispiv(m.cols, false);
    for (size_t c : pivots) ispiv[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t free = 0; free < m.cols; ++free) {
        if (ispiv[free]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            uint32_t coef = m.at(i, free);
            if (coef) v[pivots[i]] = ctx.p() - coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kam
