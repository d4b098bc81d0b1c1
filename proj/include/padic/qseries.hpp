#pragma once

#include <cstdint>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

// Truncated integer q-expansion: coefficients c(0..N). Multiplication
// truncates consistently at order N. Coefficients are exact 64-bit integers
// with overflow checks.
class QSeries {
public:
    explicit QSeries(size_t order) : coef_(order + 1, 0) { coef_[0] = 1; }

    size_t order() const { return coef_.size() - 1; }
    int64_t at(size_t n) const { return coef_[n]; }
    int64_t& at(size_t n) { return coef_[n]; }

    QSeries operator*(const QSeries& o) const;

    // multiply in place by (1 - q^step)^count
    void mul_euler_factor(size_t step, int count);

private:
    std::vector<int64_t> coef_;
};

// p-th Fourier coefficient of the weight-4 level-8 eta product
// q prod (1-q^{2n})^4 (1-q^{4n})^4, expanded exactly to order N >= p.
// Raises OrderTooSmall when N < p.
int64_t eta_product_ap(uint64_t p, size_t N);

} // namespace padic
