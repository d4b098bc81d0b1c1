#include "padic/qseries.hpp"

#include "padic/rational.hpp"

namespace padic {

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries out(order());
    out.coef_.assign(coef_.size(), 0);
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (size_t j = 0; i + j < coef_.size() && j < o.coef_.size(); ++j) {
            if (o.coef_[j] == 0) continue;
            out.coef_[i + j] = detail::checked_add(out.coef_[i + j], detail::checked_mul(coef_[i], o.coef_[j]));
        }
    }
    return out;
}

void QSeries::mul_euler_factor(size_t step, int count) {
    for (int c = 0; c < count; ++c) {
        // in-place multiply by (1 - q^step): c(n) -= c(n - step), descending
        for (size_t n = coef_.size(); n-- > step;)
            coef_[n] = detail::checked_sub(coef_[n], coef_[n - step]);
    }
}

int64_t eta_product_ap(uint64_t p, size_t N) {
    if (N < p) raise(Err::OrderTooSmall, "expansion order below p");
    QSeries s(N);
    for (size_t n = 1; 2 * n <= N; ++n) s.mul_euler_factor(2 * n, 4);
    for (size_t n = 1; 4 * n <= N; ++n) s.mul_euler_factor(4 * n, 4);
    // a(p) is the q^p coefficient of q * s
    return s.at(p - 1);
}

} // namespace padic
