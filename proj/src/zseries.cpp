#include "circsum/zseries.hpp"

#include <cmath>
#include <stdexcept>

namespace circsum {

namespace {
const cplx kI(0.0, 1.0);
bool is_zero(cplx c) { return c.real() == 0.0 && c.imag() == 0.0; }
}  // namespace

zseries zseries::constant(cplx c) {
    zseries s;
    s.set(0, c);
    return s;
}

void zseries::set(int exponent, cplx c) {
    if (is_zero(c))
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

void zseries::accumulate(int exponent, cplx c) {
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        if (!is_zero(c)) coeffs_.emplace(exponent, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) coeffs_.erase(it);
}

cplx zseries::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

cplx zseries::eval(cplx z) const {
    cplx sum(0.0, 0.0);
    for (const auto& [b, c] : coeffs_) sum += c * std::exp(kI * static_cast<double>(b) * z);
    return sum;
}

zseries zseries_add(const zseries& a, const zseries& b) {
    zseries out = a;
    for (const auto& [e, c] : b.coeffs()) out.accumulate(e, c);
    return out;
}

zseries zseries_mul(const zseries& a, const zseries& b) {
    zseries out;
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) out.accumulate(ea + eb, ca * cb);
    return out;
}

zseries zseries_scale(const zseries& a, cplx factor, int exp_shift) {
    zseries out;
    for (const auto& [e, c] : a.coeffs()) out.set(e + exp_shift, factor * c);
    return out;
}

zseries theta_zseries(theta_kind kind, cplx shift, int scale, const tau_param& tau_inner,
                      truncation_spec trunc) {
    if (scale < 1) throw std::invalid_argument("theta_zseries: scale must be >= 1");
    if (!std::isfinite(shift.real()) || !std::isfinite(shift.imag()))
        throw std::invalid_argument("theta_zseries: shift must be finite");
    const int nmax = trunc.n_max;
    zseries out;
    switch (kind) {
        case theta_kind::theta1:
        case theta_kind::theta2: {
            const cplx pre = tau_inner.q_pow(rational(1, 8)) *
                             (kind == theta_kind::theta1 ? -kI : cplx(1.0, 0.0));
            for (int n = -nmax - 1; n <= nmax; ++n) {
                cplx c = pre * tau_inner.q_pow(rational(static_cast<std::int64_t>(n) * (n + 1), 2)) *
                         std::exp(kI * (2.0 * n + 1.0) * shift);
                if (kind == theta_kind::theta1 && (n & 1)) c = -c;
                out.accumulate((2 * n + 1) * scale, c);
            }
            return out;
        }
        case theta_kind::theta3:
        case theta_kind::theta4: {
            for (int n = -nmax; n <= nmax; ++n) {
                cplx c = tau_inner.q_pow(rational(static_cast<std::int64_t>(n) * n, 2)) *
                         std::exp(kI * 2.0 * static_cast<double>(n) * shift);
                if (kind == theta_kind::theta4 && (n & 1)) c = -c;
                out.accumulate(2 * n * scale, c);
            }
            return out;
        }
    }
    throw std::invalid_argument("theta_zseries: bad kind");
}

}  // namespace circsum
