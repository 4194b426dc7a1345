#pragma once

#include <map>

#include "circsum/theta.hpp"

namespace circsum {

/// Finite Fourier series in w = e^{iz}: sum_b coeff_b * e^{ibz}, with integer
/// exponent keys so theta2/theta1 odd exponents and theta3/theta4 even
/// exponents coexist. Coefficients that are exactly zero are dropped; no
/// epsilon pruning, so coefficient-level identity checks stay tolerance-free
/// on this side.
class zseries {
public:
    zseries() = default;

    static zseries constant(cplx c);

    /// Overwrites the coefficient at `exponent` (erases it when c == 0).
    void set(int exponent, cplx c);
    /// Adds c to the coefficient at `exponent` (erases exact-zero results).
    void accumulate(int exponent, cplx c);

    cplx coeff(int exponent) const;
    const std::map<int, cplx>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    /// Evaluates sum_b c_b e^{ibz}, ascending exponent order.
    cplx eval(cplx z) const;

private:
    std::map<int, cplx> coeffs_;
};

zseries zseries_add(const zseries& a, const zseries& b);
/// Exact Fourier-coefficient convolution.
zseries zseries_mul(const zseries& a, const zseries& b);
/// factor * a, with every exponent shifted by exp_shift.
zseries zseries_scale(const zseries& a, cplx factor, int exp_shift);

/// theta_k(scale*z + shift | tau_inner) as an explicit Fourier series in z;
/// e.g. for theta3 the coefficient at exponent 2*n*scale is
/// q_inner^{n^2/2} e^{2ni*shift}.
zseries theta_zseries(theta_kind kind, cplx shift, int scale, const tau_param& tau_inner,
                      truncation_spec trunc);

}  // namespace circsum
