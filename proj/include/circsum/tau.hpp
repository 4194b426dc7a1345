#pragma once

#include <complex>
#include <cstdint>

#include "circsum/rational.hpp"

namespace circsum {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Modular parameter restricted to the upper half-plane, together with the
/// nome machinery q = e^{2*pi*i*tau}.
///
/// Fractional powers of q are *always* computed as exp(2*pi*i*tau*alpha),
/// never as principal roots of the numeric value of q, so q^{1/3}, q^{k^2/2},
/// q^{-m^2 k^2/2} are single-valued and consistent across all modules.
class tau_param {
public:
    explicit tau_param(cplx tau);

    cplx value() const { return tau_; }
    double im() const { return tau_.imag(); }

    /// q^alpha with an exact rational exponent.
    cplx q_pow(const rational& alpha) const;
    /// q^alpha with a complex exponent (same exp(2*pi*i*tau*alpha) convention).
    cplx q_pow(cplx alpha) const;

    /// The nome q = e^{2*pi*i*tau}; |q| < 1 for every valid tau.
    cplx nome() const;
    double abs_nome() const;

    /// factor * tau (factor >= 1).
    tau_param scaled(std::int64_t factor) const;
    /// -1 / (factor * tau); stays in the upper half-plane for factor >= 1.
    tau_param inverted_scaled(std::int64_t factor) const;

private:
    cplx tau_;
};

}  // namespace circsum
