#pragma once

#include <stdexcept>

#include "circsum/tau.hpp"

namespace circsum {

enum class theta_kind : int { theta1 = 1, theta2 = 2, theta3 = 3, theta4 = 4 };

/// Series cutoff: terms with summation index |n| <= n_max are retained.
/// For theta1/theta2 the index range is n in [-n_max-1, n_max] so the
/// (2n+1) exponents are symmetric.
struct truncation_spec {
    int n_max;
    explicit truncation_spec(int n) : n_max(n) {
        if (n < 0) throw std::invalid_argument("truncation_spec: n_max must be >= 0");
    }
};

/// Truncated Jacobi theta series:
///   theta1 = -i q^{1/8} sum (-1)^n q^{n(n+1)/2} e^{(2n+1)iz}
///   theta2 =    q^{1/8} sum        q^{n(n+1)/2} e^{(2n+1)iz}
///   theta3 =            sum        q^{n^2/2}    e^{2niz}
///   theta4 =            sum (-1)^n q^{n^2/2}    e^{2niz}
cplx theta(theta_kind kind, cplx z, const tau_param& tau, truncation_spec trunc);

/// Certified upper bound on the absolute truncation error of theta().
/// Returns +infinity when the geometric-ratio condition fails at n_max
/// (callers should increase n_max).
double theta_tail_bound(theta_kind kind, cplx z, const tau_param& tau, truncation_spec trunc);

}  // namespace circsum
