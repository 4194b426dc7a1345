#include "circsum/theta.hpp"

#include <cmath>
#include <limits>

namespace circsum {

namespace {

const cplx kI(0.0, 1.0);

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

cplx theta(theta_kind kind, cplx z, const tau_param& tau, truncation_spec trunc) {
    if (!finite(z)) throw std::invalid_argument("theta: z must be finite");
    const cplx tv = tau.value();
    const int nmax = trunc.n_max;
    cplx sum(0.0, 0.0);
    switch (kind) {
        case theta_kind::theta1:
        case theta_kind::theta2: {
            for (int n = -nmax - 1; n <= nmax; ++n) {
                const double nn = static_cast<double>(n);
                // q^{n(n+1)/2} e^{(2n+1)iz}
                cplx term = std::exp(kI * (pi * tv * nn * (nn + 1.0) + (2.0 * nn + 1.0) * z));
                if (kind == theta_kind::theta1 && (n & 1)) term = -term;
                sum += term;
            }
            sum *= tau.q_pow(rational(1, 8));
            if (kind == theta_kind::theta1) sum *= -kI;
            return sum;
        }
        case theta_kind::theta3:
        case theta_kind::theta4: {
            for (int n = -nmax; n <= nmax; ++n) {
                const double nn = static_cast<double>(n);
                // q^{n^2/2} e^{2niz}
                cplx term = std::exp(kI * (pi * tv * nn * nn + 2.0 * nn * z));
                if (kind == theta_kind::theta4 && (n & 1)) term = -term;
                sum += term;
            }
            return sum;
        }
    }
    throw std::invalid_argument("theta: bad kind");
}

double theta_tail_bound(theta_kind kind, cplx z, const tau_param& tau, truncation_spec trunc) {
    const double a = std::abs(z.imag());
    const double t = 2.0 * pi * tau.im();  // |q|^x = exp(-t*x)
    const double nmax = static_cast<double>(trunc.n_max);

    // Term-to-term ratio |q|^{(2n+1)/2} e^{2|Im z|} at n = n_max; beyond it the
    // ratio only shrinks. For theta1/theta2 the true ratio is |q|^{n+1} e^{2|Im z|},
    // which this dominates.
    const double log_ratio = -t * (nmax + 0.5) + 2.0 * a;
    if (!(log_ratio <= -std::log(2.0)))
        return std::numeric_limits<double>::infinity();

    double log_first;  // magnitude of the first omitted term
    if (kind == theta_kind::theta1 || kind == theta_kind::theta2) {
        log_first = -t * (0.125 + (nmax + 1.0) * (nmax + 2.0) / 2.0) + (2.0 * nmax + 3.0) * a;
    } else {
        log_first = -t * (nmax + 1.0) * (nmax + 1.0) / 2.0 + 2.0 * (nmax + 1.0) * a;
    }
    // factor 2 for the geometric tail, factor 2 for the two index signs
    return 4.0 * std::exp(log_first);
}

}  // namespace circsum
