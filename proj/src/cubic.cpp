#include "circsum/cubic.hpp"

#include <cmath>
#include <limits>

namespace circsum {

namespace {

const cplx kI(0.0, 1.0);

enum class cubic_kind { a, b, c };

cplx cubic_sum(cubic_kind kind, const cubic_args& args, lattice_radius rad) {
    const int r = rad.r_max;
    const cplx w1 = 2.0 * args.x + args.y;
    const cplx w2 = args.x + 2.0 * args.y;
    // omega^k for k = (m-n) mod 3
    const cplx omega_pow[3] = {cplx(1.0, 0.0), cubic_omega(), cubic_omega() * cubic_omega()};
    cplx sum(0.0, 0.0);
    for (int mm = -r; mm <= r; ++mm) {
        for (int nn = -r; nn <= r; ++nn) {
            const std::int64_t quad = static_cast<std::int64_t>(mm) * mm +
                                      static_cast<std::int64_t>(nn) * nn +
                                      static_cast<std::int64_t>(mm) * nn;
            rational expo(quad);
            if (kind == cubic_kind::c) expo = rational(3 * (quad + mm + nn) + 1, 3);
            cplx term = args.tau.q_pow(expo) *
                        std::exp(2.0 * kI * (static_cast<double>(mm) * w1 + static_cast<double>(nn) * w2));
            if (kind == cubic_kind::b) term *= omega_pow[((mm - nn) % 3 + 3) % 3];
            sum += term;
        }
    }
    return sum;
}

}  // namespace

cplx cubic_omega() { return std::exp(cplx(0.0, 2.0 * pi / 3.0)); }

cplx a_cubic(const cubic_args& args, lattice_radius rad) {
    return cubic_sum(cubic_kind::a, args, rad);
}

cplx b_cubic(const cubic_args& args, lattice_radius rad) {
    return cubic_sum(cubic_kind::b, args, rad);
}

cplx c_cubic(const cubic_args& args, lattice_radius rad) {
    return cubic_sum(cubic_kind::c, args, rad);
}

double cubic_tail_bound(const cubic_args& args, lattice_radius rad, bool shifted_form) {
    // m^2+n^2+mn >= (m^2+n^2)/2 splits the 2-D sum into a product of 1-D
    // dominating factors |q|^{s^2/2} e^{2 Y_j s}; the shifted (c) exponent's
    // +m+n term is absorbed into the inflation as |q|^{-|s|}.
    const double t = 2.0 * pi * args.tau.im();
    const double r = static_cast<double>(rad.r_max);
    const double extra = shifted_form ? t / 2.0 : 0.0;  // |q|^{-|s|} per index
    const double y1 = std::abs((2.0 * args.x + args.y).imag());
    const double y2 = std::abs((args.x + 2.0 * args.y).imag());

    double t1[2];
    double s_full[2];
    for (int j = 0; j < 2; ++j) {
        const double infl = 2.0 * (j == 0 ? y1 : y2) + 2.0 * extra;
        const double log_ratio = -t * (r + 0.5) + infl;
        if (!(log_ratio <= -std::log(2.0))) return std::numeric_limits<double>::infinity();
        const auto phi = [&](double s) { return std::exp(-t * s * s / 2.0 + infl * s); };
        t1[j] = 4.0 * phi(r + 1.0);
        double s_sum = phi(0.0);
        for (int s = 1; s <= rad.r_max; ++s) s_sum += 2.0 * phi(static_cast<double>(s));
        s_full[j] = s_sum + t1[j];
    }
    return t1[0] * s_full[1] + t1[1] * s_full[0];
}

}  // namespace circsum
