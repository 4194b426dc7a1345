#pragma once

#include "circsum/lattice.hpp"
#include "circsum/tau.hpp"

namespace circsum {

/// Arguments of the two-variable cubic theta functions.
struct cubic_args {
    cplx x;
    cplx y;
    tau_param tau;
};

/// omega = e^{2*pi*i/3}, computed from exp (not a decimal literal).
cplx cubic_omega();

/// a(x,y|tau) = sum_{m,n} q^{m^2+n^2+mn} e^{2im(2x+y)+2in(x+2y)}
cplx a_cubic(const cubic_args& args, lattice_radius rad);
/// b(x,y|tau): same sum with an extra factor omega^{m-n}
cplx b_cubic(const cubic_args& args, lattice_radius rad);
/// c(x,y|tau): exponent m^2+n^2+mn+m+n+1/3 instead
cplx c_cubic(const cubic_args& args, lattice_radius rad);

/// Certified absolute truncation bound for the 2-D cubic sums at the given
/// radius (shared ratio construction with the lattice bounds); +infinity when
/// the ratio condition fails.
double cubic_tail_bound(const cubic_args& args, lattice_radius rad, bool shifted_form);

}  // namespace circsum
