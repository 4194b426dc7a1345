#pragma once

#include <stdexcept>
#include <vector>

#include "circsum/tau.hpp"

namespace circsum {

/// Shift parameters y_1..y_n constrained to sum to zero (the circular-sum
/// hypothesis). Construction enforces |sum y_j| <= 1e-12 * max(1, max_j |y_j|).
class y_tuple {
public:
    explicit y_tuple(std::vector<cplx> ys);

    /// Appends -(sum of free_parts) so the constraint holds exactly.
    static y_tuple from_free(std::vector<cplx> free_parts);

    std::size_t size() const { return ys_.size(); }
    const std::vector<cplx>& values() const { return ys_; }
    cplx operator[](std::size_t j) const { return ys_[j]; }

    y_tuple scaled(cplx factor) const;
    cplx sum_of_squares() const;
    /// sum_j |Im y_j|, the phase-inflation budget used by tail bounds.
    double abs_im_sum() const;

private:
    std::vector<cplx> ys_;
};

struct lattice_radius {
    int r_max;
    explicit lattice_radius(int r) : r_max(r) {
        if (r < 0) throw std::invalid_argument("lattice_radius: r_max must be >= 0");
    }
};

struct winding_order {
    int m;
    explicit winding_order(int m_) : m(m_) {
        if (m_ < 1) throw std::invalid_argument("winding_order: m must be >= 1");
    }
};

/// Thrown when an enumeration would exceed the work budget (default 1e8
/// summand evaluations); fails loudly rather than hanging on large n.
class enumeration_budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// G_{m,n}(y_1..y_n|tau) = mn * sum over integer tuples with r_1+..+r_n = 0 of
/// q^{(r_1^2+..+r_n^2)/2} e^{2i(r_1 y_1+..+r_n y_n)}. Free indices r_1..r_{n-1}
/// range over [-r_max, r_max]; r_n is eliminated by the constraint.
cplx g_mn(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad);

/// F_{m,n}(y_1..y_n|tau) = sum_{k=0}^{n-1} q^{-m^2 k^2/2} *
/// sum over tuples with r_1+..+r_n = k of q^{m^2 n (r_1^2+..+r_n^2)/2}
/// e^{-2i(r_1 y_1+..+r_n y_n)}.
cplx f_mn_series(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad);

/// The dual route to F_{m,n}: [(-i tau)^{(1-n)/2} / (m^2 n)^{n/2}] *
/// exp((y_1^2+..+y_n^2)/(m^2 n pi tau i)) *
/// G_{m,n}(y_1/(m^2 n tau), .., y_n/(m^2 n tau) | -1/(m^2 n tau)),
/// principal branch for the half-integer power (well-defined: Re(-i tau) > 0).
cplx f_mn_via_g(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad);

enum class lattice_form { g, f };

/// Certified upper bound on the absolute enumeration-truncation error of
/// g_mn / f_mn_series at the given radius; +infinity when the geometric-ratio
/// condition fails at rad.
double lattice_tail_bound(winding_order m, const y_tuple& ys, const tau_param& tau,
                          lattice_radius rad, lattice_form form);

}  // namespace circsum
