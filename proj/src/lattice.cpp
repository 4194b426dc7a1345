#include "circsum/lattice.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace circsum {

namespace {

const cplx kI(0.0, 1.0);
constexpr double kWorkBudget = 1e8;  // summand evaluations

void check_budget(std::size_t n, int r_max) {
    const double tuples =
        static_cast<double>(n) * std::pow(2.0 * r_max + 1.0, static_cast<double>(n - 1));
    if (tuples > kWorkBudget)
        throw enumeration_budget_error("lattice enumeration exceeds work budget");
}

// Tuples (r_1..r_n) with the free digits r_1..r_{n-1} in [-r_max, r_max] and
// r_n = target - sum(free), visited in a fixed lexicographic order.
template <typename Fn>
void enumerate_constrained(std::size_t n, int r_max, std::int64_t target, Fn&& fn) {
    std::vector<std::int64_t> rs(n, 0);
    if (n == 1) {
        rs[0] = target;
        fn(rs);
        return;
    }
    const std::size_t nf = n - 1;
    std::vector<int> digit(nf, -r_max);
    while (true) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < nf; ++j) {
            rs[j] = digit[j];
            s += digit[j];
        }
        rs[nf] = target - s;
        fn(rs);
        std::size_t j = 0;
        while (j < nf && digit[j] == r_max) {
            digit[j] = -r_max;
            ++j;
        }
        if (j == nf) break;
        ++digit[j];
    }
}

}  // namespace

y_tuple::y_tuple(std::vector<cplx> ys) : ys_(std::move(ys)) {
    if (ys_.empty()) throw std::invalid_argument("y_tuple: need at least one component");
    cplx sum(0.0, 0.0);
    double maxabs = 0.0;
    for (cplx y : ys_) {
        if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
            throw std::invalid_argument("y_tuple: components must be finite");
        sum += y;
        maxabs = std::max(maxabs, std::abs(y));
    }
    if (std::abs(sum) > 1e-12 * std::max(1.0, maxabs))
        throw std::invalid_argument("y_tuple: components must sum to zero");
}

y_tuple y_tuple::from_free(std::vector<cplx> free_parts) {
    cplx sum(0.0, 0.0);
    for (cplx y : free_parts) sum += y;
    free_parts.push_back(-sum);
    return y_tuple(std::move(free_parts));
}

y_tuple y_tuple::scaled(cplx factor) const {
    std::vector<cplx> out;
    out.reserve(ys_.size());
    for (cplx y : ys_) out.push_back(factor * y);
    return y_tuple(std::move(out));
}

cplx y_tuple::sum_of_squares() const {
    cplx s(0.0, 0.0);
    for (cplx y : ys_) s += y * y;
    return s;
}

double y_tuple::abs_im_sum() const {
    double s = 0.0;
    for (cplx y : ys_) s += std::abs(y.imag());
    return s;
}

cplx g_mn(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad) {
    const std::size_t n = ys.size();
    check_budget(n, rad.r_max);
    cplx sum(0.0, 0.0);
    enumerate_constrained(n, rad.r_max, 0, [&](const std::vector<std::int64_t>& rs) {
        std::int64_t sq = 0;
        cplx phase(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            sq += rs[j] * rs[j];
            phase += static_cast<double>(rs[j]) * ys[j];
        }
        sum += tau.q_pow(rational(sq, 2)) * std::exp(2.0 * kI * phase);
    });
    return static_cast<double>(m.m) * static_cast<double>(n) * sum;
}

cplx f_mn_series(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad) {
    const std::size_t n = ys.size();
    check_budget(n, rad.r_max);
    const std::int64_t m2 = static_cast<std::int64_t>(m.m) * m.m;
    const std::int64_t m2n = m2 * static_cast<std::int64_t>(n);
    cplx total(0.0, 0.0);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
        cplx inner(0.0, 0.0);
        enumerate_constrained(n, rad.r_max, k, [&](const std::vector<std::int64_t>& rs) {
            std::int64_t sq = 0;
            cplx phase(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                sq += rs[j] * rs[j];
                phase += static_cast<double>(rs[j]) * ys[j];
            }
            inner += tau.q_pow(rational(m2n * sq, 2)) * std::exp(-2.0 * kI * phase);
        });
        total += tau.q_pow(rational(-m2 * k * k, 2)) * inner;
    }
    return total;
}

cplx f_mn_via_g(winding_order m, const y_tuple& ys, const tau_param& tau, lattice_radius rad) {
    const auto n = static_cast<std::int64_t>(ys.size());
    const std::int64_t f = static_cast<std::int64_t>(m.m) * m.m * n;
    const cplx tv = tau.value();

    // Principal branch; Re(-i*tau) = Im(tau) > 0 keeps it single-valued.
    const cplx pref = std::pow(-kI * tv, (1.0 - static_cast<double>(n)) / 2.0) /
                      std::pow(static_cast<double>(f), static_cast<double>(n) / 2.0);
    const cplx expfac = std::exp(ys.sum_of_squares() / (static_cast<double>(f) * pi * tv * kI));

    const tau_param tau_t = tau.inverted_scaled(f);  // throws if Im <= 0 (cannot occur)
    const y_tuple ys_t = ys.scaled(1.0 / (static_cast<double>(f) * tv));
    return pref * expfac * g_mn(m, ys_t, tau_t, rad);
}

double lattice_tail_bound(winding_order m, const y_tuple& ys, const tau_param& tau,
                          lattice_radius rad, lattice_form form) {
    const auto n = static_cast<std::int64_t>(ys.size());
    if (n == 1) return 0.0;  // no free indices

    const double t = 2.0 * pi * tau.im();  // |q|^x = exp(-t*x)
    const double y_infl = ys.abs_im_sum();
    const double c = form == lattice_form::g ? 1.0 : static_cast<double>(m.m) * m.m * n;
    const double r = static_cast<double>(rad.r_max);

    const auto phi = [&](double s) { return std::exp(-t * c * s * s / 2.0 + 2.0 * y_infl * s); };

    // ratio phi(s+1)/phi(s) at s = rad; decreasing in s
    const double log_ratio = -t * c * (r + 0.5) + 2.0 * y_infl;
    if (!(log_ratio <= -std::log(2.0))) return std::numeric_limits<double>::infinity();

    const double t1 = 4.0 * phi(r + 1.0);  // one-index two-sided geometric tail
    double s_full = phi(0.0);
    for (int s = 1; s <= rad.r_max; ++s) s_full += 2.0 * phi(static_cast<double>(s));
    s_full += t1;

    const double per_free =
        static_cast<double>(n - 1) * t1 * std::pow(s_full, static_cast<double>(n - 2));
    if (form == lattice_form::g)
        return static_cast<double>(m.m) * static_cast<double>(n) * per_free;

    // F form: sum of the q^{-m^2 k^2/2} prefactors, plus the offset the
    // constraint shift k adds to |r_n|.
    double k_sum = 0.0;
    for (std::int64_t k = 0; k < n; ++k)
        k_sum += std::exp(t * static_cast<double>(m.m) * m.m * static_cast<double>(k * k) / 2.0);
    const double offset = std::exp(2.0 * y_infl * static_cast<double>(n - 1));
    return k_sum * offset * per_free;
}

}  // namespace circsum
