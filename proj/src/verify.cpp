#include "circsum/verify.hpp"

#include <algorithm>
#include <cmath>

namespace circsum {

namespace {

const cplx kI(0.0, 1.0);
constexpr double kDenomFloor = 1e-30;  // guards relative error near theta zeros

double denom_of(cplx lhs, cplx rhs) {
    return std::max({std::abs(lhs), std::abs(rhs), kDenomFloor});
}

/// Accumulates sample comparisons and the tail-aware verdict.
class comparison {
public:
    explicit comparison(double tolerance) : tol_(tolerance) {}

    void add(cplx z, cplx lhs, cplx rhs, double abs_tail) {
        const double denom = denom_of(lhs, rhs);
        const double abs_err = std::abs(lhs - rhs);
        const double rel_err = abs_err / denom;
        add_record({z, lhs, rhs, abs_err, rel_err}, abs_tail / denom);
    }

    /// For checks whose rel_err is a composite residual (counterexample).
    void add_record(sample_record rec, double tail_rel) {
        max_rel_ = std::max(max_rel_, rec.rel_err);
        if (rec.rel_err > tol_ + tail_rel)
            any_fail_ = true;
        else if (tail_rel > tol_)
            tail_blown_ = true;
        samples_.push_back(rec);
    }

    void note_fourier_fail() { any_fail_ = true; }

    void finish(verification_report& report) {
        report.samples = std::move(samples_);
        report.max_rel_err = max_rel_;
        report.tolerance = tol_;
        report.outcome = any_fail_    ? verdict::fail
                         : tail_blown_ ? verdict::inconclusive
                                       : verdict::pass;
    }

private:
    double tol_;
    std::vector<sample_record> samples_;
    double max_rel_ = 0.0;
    bool any_fail_ = false;
    bool tail_blown_ = false;
};

struct theta_eval {
    cplx value;
    double tail;
};

theta_eval eval_theta(theta_kind kind, cplx z, const tau_param& tau, truncation_spec trunc) {
    return {theta(kind, z, tau, trunc), theta_tail_bound(kind, z, tau, trunc)};
}

/// Error bound for a product of factors with per-factor value/tail bounds.
double product_tail(const std::vector<theta_eval>& factors) {
    double err = 0.0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        double contrib = factors[j].tail;
        for (std::size_t l = 0; l < factors.size(); ++l)
            if (l != j) contrib *= std::abs(factors[l].value) + factors[l].tail;
        err += contrib;
    }
    return err;
}

verification_report make_report(identity_id id, int m, int n, const tau_param& tau,
                                std::vector<cplx> ys, const harness_config& cfg) {
    verification_report rep;
    rep.identity = id;
    rep.m = m;
    rep.n = n;
    rep.tau = tau.value();
    rep.ys = std::move(ys);
    rep.n_max = cfg.trunc.n_max;
    rep.r_max = cfg.rad.r_max;
    return rep;
}

/// Applies the coefficient-level pass rule: every mode diff must stay below
/// tolerance * max(1, largest coefficient magnitude in the window).
void fold_fourier(const zseries& lhs, const zseries& rhs, int window, double tolerance,
                  comparison& cmp, verification_report& rep) {
    auto table = fourier_compare(lhs, rhs, window);
    double max_mag = 0.0;
    for (const auto& row : table)
        max_mag = std::max({max_mag, std::abs(row.lhs), std::abs(row.rhs)});
    const double limit = tolerance * std::max(1.0, max_mag);
    for (const auto& row : table)
        if (row.abs_diff > limit) cmp.note_fourier_fail();
    rep.fourier = std::move(table);
}

cplx half_integer_power(cplx tau_value, std::int64_t n) {
    // (-i tau)^{(1-n)/2}, principal branch; Re(-i tau) = Im tau > 0.
    return std::pow(-kI * tau_value, (1.0 - static_cast<double>(n)) / 2.0);
}

}  // namespace

std::vector<fourier_mode_record> fourier_compare(const zseries& lhs, const zseries& rhs,
                                                 int mode_window) {
    std::vector<fourier_mode_record> table;
    table.reserve(2 * mode_window + 1);
    for (int b = -mode_window; b <= mode_window; ++b) {
        const cplx lc = lhs.coeff(b);
        const cplx rc = rhs.coeff(b);
        table.push_back({b, lc, rc, std::abs(lc - rc)});
    }
    return table;
}

verification_report verify_circular(winding_order m, const y_tuple& ys, const tau_param& tau,
                                    const harness_config& cfg) {
    cfg.plan.validate();
    const auto n = static_cast<int>(ys.size());
    const int mn = m.m * n;
    auto rep = make_report(identity_id::circular, m.m, n, tau, ys.values(), cfg);

    const cplx big_g = g_mn(m, ys, tau, cfg.rad);
    const double lat_tail = lattice_tail_bound(m, ys, tau, cfg.rad, lattice_form::g);
    const tau_param tau_out = tau.scaled(static_cast<std::int64_t>(m.m) * m.m * n);

    comparison cmp(cfg.tolerance);
    splitmix64 rng(cfg.plan.seed);
    double max_theta_tail = 0.0, max_lat_tail = 0.0;
    for (int i = 0; i < cfg.plan.count; ++i) {
        const cplx z = cfg.plan.draw_z(rng);
        cplx lhs(0.0, 0.0);
        double lhs_tail = 0.0;
        for (int k = 0; k < mn; ++k) {
            std::vector<theta_eval> factors;
            factors.reserve(ys.size());
            cplx prod(1.0, 0.0);
            for (std::size_t j = 0; j < ys.size(); ++j) {
                factors.push_back(eval_theta(theta_kind::theta3,
                                             z + ys[j] + static_cast<double>(k) * pi / mn, tau,
                                             cfg.trunc));
                prod *= factors.back().value;
            }
            lhs += prod;
            lhs_tail += product_tail(factors);
        }
        const auto right = eval_theta(theta_kind::theta3, static_cast<double>(mn) * z, tau_out,
                                      cfg.trunc);
        const cplx rhs = big_g * right.value;
        const double theta_tail_total = lhs_tail + std::abs(big_g) * right.tail;
        const double lat_tail_total = lat_tail * (std::abs(right.value) + right.tail);
        max_theta_tail = std::max(max_theta_tail, theta_tail_total);
        max_lat_tail = std::max(max_lat_tail, lat_tail_total);
        cmp.add(z, lhs, rhs, theta_tail_total + lat_tail_total);
    }
    rep.theta_tail = max_theta_tail;
    rep.lattice_tail = max_lat_tail;

    zseries lhs_series;
    for (int k = 0; k < mn; ++k) {
        zseries term = zseries::constant(cplx(1.0, 0.0));
        for (std::size_t j = 0; j < ys.size(); ++j)
            term = zseries_mul(term, theta_zseries(theta_kind::theta3,
                                                   ys[j] + static_cast<double>(k) * pi / mn, 1,
                                                   tau, cfg.trunc));
        lhs_series = zseries_add(lhs_series, term);
    }
    const zseries rhs_series =
        zseries_scale(theta_zseries(theta_kind::theta3, cplx(0.0, 0.0), mn, tau_out, cfg.trunc),
                      big_g, 0);
    fold_fourier(lhs_series, rhs_series, 6 * mn, cfg.tolerance, cmp, rep);

    cmp.finish(rep);
    return rep;
}

verification_report verify_dual(winding_order m, const y_tuple& ys, const tau_param& tau,
                                const harness_config& cfg) {
    cfg.plan.validate();
    const auto n = static_cast<int>(ys.size());
    const int mn = m.m * n;
    auto rep = make_report(identity_id::dual, m.m, n, tau, ys.values(), cfg);

    const cplx big_f = f_mn_series(m, ys, tau, cfg.rad);
    const double lat_tail = lattice_tail_bound(m, ys, tau, cfg.rad, lattice_form::f);
    const tau_param tau_in = tau.scaled(static_cast<std::int64_t>(m.m) * m.m * n);

    comparison cmp(cfg.tolerance);
    splitmix64 rng(cfg.plan.seed);
    double max_theta_tail = 0.0, max_lat_tail = 0.0;
    for (int i = 0; i < cfg.plan.count; ++i) {
        const cplx z = cfg.plan.draw_z(rng);
        cplx lhs(0.0, 0.0);
        double lhs_tail = 0.0;
        for (int k = 0; k < mn; ++k) {
            const cplx pref = tau.q_pow(rational(static_cast<std::int64_t>(k) * k, 2)) *
                              std::exp(2.0 * static_cast<double>(k) * kI * z);
            std::vector<theta_eval> factors;
            factors.reserve(ys.size());
            cplx prod = pref;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                factors.push_back(eval_theta(
                    theta_kind::theta3,
                    static_cast<double>(m.m) * z + ys[j] +
                        static_cast<double>(k) * m.m * pi * tau.value(),
                    tau_in, cfg.trunc));
                prod *= factors.back().value;
            }
            lhs += prod;
            lhs_tail += std::abs(pref) * product_tail(factors);
        }
        const auto right = eval_theta(theta_kind::theta3, z, tau, cfg.trunc);
        const cplx rhs = big_f * right.value;
        const double theta_tail_total = lhs_tail + std::abs(big_f) * right.tail;
        const double lat_tail_total = lat_tail * (std::abs(right.value) + right.tail);
        max_theta_tail = std::max(max_theta_tail, theta_tail_total);
        max_lat_tail = std::max(max_lat_tail, lat_tail_total);
        cmp.add(z, lhs, rhs, theta_tail_total + lat_tail_total);
    }
    rep.theta_tail = max_theta_tail;
    rep.lattice_tail = max_lat_tail;

    zseries lhs_series;
    for (int k = 0; k < mn; ++k) {
        zseries term = zseries::constant(cplx(1.0, 0.0));
        for (std::size_t j = 0; j < ys.size(); ++j)
            term = zseries_mul(
                term, theta_zseries(theta_kind::theta3,
                                    ys[j] + static_cast<double>(k) * m.m * pi * tau.value(), m.m,
                                    tau_in, cfg.trunc));
        term = zseries_scale(term, tau.q_pow(rational(static_cast<std::int64_t>(k) * k, 2)),
                             2 * k);
        lhs_series = zseries_add(lhs_series, term);
    }
    const zseries rhs_series = zseries_scale(
        theta_zseries(theta_kind::theta3, cplx(0.0, 0.0), 1, tau, cfg.trunc), big_f, 0);
    fold_fourier(lhs_series, rhs_series, 6 * mn, cfg.tolerance, cmp, rep);

    cmp.finish(rep);
    return rep;
}

verification_report verify_f_consistency(winding_order m, const y_tuple& ys, const tau_param& tau,
                                         const harness_config& cfg) {
    const auto n = static_cast<std::int64_t>(ys.size());
    const std::int64_t f = static_cast<std::int64_t>(m.m) * m.m * n;
    auto rep = make_report(identity_id::f_consistency, m.m, static_cast<int>(n), tau, ys.values(),
                           cfg);

    const cplx lhs = f_mn_series(m, ys, tau, cfg.rad);
    const cplx rhs = f_mn_via_g(m, ys, tau, cfg.rad);

    const double tail_series = lattice_tail_bound(m, ys, tau, cfg.rad, lattice_form::f);
    const tau_param tau_t = tau.inverted_scaled(f);
    const y_tuple ys_t = ys.scaled(1.0 / (static_cast<double>(f) * tau.value()));
    const cplx scale = half_integer_power(tau.value(), n) /
                       std::pow(static_cast<double>(f), static_cast<double>(n) / 2.0) *
                       std::exp(ys.sum_of_squares() / (static_cast<double>(f) * pi * tau.value() * kI));
    const double tail_g =
        std::abs(scale) * lattice_tail_bound(m, ys_t, tau_t, cfg.rad, lattice_form::g);
    rep.lattice_tail = tail_series + tail_g;

    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_thm12_reparam(winding_order m, const y_tuple& ys, const tau_param& tau,
                                         const harness_config& cfg) {
    const auto n = static_cast<std::int64_t>(ys.size());
    const std::int64_t f = static_cast<std::int64_t>(m.m) * m.m * n;
    auto rep = make_report(identity_id::thm12_reparam, m.m, static_cast<int>(n), tau, ys.values(),
                           cfg);

    const cplx tv = tau.value();
    const y_tuple ys_scaled = ys.scaled(pi * tv);
    const cplx lhs = f_mn_via_g(m, ys_scaled, tau, cfg.rad);

    const cplx pref = half_integer_power(tv, n) /
                      std::pow(static_cast<double>(f), static_cast<double>(n) / 2.0);
    const cplx q_fac = tau.q_pow(-ys.sum_of_squares() / (2.0 * static_cast<double>(f)));
    const tau_param tau_t = tau.inverted_scaled(f);
    const y_tuple ys_t = ys.scaled(pi / static_cast<double>(f));
    const cplx rhs = q_fac * pref * g_mn(m, ys_t, tau_t, cfg.rad);

    const cplx lhs_scale =
        pref * std::exp(ys_scaled.sum_of_squares() / (static_cast<double>(f) * pi * tv * kI));
    const double tail_lhs =
        std::abs(lhs_scale) *
        lattice_tail_bound(m, ys_scaled.scaled(1.0 / (static_cast<double>(f) * tv)), tau_t,
                           cfg.rad, lattice_form::g);
    const double tail_rhs =
        std::abs(q_fac * pref) * lattice_tail_bound(m, ys_t, tau_t, cfg.rad, lattice_form::g);
    rep.lattice_tail = tail_lhs + tail_rhs;

    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_g_transform(winding_order m, const y_tuple& ys, const tau_param& tau,
                                       const harness_config& cfg) {
    const auto n = static_cast<std::int64_t>(ys.size());
    const std::int64_t f = static_cast<std::int64_t>(m.m) * m.m * n;
    auto rep = make_report(identity_id::g_transform, m.m, static_cast<int>(n), tau, ys.values(),
                           cfg);

    const tau_param tau_t = tau.inverted_scaled(f);
    const y_tuple ys_t = ys.scaled(1.0 / (static_cast<double>(f) * tau.value()));
    const cplx lhs = g_mn(m, ys_t, tau_t, cfg.rad);

    const cplx pref = std::pow(static_cast<double>(f), static_cast<double>(n) / 2.0) /
                      half_integer_power(tau.value(), n);
    const cplx expfac =
        std::exp(ys.sum_of_squares() * kI / (static_cast<double>(f) * pi * tau.value()));
    const cplx rhs = pref * expfac * f_mn_series(m, ys, tau, cfg.rad);

    rep.lattice_tail =
        lattice_tail_bound(m, ys_t, tau_t, cfg.rad, lattice_form::g) +
        std::abs(pref * expfac) * lattice_tail_bound(m, ys, tau, cfg.rad, lattice_form::f);

    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_g13_transform(cplx y1, cplx y2, const tau_param& tau,
                                         const harness_config& cfg) {
    auto rep = make_report(identity_id::g13_transform, 1, 3, tau, {y1, y2}, cfg);
    const cplx tv = tau.value();

    const tau_param tau_t = tau.inverted_scaled(1);
    const y_tuple ys_t = y_tuple::from_free({y1 / tv, y2 / tv});
    const cplx lhs = g_mn(winding_order(1), ys_t, tau_t, cfg.rad);

    // Bracket sums enumerated directly: S0 is the plain hexagonal-form sum,
    // S+/S- the shifted-exponent sums with opposite phases.
    const int r = cfg.rad.r_max;
    const cplx w1 = 2.0 * y1 + y2;
    const cplx w2 = y1 + 2.0 * y2;
    cplx s0(0.0, 0.0), sp(0.0, 0.0), sm(0.0, 0.0);
    for (int r1 = -r; r1 <= r; ++r1) {
        for (int r2 = -r; r2 <= r; ++r2) {
            const std::int64_t quad = static_cast<std::int64_t>(r1) * r1 +
                                      static_cast<std::int64_t>(r2) * r2 +
                                      static_cast<std::int64_t>(r1) * r2;
            const cplx phase = std::exp(2.0 * kI * (static_cast<double>(r1) * w1 +
                                                    static_cast<double>(r2) * w2));
            s0 += tau.q_pow(rational(quad)) * phase;
            const cplx shifted = tau.q_pow(rational(3 * (quad + r1 + r2) + 1, 3));
            sp += shifted * phase;
            sm += shifted / phase;
        }
    }
    const cplx bracket =
        s0 + std::exp(2.0 * kI * (y1 + y2)) * sp + std::exp(-2.0 * kI * (y1 + y2)) * sm;
    const cplx pref =
        -std::sqrt(3.0) * kI * tv * std::exp(2.0 * kI * (y1 * y1 + y2 * y2 + y1 * y2) / (pi * tv));
    const cplx rhs = pref * bracket;

    const cubic_args base{y1, y2, tau};
    const cubic_args base_neg{-y1, -y2, tau};
    rep.lattice_tail =
        lattice_tail_bound(winding_order(1), ys_t, tau_t, cfg.rad, lattice_form::g) +
        std::abs(pref) *
            (cubic_tail_bound(base, cfg.rad, false) +
             std::abs(std::exp(2.0 * kI * (y1 + y2))) * cubic_tail_bound(base, cfg.rad, true) +
             std::abs(std::exp(-2.0 * kI * (y1 + y2))) * cubic_tail_bound(base_neg, cfg.rad, true));

    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_g13_equals_a(cplx y1, cplx y2, const tau_param& tau,
                                        const harness_config& cfg) {
    auto rep = make_report(identity_id::g13_equals_a, 1, 3, tau, {y1, y2}, cfg);
    const y_tuple ys = y_tuple::from_free({y1, y2});
    const cplx lhs = g_mn(winding_order(1), ys, tau, cfg.rad);
    const cplx rhs = a_cubic({y1, y2, tau}, cfg.rad);
    rep.lattice_tail = lattice_tail_bound(winding_order(1), ys, tau, cfg.rad, lattice_form::g) +
                       cubic_tail_bound({y1, y2, tau}, cfg.rad, false);
    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_cubic_b(cplx x, cplx y, const tau_param& tau,
                                   const harness_config& cfg) {
    auto rep = make_report(identity_id::cubic_b_rel, 1, 3, tau, {x, y}, cfg);
    const cplx lhs = b_cubic({x, y, tau}, cfg.rad);
    const cplx rhs = a_cubic({x, y + pi / 3.0, tau}, cfg.rad);
    rep.lattice_tail = cubic_tail_bound({x, y, tau}, cfg.rad, false) +
                       cubic_tail_bound({x, y + pi / 3.0, tau}, cfg.rad, false);
    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

verification_report verify_cubic_c(cplx x, cplx y, const tau_param& tau,
                                   const harness_config& cfg) {
    auto rep = make_report(identity_id::cubic_c_rel, 1, 3, tau, {x, y}, cfg);
    const cplx tv = tau.value();
    const cplx lhs = c_cubic({x, y, tau}, cfg.rad);
    const cplx q13 = tau.q_pow(rational(1, 3));
    const cubic_args shifted{x + pi * tv / 3.0, y + pi * tv / 3.0, tau};
    const cplx rhs = q13 * a_cubic(shifted, cfg.rad);
    rep.lattice_tail = cubic_tail_bound({x, y, tau}, cfg.rad, true) +
                       std::abs(q13) * cubic_tail_bound(shifted, cfg.rad, false);
    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

namespace {

verification_report verify_prop_impl(identity_id id, cplx x, cplx y, const tau_param& tau,
                                     const harness_config& cfg) {
    auto rep = make_report(id, 1, 3, tau, {x, y}, cfg);
    const cplx tv = tau.value();
    const tau_param tau_t = tau.inverted_scaled(1);
    const cubic_args transformed{x / tv, y / tv, tau_t};
    const bool c_display = id == identity_id::prop_c_transform;

    const cplx lhs = c_display ? c_cubic(transformed, cfg.rad) : a_cubic(transformed, cfg.rad);

    const cplx w = cubic_omega();
    const cplx rot_p = c_display ? w : cplx(1.0, 0.0);
    const cplx rot_m = c_display ? w * w : cplx(1.0, 0.0);
    const cplx bracket = a_cubic({x, y, tau}, cfg.rad) +
                         rot_p * std::exp(2.0 * kI * (x + y)) * c_cubic({x, y, tau}, cfg.rad) +
                         rot_m * std::exp(-2.0 * kI * (x + y)) * c_cubic({-x, -y, tau}, cfg.rad);
    cplx expo = 2.0 * kI * (x * x + y * y + x * y) / (pi * tv);
    if (c_display) expo -= 2.0 * kI * (x + y) / tv;
    const cplx pref = -std::sqrt(3.0) * kI * tv * std::exp(expo);
    const cplx rhs = pref * bracket;

    rep.lattice_tail =
        cubic_tail_bound(transformed, cfg.rad, c_display) +
        std::abs(pref) *
            (cubic_tail_bound({x, y, tau}, cfg.rad, false) +
             std::abs(rot_p * std::exp(2.0 * kI * (x + y))) *
                 cubic_tail_bound({x, y, tau}, cfg.rad, true) +
             std::abs(rot_m * std::exp(-2.0 * kI * (x + y))) *
                 cubic_tail_bound({-x, -y, tau}, cfg.rad, true));

    comparison cmp(cfg.tolerance);
    cmp.add(cplx(0.0, 0.0), lhs, rhs, rep.lattice_tail);
    cmp.finish(rep);
    return rep;
}

}  // namespace

verification_report verify_prop_a(cplx x, cplx y, const tau_param& tau,
                                  const harness_config& cfg) {
    return verify_prop_impl(identity_id::prop_a_transform, x, y, tau, cfg);
}

verification_report verify_prop_c(cplx x, cplx y, const tau_param& tau,
                                  const harness_config& cfg) {
    return verify_prop_impl(identity_id::prop_c_transform, x, y, tau, cfg);
}

std::vector<verification_report> verify_proposition(cplx x, cplx y, const tau_param& tau,
                                                    const harness_config& cfg) {
    return {verify_prop_a(x, y, tau, cfg), verify_prop_c(x, y, tau, cfg)};
}

verification_report demonstrate_counterexample(const tau_param& tau, const harness_config& cfg) {
    cfg.plan.validate();
    auto rep = make_report(identity_id::counterexample, 2, 1, tau, {}, cfg);
    const cplx q = tau.nome();
    const tau_param tau4 = tau.scaled(4);

    comparison cmp(cfg.tolerance);
    splitmix64 rng(cfg.plan.seed);
    double max_tail = 0.0;
    for (int i = 0; i < cfg.plan.count; ++i) {
        const cplx z = cfg.plan.draw_z(rng);
        const auto t3 = eval_theta(theta_kind::theta3, z, tau, cfg.trunc);
        const auto e3 = eval_theta(theta_kind::theta3, 2.0 * z, tau4, cfg.trunc);
        const auto e2 = eval_theta(theta_kind::theta2, 2.0 * z, tau4, cfg.trunc);
        const cplx sum = e3.value + e2.value;
        const double at3 = std::abs(t3.value);

        const cplx decomposition_residual = sum - t3.value;                // D
        const cplx residual = sum - (1.0 + q) * t3.value;                  // R
        const double ratio = std::abs(residual) / at3;

        // All three stated conditions, scaled by |theta3|.
        const double rel = std::max({std::abs(decomposition_residual) / at3,
                                     std::abs(residual + q * t3.value) / at3,
                                     std::abs(ratio - std::abs(q))});
        const double tail = (e3.tail + e2.tail + (1.0 + std::abs(q)) * t3.tail) / at3;
        max_tail = std::max(max_tail, tail);

        sample_record rec;
        rec.z = z;
        rec.lhs = residual / t3.value;  // normalized failure of the (1+q) form; |lhs| is the ratio
        rec.rhs = -q;
        rec.abs_err = std::abs(rec.lhs - rec.rhs);
        rec.rel_err = rel;
        cmp.add_record(rec, tail);
    }
    rep.theta_tail = max_tail;
    cmp.finish(rep);
    return rep;
}

verification_report verify_decomposition(const tau_param& tau, const harness_config& cfg) {
    cfg.plan.validate();
    auto rep = make_report(identity_id::decomposition, 2, 1, tau, {}, cfg);
    const tau_param tau4 = tau.scaled(4);
    comparison cmp(cfg.tolerance);
    splitmix64 rng(cfg.plan.seed);
    double max_tail = 0.0;
    for (int i = 0; i < cfg.plan.count; ++i) {
        const cplx z = cfg.plan.draw_z(rng);
        const auto t3 = eval_theta(theta_kind::theta3, z, tau, cfg.trunc);
        const auto e3 = eval_theta(theta_kind::theta3, 2.0 * z, tau4, cfg.trunc);
        const auto e2 = eval_theta(theta_kind::theta2, 2.0 * z, tau4, cfg.trunc);
        const double tail = t3.tail + e3.tail + e2.tail;
        max_tail = std::max(max_tail, tail);
        cmp.add(z, t3.value, e3.value + e2.value, tail);
    }
    rep.theta_tail = max_tail;
    cmp.finish(rep);
    return rep;
}

namespace {

/// Deterministic parameter stream, separate from the verifiers' z stream.
splitmix64 param_stream(const harness_config& cfg) {
    return splitmix64(cfg.plan.seed ^ 0x517CC1B727220A95ULL);
}

struct materialized {
    int m;
    int n;
    tau_param tau;
    std::vector<cplx> pair;      // (x, y) for the cubic-family identities
    std::optional<y_tuple> ys;   // for the lattice-family identities
};

materialized materialize(identity_id id, const run_params& params, const harness_config& cfg) {
    splitmix64 rng = param_stream(cfg);
    const int m = params.m.value_or(2);
    int n = params.n.value_or(2);
    if (params.ys && !params.ys->empty()) n = static_cast<int>(params.ys->size());
    const tau_param tau = params.tau ? tau_param(*params.tau)
                                     : tau_param(cfg.plan.draw_tau(rng));

    materialized out{m, n, tau, {}, std::nullopt};
    switch (id) {
        case identity_id::circular:
        case identity_id::dual:
        case identity_id::f_consistency:
        case identity_id::thm12_reparam:
        case identity_id::g_transform:
            out.ys = params.ys ? y_tuple(*params.ys)
                               : y_tuple(cfg.plan.draw_sum_zero(rng, static_cast<std::size_t>(n)));
            break;
        case identity_id::g13_transform:
        case identity_id::g13_equals_a:
        case identity_id::cubic_b_rel:
        case identity_id::cubic_c_rel:
        case identity_id::prop_a_transform:
        case identity_id::prop_c_transform: {
            if (params.ys) {
                if (params.ys->size() != 2)
                    throw std::invalid_argument("this identity takes exactly two y values");
                out.pair = *params.ys;
            } else {
                out.pair = {cfg.plan.draw_y(rng), cfg.plan.draw_y(rng)};
            }
            break;
        }
        case identity_id::counterexample:
        case identity_id::decomposition:
            break;
    }
    return out;
}

}  // namespace

verification_report run_identity(identity_id id, const run_params& params,
                                 const harness_config& cfg) {
    const materialized p = materialize(id, params, cfg);
    switch (id) {
        case identity_id::circular:
            return verify_circular(winding_order(p.m), *p.ys, p.tau, cfg);
        case identity_id::dual:
            return verify_dual(winding_order(p.m), *p.ys, p.tau, cfg);
        case identity_id::f_consistency:
            return verify_f_consistency(winding_order(p.m), *p.ys, p.tau, cfg);
        case identity_id::thm12_reparam:
            return verify_thm12_reparam(winding_order(p.m), *p.ys, p.tau, cfg);
        case identity_id::g_transform:
            return verify_g_transform(winding_order(p.m), *p.ys, p.tau, cfg);
        case identity_id::g13_transform:
            return verify_g13_transform(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::g13_equals_a:
            return verify_g13_equals_a(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::cubic_b_rel:
            return verify_cubic_b(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::cubic_c_rel:
            return verify_cubic_c(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::prop_a_transform:
            return verify_prop_a(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::prop_c_transform:
            return verify_prop_c(p.pair[0], p.pair[1], p.tau, cfg);
        case identity_id::counterexample:
            return demonstrate_counterexample(p.tau, cfg);
        case identity_id::decomposition:
            return verify_decomposition(p.tau, cfg);
    }
    throw std::invalid_argument("run_identity: bad identity");
}

std::vector<verification_report> run_all(const run_params& params, const harness_config& cfg) {
    std::vector<verification_report> reports;
    std::uint64_t index = 0;
    for (identity_id id : all_identities) {
        harness_config sub = cfg;
        sub.plan.seed = cfg.plan.seed + index;
        reports.push_back(run_identity(id, params, sub));
        ++index;
    }
    return reports;
}

}  // namespace circsum
