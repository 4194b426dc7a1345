#include "circsum/tau.hpp"

#include <cmath>
#include <stdexcept>

namespace circsum {

tau_param::tau_param(cplx tau) : tau_(tau) {
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
        throw std::invalid_argument("tau_param: tau must be finite");
    if (!(tau.imag() > 0.0))
        throw std::invalid_argument("tau_param: Im(tau) must be strictly positive");
}

cplx tau_param::q_pow(const rational& alpha) const {
    return std::exp(cplx(0.0, 2.0 * pi) * tau_ * alpha.value());
}

cplx tau_param::q_pow(cplx alpha) const {
    return std::exp(cplx(0.0, 2.0 * pi) * tau_ * alpha);
}

cplx tau_param::nome() const { return q_pow(rational(1)); }

double tau_param::abs_nome() const { return std::exp(-2.0 * pi * tau_.imag()); }

tau_param tau_param::scaled(std::int64_t factor) const {
    return tau_param(static_cast<double>(factor) * tau_);
}

tau_param tau_param::inverted_scaled(std::int64_t factor) const {
    return tau_param(-1.0 / (static_cast<double>(factor) * tau_));
}

}  // namespace circsum
