#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circsum/tau.hpp"

namespace circsum {

/// splitmix64: 64-bit linear state advanced by the golden-gamma constant,
/// output scrambled by two xor-shift-multiply rounds. Chosen over std
/// engines so reports are reproducible from the documented algorithm alone
/// (see README).
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Rectangle draw: real axis first, then imaginary.
    cplx box(cplx lo, cplx hi) {
        const double re = uniform(lo.real(), hi.real());
        const double im = uniform(lo.imag(), hi.imag());
        return {re, im};
    }

private:
    std::uint64_t state_;
};

/// Where and how densely the verifiers sample. Defaults keep z away from the
/// theta3 zeros (z = pi/2 + pi*tau/2 mod lattice) and tau safely inside the
/// upper half-plane.
struct sample_plan {
    int count = 10;
    std::uint64_t seed = 1;
    cplx z_lo{0.0, -0.3};
    cplx z_hi{pi, 0.3};
    cplx tau_lo{-0.5, 0.8};
    cplx tau_hi{0.5, 2.0};
    double y_scale = 0.5;

    void validate() const {
        if (count < 1) throw std::invalid_argument("sample_plan: count must be positive");
        if (!(tau_lo.imag() >= 0.5))
            throw std::invalid_argument("sample_plan: tau box must have Im >= 0.5");
        if (!(tau_hi.imag() >= tau_lo.imag()))
            throw std::invalid_argument("sample_plan: empty tau box");
    }

    cplx draw_z(splitmix64& rng) const { return rng.box(z_lo, z_hi); }
    cplx draw_tau(splitmix64& rng) const { return rng.box(tau_lo, tau_hi); }
    /// One free shift parameter: y_scale * ([-1,1) + i[-1,1)).
    cplx draw_y(splitmix64& rng) const {
        return y_scale * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    /// n-1 free draws, last component the exact negated sum.
    std::vector<cplx> draw_sum_zero(splitmix64& rng, std::size_t n) const {
        std::vector<cplx> ys;
        cplx sum(0.0, 0.0);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            ys.push_back(draw_y(rng));
            sum += ys.back();
        }
        ys.push_back(-sum);
        return ys;
    }
};

}  // namespace circsum
