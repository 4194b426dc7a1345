#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circsum/tau.hpp"

namespace circsum {

/// Closed catalog of the verified identities; every entry has exactly one
/// verifier (see verify.hpp) and a registry test asserts the coverage.
enum class identity_id {
    circular,        // rotation sum of theta3 products = G * theta3(mnz|m^2 n tau)
    dual,            // weighted product sum = F * theta3(z|tau)
    f_consistency,   // the two F routes agree (series vs transformed G)
    thm12_reparam,   // y |-> pi*tau*y reparametrization of the dual F-form
    g_transform,     // G at inverted-scaled tau vs the F-series expression
    g13_transform,   // three-variable G at -1/tau vs the bracketed double sums
    cubic_b_rel,     // b(x,y) = a(x, y+pi/3)
    cubic_c_rel,     // c(x,y) = q^{1/3} a(x+pi tau/3, y+pi tau/3)
    g13_equals_a,    // the claimed G_{1,3} = a pointwise equality
    prop_a_transform,  // a(x/tau, y/tau | -1/tau) display
    prop_c_transform,  // c(x/tau, y/tau | -1/tau) display
    counterexample,    // failure of the (1+q)-corrected decomposition, quantified
    decomposition,     // theta3(z|tau) = theta3(2z|4tau) + theta2(2z|4tau)
};

inline constexpr identity_id all_identities[] = {
    identity_id::circular,       identity_id::dual,
    identity_id::f_consistency,  identity_id::thm12_reparam,
    identity_id::g_transform,    identity_id::g13_transform,
    identity_id::cubic_b_rel,    identity_id::cubic_c_rel,
    identity_id::g13_equals_a,   identity_id::prop_a_transform,
    identity_id::prop_c_transform, identity_id::counterexample,
    identity_id::decomposition,
};

std::string to_string(identity_id id);
/// Parses the CLI spelling ("circular", "cubic-b", ...); throws on unknown.
identity_id identity_from_string(const std::string& name);

enum class verdict { pass, fail, inconclusive };
std::string to_string(verdict v);

struct sample_record {
    cplx z;
    cplx lhs;
    cplx rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

struct fourier_mode_record {
    int mode = 0;
    cplx lhs;
    cplx rhs;
    double abs_diff = 0.0;
};

/// Structured outcome of one identity check at one parameter configuration.
struct verification_report {
    identity_id identity = identity_id::circular;
    int m = 1;
    int n = 1;
    cplx tau;
    std::vector<cplx> ys;

    int n_max = 0;
    int r_max = 0;
    double theta_tail = 0.0;
    double lattice_tail = 0.0;

    std::vector<sample_record> samples;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    verdict outcome = verdict::pass;
    std::optional<std::vector<fourier_mode_record>> fourier;

    bool passed() const { return outcome == verdict::pass; }
};

/// Serializes to the pinned JSON schema (complex numbers as [re, im] pairs).
std::string report_to_json(const verification_report& report, int indent = 2);

}  // namespace circsum
