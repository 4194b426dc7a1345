#include "circsum/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace circsum {

namespace {
using nlohmann::json;

json cplx_json(cplx v) { return json::array({v.real(), v.imag()}); }
}  // namespace

std::string to_string(identity_id id) {
    switch (id) {
        case identity_id::circular: return "circular";
        case identity_id::dual: return "dual";
        case identity_id::f_consistency: return "f-consistency";
        case identity_id::thm12_reparam: return "thm12-reparam";
        case identity_id::g_transform: return "g-transform";
        case identity_id::g13_transform: return "g13-transform";
        case identity_id::cubic_b_rel: return "cubic-b";
        case identity_id::cubic_c_rel: return "cubic-c";
        case identity_id::g13_equals_a: return "g13-equals-a";
        case identity_id::prop_a_transform: return "prop-a-transform";
        case identity_id::prop_c_transform: return "prop-c-transform";
        case identity_id::counterexample: return "counterexample";
        case identity_id::decomposition: return "decomposition";
    }
    throw std::invalid_argument("identity_id: bad value");
}

identity_id identity_from_string(const std::string& name) {
    for (identity_id id : all_identities)
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown identity: " + name);
}

std::string to_string(verdict v) {
    switch (v) {
        case verdict::pass: return "pass";
        case verdict::fail: return "fail";
        case verdict::inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("verdict: bad value");
}

std::string report_to_json(const verification_report& report, int indent) {
    json j;
    j["identity"] = to_string(report.identity);
    json ys = json::array();
    for (cplx y : report.ys) ys.push_back(cplx_json(y));
    j["params"] = {{"m", report.m}, {"n", report.n}, {"tau", cplx_json(report.tau)}, {"ys", ys}};
    j["truncation"] = {{"n_max", report.n_max},
                       {"r_max", report.r_max},
                       {"theta_tail", report.theta_tail},
                       {"lattice_tail", report.lattice_tail}};
    json samples = json::array();
    for (const sample_record& s : report.samples)
        samples.push_back({{"z", cplx_json(s.z)},
                           {"lhs", cplx_json(s.lhs)},
                           {"rhs", cplx_json(s.rhs)},
                           {"abs_err", s.abs_err},
                           {"rel_err", s.rel_err}});
    j["samples"] = std::move(samples);
    j["max_rel_err"] = report.max_rel_err;
    j["tolerance"] = report.tolerance;
    j["verdict"] = to_string(report.outcome);
    if (report.fourier) {
        json modes = json::array();
        for (const fourier_mode_record& f : *report.fourier)
            modes.push_back({{"mode", f.mode},
                             {"lhs", cplx_json(f.lhs)},
                             {"rhs", cplx_json(f.rhs)},
                             {"abs_diff", f.abs_diff}});
        j["fourier"] = std::move(modes);
    } else {
        j["fourier"] = nullptr;
    }
    return j.dump(indent);
}

}  // namespace circsum
