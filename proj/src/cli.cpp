#include "circsum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <ostream>
#include <sstream>

#include "circsum/verify.hpp"

namespace circsum::cli {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complex literal grammar: [-]<float>[(+|-)<float>i], no spaces.
cplx parse_complex(const std::string& s) {
    for (char ch : s)
        if (std::isspace(static_cast<unsigned char>(ch)))
            throw usage_error("bad complex literal '" + s + "' (no spaces allowed)");
    if (s.empty()) throw usage_error("empty complex literal");
    const char* p = s.c_str();
    char* end = nullptr;
    const double re = std::strtod(p, &end);
    if (end == p) throw usage_error("bad complex literal '" + s + "'");
    double im = 0.0;
    if (*end != '\0') {
        if (*end != '+' && *end != '-') throw usage_error("bad complex literal '" + s + "'");
        char* end2 = nullptr;
        im = std::strtod(end, &end2);
        if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0')
            throw usage_error("bad complex literal '" + s + "'");
    }
    if (!std::isfinite(re) || !std::isfinite(im))
        throw usage_error("non-finite complex literal '" + s + "'");
    return {re, im};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw usage_error("empty complex list");
    return out;
}

std::string format_complex(cplx v) {
    char buf[64];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    }
    return buf;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct verify_options {
    std::string which;
    std::optional<int> m, n;
    std::string tau_str, ys_str;
    int samples = 10;
    std::uint64_t seed = 1;
    bool seed_given = false;
    double tol = 1e-9;
    int trunc_theta = 24;
    int rad = 12;
    std::string format = "text";
    bool no_timestamp = false;
};

std::vector<identity_id> identities_for(const std::string& which) {
    if (which == "circular") return {identity_id::circular};
    if (which == "dual") return {identity_id::dual};
    if (which == "f-consistency") return {identity_id::f_consistency};
    if (which == "thm12") return {identity_id::thm12_reparam};
    if (which == "g-transform") return {identity_id::g_transform};
    if (which == "g13") return {identity_id::g13_transform, identity_id::g13_equals_a};
    if (which == "cubic-rels") return {identity_id::cubic_b_rel, identity_id::cubic_c_rel};
    if (which == "proposition")
        return {identity_id::prop_a_transform, identity_id::prop_c_transform};
    if (which == "counterexample") return {identity_id::counterexample};
    if (which == "all") return {std::begin(all_identities), std::end(all_identities)};
    throw usage_error("unknown verify target '" + which + "'");
}

void print_text_report(const verification_report& rep, std::ostream& out) {
    out << "identity: " << to_string(rep.identity) << "\n";
    out << "  params: m=" << rep.m << " n=" << rep.n << " tau=" << format_complex(rep.tau);
    out << " ys=[";
    for (std::size_t j = 0; j < rep.ys.size(); ++j)
        out << (j ? "," : "") << format_complex(rep.ys[j]);
    out << "]\n";
    out << "  truncation: n_max=" << rep.n_max << " r_max=" << rep.r_max
        << " theta_tail=" << rep.theta_tail << " lattice_tail=" << rep.lattice_tail << "\n";
    out << "  samples: " << rep.samples.size() << "  max_rel_err=" << rep.max_rel_err
        << "  tolerance=" << rep.tolerance << "\n";
    out << "  verdict: " << to_string(rep.outcome) << "\n";
}

int aggregate_exit(const std::vector<verification_report>& reports) {
    bool any_fail = false, any_inconclusive = false;
    for (const auto& rep : reports) {
        if (rep.outcome == verdict::fail) any_fail = true;
        if (rep.outcome == verdict::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return kExitFail;
    if (any_inconclusive) return kExitInconclusive;
    return kExitPass;
}

int do_verify(const verify_options& opt, std::ostream& out) {
    harness_config cfg;
    cfg.plan.count = opt.samples;
    cfg.plan.seed = opt.seed;
    cfg.tolerance = opt.tol;
    cfg.trunc = truncation_spec(opt.trunc_theta);
    cfg.rad = lattice_radius(opt.rad);

    run_params params;
    params.m = opt.m;
    params.n = opt.n;
    if (!opt.tau_str.empty()) params.tau = parse_complex(opt.tau_str);
    if (!opt.ys_str.empty()) params.ys = parse_complex_list(opt.ys_str);
    if (params.ys && opt.n && static_cast<int>(params.ys->size()) != *opt.n)
        throw usage_error("--n does not match the number of --y components");

    std::vector<verification_report> reports;
    if (opt.which == "all") {
        reports = run_all(params, cfg);
    } else {
        std::uint64_t index = 0;
        for (identity_id id : identities_for(opt.which)) {
            harness_config sub = cfg;
            sub.plan.seed = cfg.plan.seed + index;
            reports.push_back(run_identity(id, params, sub));
            ++index;
        }
    }

    if (opt.format == "json") {
        if (opt.which == "all") {
            json envelope;
            if (!opt.no_timestamp) envelope["timestamp"] = utc_timestamp();
            json array = json::array();
            int n_pass = 0, n_fail = 0, n_inc = 0;
            for (const auto& rep : reports) {
                array.push_back(json::parse(report_to_json(rep)));
                if (rep.outcome == verdict::pass) ++n_pass;
                if (rep.outcome == verdict::fail) ++n_fail;
                if (rep.outcome == verdict::inconclusive) ++n_inc;
            }
            envelope["reports"] = std::move(array);
            envelope["summary"] = {{"pass", n_pass}, {"fail", n_fail}, {"inconclusive", n_inc}};
            out << envelope.dump(2) << "\n";
        } else if (reports.size() == 1) {
            out << report_to_json(reports.front()) << "\n";
        } else {
            json array = json::array();
            for (const auto& rep : reports) array.push_back(json::parse(report_to_json(rep)));
            out << array.dump(2) << "\n";
        }
    } else {
        for (const auto& rep : reports) print_text_report(rep, out);
        int n_pass = 0, n_fail = 0, n_inc = 0;
        for (const auto& rep : reports) {
            if (rep.outcome == verdict::pass) ++n_pass;
            if (rep.outcome == verdict::fail) ++n_fail;
            if (rep.outcome == verdict::inconclusive) ++n_inc;
        }
        out << "summary: pass=" << n_pass << " fail=" << n_fail << " inconclusive=" << n_inc
            << "\n";
        if (!opt.no_timestamp) out << "generated: " << utc_timestamp() << "\n";
    }
    return aggregate_exit(reports);
}

void emit_value(cplx value, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json j;
        j["value"] = json::array({value.real(), value.imag()});
        out << j.dump(2) << "\n";
    } else {
        out << format_complex(value) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"circsum: theta-function circular-summation identities, lattice sums, and "
                 "cubic theta functions, with a pointwise + Fourier-mode verification harness"};
    app.require_subcommand(1);

    // eval ------------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->require_subcommand(1);

    struct {
        int kind = 3;
        std::string z, tau;
        int trunc = 24;
        std::string format = "text";
    } ev_theta;
    auto* theta_cmd = eval->add_subcommand("theta", "Jacobi theta theta_k(z|tau)");
    theta_cmd->add_option("--kind", ev_theta.kind, "theta index k")->required()->check(
        CLI::Range(1, 4));
    theta_cmd->add_option("--z", ev_theta.z, "argument z, e.g. 0.3+0.1i")->required();
    theta_cmd->add_option("--tau", ev_theta.tau, "modular parameter, Im > 0")->required();
    theta_cmd->add_option("--trunc-theta", ev_theta.trunc, "series cutoff n_max");
    theta_cmd->add_option("--format", ev_theta.format)->check(CLI::IsMember({"text", "json"}));

    struct {
        std::string which = "a";
        std::string x, y, tau;
        int rad = 12;
        std::string format = "text";
    } ev_cubic;
    auto* cubic_cmd = eval->add_subcommand("cubic", "cubic theta a/b/c(x,y|tau)");
    cubic_cmd->add_option("--which", ev_cubic.which)->required()->check(
        CLI::IsMember({"a", "b", "c"}));
    cubic_cmd->add_option("--x", ev_cubic.x)->required();
    cubic_cmd->add_option("--y", ev_cubic.y)->required();
    cubic_cmd->add_option("--tau", ev_cubic.tau)->required();
    cubic_cmd->add_option("--rad", ev_cubic.rad, "enumeration radius");
    cubic_cmd->add_option("--format", ev_cubic.format)->check(CLI::IsMember({"text", "json"}));

    struct {
        int m = 1;
        std::optional<int> n;
        std::string ys, tau;
        int rad = 12;
        std::string format = "text";
    } ev_g, ev_f;
    auto* g_cmd = eval->add_subcommand("g", "constrained lattice sum G_{m,n}(ys|tau)");
    auto* f_cmd = eval->add_subcommand("f", "dual lattice sum F_{m,n}(ys|tau)");
    for (auto [cmd, store] : {std::pair{g_cmd, &ev_g}, std::pair{f_cmd, &ev_f}}) {
        cmd->add_option("--m", store->m)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--n", store->n)->check(CLI::PositiveNumber);
        cmd->add_option("--y", store->ys, "comma-separated sum-zero shifts")->required();
        cmd->add_option("--tau", store->tau)->required();
        cmd->add_option("--rad", store->rad);
        cmd->add_option("--format", store->format)->check(CLI::IsMember({"text", "json"}));
    }

    // verify ----------------------------------------------------------------
    verify_options vo;
    auto* ver = app.add_subcommand("verify", "verify identities and emit a report");
    ver->add_option("which", vo.which, "identity group")
        ->required()
        ->check(CLI::IsMember({"circular", "dual", "f-consistency", "thm12", "g-transform",
                               "g13", "cubic-rels", "proposition", "counterexample", "all"}));
    ver->add_option("--m", vo.m);
    ver->add_option("--n", vo.n);
    ver->add_option("--tau", vo.tau_str);
    ver->add_option("--y", vo.ys_str, "comma-separated complex list");
    ver->add_option("--samples", vo.samples)->check(CLI::PositiveNumber);
    auto* seed_opt = ver->add_option("--seed", vo.seed);
    ver->add_option("--tol", vo.tol);
    ver->add_option("--trunc-theta", vo.trunc_theta)->check(CLI::NonNegativeNumber);
    ver->add_option("--rad", vo.rad)->check(CLI::NonNegativeNumber);
    ver->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
    ver->add_flag("--no-timestamp", vo.no_timestamp, "omit timestamps (stable output for CI)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (theta_cmd->parsed()) {
            const tau_param tau(parse_complex(ev_theta.tau));
            const cplx value = theta(static_cast<theta_kind>(ev_theta.kind),
                                     parse_complex(ev_theta.z), tau,
                                     truncation_spec(ev_theta.trunc));
            emit_value(value, ev_theta.format, out);
            return kExitPass;
        }
        if (cubic_cmd->parsed()) {
            const cubic_args args_c{parse_complex(ev_cubic.x), parse_complex(ev_cubic.y),
                                    tau_param(parse_complex(ev_cubic.tau))};
            const lattice_radius rad(ev_cubic.rad);
            cplx value;
            if (ev_cubic.which == "a")
                value = a_cubic(args_c, rad);
            else if (ev_cubic.which == "b")
                value = b_cubic(args_c, rad);
            else
                value = c_cubic(args_c, rad);
            emit_value(value, ev_cubic.format, out);
            return kExitPass;
        }
        if (g_cmd->parsed() || f_cmd->parsed()) {
            const auto& store = g_cmd->parsed() ? ev_g : ev_f;
            const std::vector<cplx> ys_raw = parse_complex_list(store.ys);
            if (store.n && static_cast<int>(ys_raw.size()) != *store.n)
                throw usage_error("--n does not match the number of --y components");
            const y_tuple ys(ys_raw);
            const tau_param tau(parse_complex(store.tau));
            const winding_order m(store.m);
            const lattice_radius rad(store.rad);
            const cplx value =
                g_cmd->parsed() ? g_mn(m, ys, tau, rad) : f_mn_series(m, ys, tau, rad);
            emit_value(value, store.format, out);
            return kExitPass;
        }
        if (ver->parsed()) {
            if (seed_opt->count() == 0) {
                if (const char* env = std::getenv("THETA_SEED")) {
                    char* end = nullptr;
                    const unsigned long long v = std::strtoull(env, &end, 10);
                    if (end == env || *end != '\0')
                        throw usage_error("THETA_SEED is not a valid unsigned integer");
                    vo.seed = v;
                }
            }
            return do_verify(vo, out);
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const enumeration_budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace circsum::cli
