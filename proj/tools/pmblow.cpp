#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "pmblow/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerificationFailure = 3;

pmb::ExperimentConfig load_config(const std::string& config_path) {
    if (config_path.empty()) return pmb::ExperimentConfig{};
    return pmb::ExperimentConfig::load(config_path);
}

void apply_overrides(pmb::ExperimentConfig& config, double m, double p, int N, double q,
                     const std::string& density) {
    if (m > 0.0) config.m = m;
    if (p > 0.0) config.p = p;
    if (N > 0) config.N = N;
    if (q >= 0.0) config.density_q = q;
    if (!density.empty()) config.density_kind = density;
}

int cmd_regimes(const pmb::ExperimentConfig& config) {
    const auto spec = pmb::spec_from_config(config);
    const auto cls = pmb::classify_regime(spec);
    pmb::Table table({"m", "p", "N", "q", "b", "p_bar", "p_under", "eq2_margin", "regime",
                      "eps_required", "large_data_blowup"});
    table.add_row({pmb::format_double(spec.m), pmb::format_double(spec.p),
                   std::to_string(spec.N), pmb::format_double(spec.density.q),
                   pmb::format_double(cls.b),
                   cls.p_bar ? pmb::format_double(*cls.p_bar) : "undefined",
                   cls.p_under ? pmb::format_double(*cls.p_under) : "undefined",
                   pmb::format_double(cls.eq2_margin), pmb::to_string(cls.regime),
                   cls.eps_required ? pmb::format_double(*cls.eps_required) : "",
                   cls.large_data_blowup ? "1" : "0"});
    std::cout << table.to_csv();
    return kExitOk;
}

int cmd_params(const pmb::ExperimentConfig& config, const std::string& which) {
    const auto spec = pmb::spec_from_config(config);
    if (which == "global") {
        const auto params = pmb::find_global_params(spec, config.r0);
        const auto report = pmb::check_global_conditions(params, spec, config.r0);
        pmb::Table table({"family", "C", "a", "T", "alpha", "beta", "m", "p", "b", "k1", "k2"});
        table.add_row({"super", pmb::format_double(params.C), pmb::format_double(params.a),
                       pmb::format_double(params.T), pmb::format_double(params.alpha),
                       pmb::format_double(params.beta), pmb::format_double(params.m),
                       pmb::format_double(params.p), pmb::format_double(params.b),
                       pmb::format_double(spec.density.k1), pmb::format_double(spec.density.k2)});
        std::cout << table.to_csv() << report.to_csv();
        return report.all_satisfied() ? kExitOk : kExitVerificationFailure;
    }
    if (which == "blowup") {
        const auto params = pmb::find_blowup_params(spec);
        const auto report = pmb::check_blowup_conditions(params, spec);
        pmb::Table table({"family", "C", "a", "T", "alpha", "beta", "m", "p", "b", "k1", "k2"});
        table.add_row({"sub", pmb::format_double(params.C), pmb::format_double(params.a),
                       pmb::format_double(params.T), pmb::format_double(params.alpha),
                       pmb::format_double(params.beta), pmb::format_double(params.m),
                       pmb::format_double(params.p), pmb::format_double(params.b),
                       pmb::format_double(spec.density.k1), pmb::format_double(spec.density.k2)});
        std::cout << table.to_csv() << report.to_csv();
        return report.all_satisfied() ? kExitOk : kExitVerificationFailure;
    }
    if (which == "chain") {
        const auto sub = pmb::find_blowup_params(spec);
        pmb::ChainOverrides overrides;
        if (config.chain_beta_bar > 0.0) overrides.beta_bar = config.chain_beta_bar;
        if (config.chain_eps0 > 0.0) overrides.eps0 = config.chain_eps0;
        // Datum floor defaults mirror the chain experiment's bump.
        const auto chain = pmb::find_chain_params(spec, 0.5 * config.u0_height,
                                                  0.5412 * config.u0_radius, sub, overrides);
        const auto report = pmb::check_chain_conditions(chain, spec);
        pmb::Table table({"C1", "a1", "T1", "t1", "T", "beta_bar", "alpha_bar", "eps0", "eps",
                          "omega1"});
        table.add_row({pmb::format_double(chain.C1), pmb::format_double(chain.a1),
                       pmb::format_double(chain.T1), pmb::format_double(chain.t1),
                       pmb::format_double(chain.T), pmb::format_double(chain.beta_bar),
                       pmb::format_double(chain.alpha_bar), pmb::format_double(chain.eps0),
                       pmb::format_double(chain.eps), pmb::format_double(chain.omega1())});
        std::cout << table.to_csv() << report.to_csv();
        return report.all_satisfied() ? kExitOk : kExitVerificationFailure;
    }
    std::cerr << "unknown parameter system: " << which << "\n";
    return kExitInfeasible;
}

int cmd_verify_residual(const pmb::ExperimentConfig& config, const std::string& family,
                        const std::string& out_dir) {
    const auto spec = pmb::spec_from_config(config);
    pmb::ResidualField field;
    if (family == "super") {
        const auto params = pmb::find_global_params(spec, config.r0);
        field = pmb::residual_super(params, spec, pmb::make_residual_grid(params), config.r0);
    } else if (family == "sub") {
        const auto params = pmb::find_blowup_params(spec);
        field = pmb::residual_sub(params, spec, pmb::make_residual_grid(params));
    } else if (family == "chain") {
        const auto sub = pmb::find_blowup_params(spec);
        const auto chain = pmb::find_chain_params(spec, 0.5 * config.u0_height,
                                                  0.5412 * config.u0_radius, sub);
        field = pmb::residual_chain(chain, spec, pmb::make_residual_grid(chain.chain_barrier()));
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitInfeasible;
    }

    std::cout << "min_relative_residual," << pmb::format_double(field.min_relative) << "\n";
    std::cout << "max_relative_residual," << pmb::format_double(field.max_relative) << "\n";
    std::cout << "worst_min_node,r=" << pmb::format_double(field.worst_min.r)
              << ",t=" << pmb::format_double(field.worst_min.t) << "\n";
    std::cout << "worst_max_node,r=" << pmb::format_double(field.worst_max.r)
              << ",t=" << pmb::format_double(field.worst_max.t) << "\n";

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        pmb::Table table({"r", "t", "region", "residual"});
        for (const auto& node : field.nodes) {
            table.add_row({pmb::format_double(node.r), pmb::format_double(node.t),
                           pmb::to_string(node.region), pmb::format_double(node.residual)});
        }
        table.write_csv(out_dir + "/residual_field.csv");
    }

    const bool sign_ok = family == "super" ? field.min_relative >= -pmb::residual_tol_rel
                                           : field.max_relative <= pmb::residual_tol_rel;
    return sign_ok ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical exponents, barrier certification and a degenerate-PDE simulator "
                 "for the density-weighted porous medium equation with reaction"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir = "out";
    double m = -1.0, p = -1.0, q = -1.0;
    int N = -1;
    std::string density_kind;

    app.add_option("--config", config_path, "flat key-value config file")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--m", m, "porous medium exponent override");
    app.add_option("--p", p, "reaction exponent override");
    app.add_option("--N", N, "space dimension override");
    app.add_option("--q", q, "density decay exponent override");
    app.add_option("--density", density_kind, "density kind override");

    auto* regimes = app.add_subcommand("regimes", "print b, p_bar, p_under, eq2 margin, regime");
    auto* params = app.add_subcommand("params", "solve a parameter system and print the report");
    std::string which_system = "global";
    params->add_option("system", which_system, "global|blowup|chain")->required();
    auto* verify = app.add_subcommand("verify", "residual sign certification");
    std::string verify_what = "residual";
    std::string family = "super";
    verify->add_option("what", verify_what, "residual");
    verify->add_option("--family", family, "super|sub|chain")->required();
    auto* simulate = app.add_subcommand("simulate", "run the radial solver from a config");
    auto* dichotomy = app.add_subcommand("dichotomy", "small/large data sweep over p values");
    auto* chain = app.add_subcommand("chain", "the reaction-free chaining experiment");

    CLI11_PARSE(app, argc, argv);

    try {
        auto config = load_config(config_path);
        apply_overrides(config, m, p, N, q, density_kind);

        if (regimes->parsed()) return cmd_regimes(config);
        if (params->parsed()) return cmd_params(config, which_system);
        if (verify->parsed()) {
            if (verify_what != "residual") {
                std::cerr << "unknown verification: " << verify_what << "\n";
                return kExitVerificationFailure;
            }
            return cmd_verify_residual(config, family, out_dir);
        }
        if (simulate->parsed()) {
            const auto run = pmb::run_simulate(config, out_dir);
            std::cout << "status," << pmb::to_string(run.status) << "\n";
            std::cout << "blowup_time_estimate," << pmb::format_double(run.blowup_time_estimate)
                      << "\n";
            return kExitOk;
        }
        if (dichotomy->parsed()) {
            const auto result = pmb::run_dichotomy(config, out_dir);
            std::cout << result.to_table().to_csv();
            return kExitOk;
        }
        if (chain->parsed()) {
            const auto report = pmb::run_chain(config, out_dir);
            std::cout << report.to_table().to_csv();
            return report.within_deadline ? kExitOk : kExitVerificationFailure;
        }
    } catch (const pmb::Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const pmb::LinkViolated& e) {
        std::cerr << "link violated: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const pmb::ConditionNotVerified& e) {
        std::cerr << "not verified: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const pmb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
