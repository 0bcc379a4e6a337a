#include "pmblow/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>

#include "pmblow/svgplot.hpp"

namespace pmb {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ProblemSpec spec_from_config(const ExperimentConfig& config, std::optional<double> p_override) {
    ProblemSpec spec;
    spec.m = config.m;
    spec.p = p_override.value_or(config.p);
    spec.N = config.N;
    const auto kind = density_kind_from_string(config.density_kind);
    switch (kind) {
        case DensityKind::PowerTail: spec.density = DensityModel::power_tail(config.density_q); break;
        case DensityKind::ShiftedPower: spec.density = DensityModel::shifted_power(config.density_q); break;
        case DensityKind::Constant: spec.density = DensityModel::constant(); break;
        case DensityKind::Custom: throw OutOfRange("custom densities are not configurable from files");
    }
    spec.validate();
    return spec;
}

std::vector<double> build_initial_data(const ExperimentConfig& config, const RadialGrid& grid,
                                       const std::optional<BarrierParams>& barrier) {
    std::vector<double> u0(grid.n, 0.0);
    switch (config.u0_kind) {
        case InitialDataKind::BarrierSub:
        case InitialDataKind::BarrierSuperFraction: {
            if (!barrier) throw OutOfRange("barrier-based initial data needs barrier parameters");
            const double scale =
                config.u0_kind == InitialDataKind::BarrierSub ? 1.0 : config.u0_fraction;
            for (int i = 0; i < grid.n; ++i) {
                u0[i] = scale * eval_barrier(*barrier, grid.centers[i], 0.0);
            }
            break;
        }
        case InitialDataKind::Bump:
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.centers[i] / config.u0_radius;
                const double base = 1.0 - x * x;
                u0[i] = base > 0.0 ? config.u0_height * base * base : 0.0;
            }
            break;
        case InitialDataKind::Plateau:
            for (int i = 0; i < grid.n; ++i) {
                u0[i] = grid.centers[i] <= config.u0_radius ? config.u0_height : 0.0;
            }
            break;
    }
    return u0;
}

double barenblatt_front_radius(double m, int N, double mass, double t) {
    const double lambda = 1.0 / (N * (m - 1.0) + 2.0);
    const double kappa = lambda * (m - 1.0) / (2.0 * m);
    const double omega_N = 2.0 * std::pow(M_PI, N / 2.0) / std::tgamma(N / 2.0);
    const double shape_integral = 0.5 * std::beta(N / 2.0, 1.0 / (m - 1.0) + 1.0);
    // mass = omega_N C^{1/(m-1)+N/2} kappa^{-N/2} shape_integral
    const double C = std::pow(mass * std::pow(kappa, N / 2.0) / (omega_N * shape_integral),
                              1.0 / (1.0 / (m - 1.0) + N / 2.0));
    return std::sqrt(C / kappa) * std::pow(std::max(t, 1e-300), lambda);
}

double barrier_support_radius(const BarrierParams& params, double t) {
    const TimeProfile tp = time_profile(params, t);
    const double cap = params.a / tp.eta;
    if (cap >= 1.0) return std::pow(cap, 1.0 / params.b);
    if (params.family == BarrierFamily::Sub) return std::sqrt(cap);
    const double num = 2.0 * cap - (2.0 - params.b);
    return num > 0.0 ? std::sqrt(num / params.b) : 0.0;
}

void write_run_outputs(const RadialSolution& run, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    Table trajectory({"t", "sup_norm", "weighted_mass", "support_radius"});
    for (std::size_t k = 0; k < run.times.size(); ++k) {
        trajectory.add_row({format_double(run.times[k]), format_double(run.sup_norms[k]),
                            format_double(run.masses[k]), format_double(run.support_radii[k])});
    }
    trajectory.write_csv(out_dir + "/trajectory.csv");

    std::vector<std::string> header{"r"};
    for (double t : run.times) header.push_back("u@t=" + format_double(t));
    Table profiles(std::move(header));
    for (int i = 0; i < run.grid.n; ++i) {
        std::vector<std::string> row{format_double(run.grid.centers[i])};
        for (const auto& profile : run.profiles) row.push_back(format_double(profile[i]));
        profiles.add_row(std::move(row));
    }
    profiles.write_csv(out_dir + "/profiles.csv");

    Table events({"kind", "time", "value"});
    for (const auto& event : run.events) {
        events.add_row({to_string(event.kind), format_double(event.time),
                        format_double(event.value)});
    }
    events.write_csv(out_dir + "/events.csv");

    Table summary({"status", "blowup_time_estimate", "final_sup", "final_mass",
                   "final_support_radius", "boundary_guard_ok"});
    summary.add_row({to_string(run.status), format_double(run.blowup_time_estimate),
                     format_double(run.sup_norms.back()), format_double(run.masses.back()),
                     format_double(run.support_radii.back()),
                     run.boundary_guard_ok ? "1" : "0"});
    summary.write_csv(out_dir + "/summary.csv");
}

void emit_plots(const RadialSolution& run, const std::optional<BarrierParams>& overlay,
                const std::string& out_dir) {
    if (run.times.empty()) throw MissingData("empty trajectory, nothing to plot");
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    SvgPlot sup_plot("sup-norm history", "t", "sup |u|", false, true);
    sup_plot.add_series("sup_norm", run.times, run.sup_norms, "#1f77b4");
    if (run.status == RunStatus::BlewUp && std::isfinite(run.blowup_time_estimate)) {
        sup_plot.add_vline(run.blowup_time_estimate, "#d62728", "estimated S");
    }
    sup_plot.write(out_dir + "/supnorm.svg");

    SvgPlot support_plot("support radius", "t", "radius", false, false);
    support_plot.add_series("numeric support", run.times, run.support_radii, "#1f77b4");
    if (overlay) {
        std::vector<double> barrier_radius;
        std::vector<double> barrier_times;
        for (double t : run.times) {
            if (overlay->family == BarrierFamily::Sub && t >= overlay->T) break;
            barrier_times.push_back(t);
            barrier_radius.push_back(barrier_support_radius(*overlay, t));
        }
        support_plot.add_series("barrier free boundary", barrier_times, barrier_radius,
                                "#ff7f0e");
    }
    support_plot.write(out_dir + "/support.svg");

    SvgPlot profile_plot("profile snapshots", "r", "u", false, false);
    const std::size_t count = run.times.size();
    const std::size_t stride = std::max<std::size_t>(1, count / 8);
    const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    int color_index = 0;
    for (std::size_t k = 0; k < count; k += stride) {
        profile_plot.add_series("t=" + format_double(run.times[k]), run.grid.centers,
                                run.profiles[k], colors[color_index++ % 8]);
    }
    profile_plot.write(out_dir + "/profiles.svg");
}

namespace {

SolverOptions dichotomy_solver_options(const ExperimentConfig& config, double norm0) {
    SolverOptions options;
    // Experiments declare blow-up at 1e4x growth; the per-run default of 1e6x
    // only stretches the reaction-bounded tail of the run.
    options.M_blow = config.M_blow > 0.0 ? config.M_blow : 1e4 * std::max(1.0, norm0);
    return options;
}

double measured_half_height_radius(const RadialGrid& grid, const std::vector<double>& u0,
                                   double level) {
    double r0 = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        if (u0[i] >= level) r0 = grid.centers[i];
        else break; // first dip below the level ends the certified ball
    }
    return r0;
}

struct SmallRunOutcome {
    std::string status = "skipped";
    double blowup_time = kNaN;
    double violation = kNaN;
    double envelope_ratio = kNaN;
};

SmallRunOutcome small_data_run(const ExperimentConfig& config, const ProblemSpec& spec,
                               const std::optional<BarrierParams>& own_super,
                               const std::optional<BarrierParams>& reference_super,
                               const std::string& out_dir) {
    SmallRunOutcome outcome;
    const auto barrier = own_super ? own_super : reference_super;
    if (!barrier) return outcome;

    const double m = spec.m;
    if (own_super) {
        const auto& super = *own_super;
        // Comparison barrier: same family with a later start; it dominates the
        // halved datum with margins everywhere, so the sandwich is testable at
        // tight tolerances away from the shared free boundary.
        BarrierParams comparison = super;
        comparison.T = super.T * std::pow(2.0, 1.0 / (2.0 * super.alpha));

        const double horizon = config.horizon > 0.0 ? config.horizon : 10.0 * super.T;
        const double R = config.grid_R > 0.0
                             ? config.grid_R
                             : 1.6 * barrier_support_radius(comparison, horizon);
        const RadialGrid grid = RadialGrid::uniform(spec.N, R, config.grid_n);

        ExperimentConfig local = config;
        local.u0_kind = InitialDataKind::BarrierSuperFraction;
        const auto u0 = build_initial_data(local, grid, super);
        const double norm0 = *std::max_element(u0.begin(), u0.end());
        auto options = dichotomy_solver_options(config, norm0);
        const auto run = evolve(spec, u0, horizon, grid, options);

        double max_sup = 0.0;
        double envelope = 0.0;
        for (std::size_t k = 0; k < run.times.size(); ++k) {
            max_sup = std::max(max_sup, run.sup_norms[k]);
            envelope = std::max(envelope, run.sup_norms[k] /
                                              (super.C * std::pow(super.T + run.times[k],
                                                                  -super.alpha)));
        }
        const auto cmp =
            comparison_test(run, comparison, ComparisonDirection::Below, 1e-6 * max_sup);
        outcome.status = to_string(run.status);
        outcome.blowup_time = run.blowup_time_estimate;
        outcome.violation = cmp.max_violation;
        outcome.envelope_ratio = envelope;
        write_run_outputs(run, out_dir);
        emit_plots(run, comparison, out_dir);
        return outcome;
    }

    // No Super barrier at this p: reuse the reference small datum and size the
    // horizon from the large-T comparison argument when p < m.
    const auto& reference = *reference_super;
    const double R_ref = 2.0 * barrier_support_radius(reference, 0.0);
    RadialGrid grid = RadialGrid::uniform(spec.N, std::max(R_ref, 8.0), config.grid_n);
    ExperimentConfig local = config;
    local.u0_kind = InitialDataKind::BarrierSuperFraction;
    std::vector<double> u0 = build_initial_data(local, grid, reference);

    double horizon = config.horizon;
    if (horizon <= 0.0) {
        if (spec.p < m) {
            const auto sub = find_blowup_params(spec);
            const double eps_hat = 0.5 * *std::max_element(u0.begin(), u0.end());
            const double r0 = measured_half_height_radius(grid, u0, eps_hat);
            const double ball = std::min(std::pow(r0, sub.b), r0 * r0);
            const double T_value = std::pow(sub.C / eps_hat, spec.p - 1.0);
            const double T_support = std::pow(sub.a / ball, (spec.p - 1.0) / (m - spec.p));
            horizon = 1.3 * std::max(T_value, T_support);
        } else {
            horizon = 10.0 * reference.T;
        }
    }
    if (spec.p < m) {
        // Mass spreads before it ignites; give the domain room for both.
        double mass = 0.0;
        for (int i = 0; i < grid.n; ++i) mass += grid.volumes[i] * u0[i];
        const double spread = barenblatt_front_radius(m, spec.N, mass, horizon);
        const double R = std::max(grid.R, 1.4 * spread);
        if (R > grid.R) {
            grid = RadialGrid::uniform(spec.N, R, config.grid_n);
            u0 = build_initial_data(local, grid, reference);
        }
    }
    const double norm0 = *std::max_element(u0.begin(), u0.end());
    auto options = dichotomy_solver_options(config, norm0);
    const auto run = evolve(spec, u0, horizon, grid, options);
    outcome.status = to_string(run.status);
    outcome.blowup_time = run.blowup_time_estimate;
    write_run_outputs(run, out_dir);
    emit_plots(run, std::nullopt, out_dir);
    return outcome;
}

DichotomyRow dichotomy_point(const ExperimentConfig& config, double p,
                             const std::optional<BarrierParams>& reference_super,
                             const std::string& out_dir) {
    const auto spec = spec_from_config(config, p);
    const auto classification = classify_regime(spec);

    DichotomyRow row;
    row.p = p;
    row.regime = to_string(classification.regime);

    // Large data: exactly the Sub barrier at t = 0.
    const auto sub = find_blowup_params(spec);
    const double R_large = config.grid_R > 0.0
                               ? config.grid_R
                               : 2.5 * barrier_support_radius(sub, 0.0);
    const RadialGrid grid = RadialGrid::uniform(spec.N, R_large, config.grid_n);
    ExperimentConfig local = config;
    local.u0_kind = InitialDataKind::BarrierSub;
    const auto u0 = build_initial_data(local, grid, sub);
    const double norm0 = *std::max_element(u0.begin(), u0.end());
    auto options = dichotomy_solver_options(config, norm0);
    const auto large_run = evolve(spec, u0, 2.0 * sub.T, grid, options);
    row.large_status = to_string(large_run.status);
    row.blowup_time_large = large_run.blowup_time_estimate;
    write_run_outputs(large_run, out_dir + "/large");
    emit_plots(large_run, sub, out_dir + "/large");

    std::optional<BarrierParams> own_super;
    if (classification.regime == Regime::GlobalSmallData) {
        own_super = find_global_params(spec, config.r0);
    }
    const auto small = small_data_run(config, spec, own_super, reference_super, out_dir + "/small");
    row.small_status = small.status;
    row.blowup_time_small = small.blowup_time;
    row.small_violation = small.violation;
    row.envelope_ratio = small.envelope_ratio;
    return row;
}

} // namespace

Table DichotomyResult::to_table() const {
    Table table({"p", "regime", "small_status", "large_status", "blowup_time_large",
                 "blowup_time_small", "small_violation", "envelope_ratio"});
    for (const auto& row : rows) {
        table.add_row({format_double(row.p), row.regime, row.small_status, row.large_status,
                       format_double(row.blowup_time_large),
                       format_double(row.blowup_time_small),
                       format_double(row.small_violation),
                       format_double(row.envelope_ratio)});
    }
    return table;
}

DichotomyResult run_dichotomy(const ExperimentConfig& config, const std::string& out_dir) {
    if (config.p_values.empty()) throw OutOfRange("dichotomy needs p_values");
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    // Reference small datum: the Super barrier of the smallest p that admits one.
    std::optional<BarrierParams> reference_super;
    for (double p : config.p_values) {
        const auto spec = spec_from_config(config, p);
        if (classify_regime(spec).regime == Regime::GlobalSmallData) {
            reference_super = find_global_params(spec, config.r0);
            break;
        }
    }

    std::vector<std::future<DichotomyRow>> futures;
    futures.reserve(config.p_values.size());
    for (std::size_t i = 0; i < config.p_values.size(); ++i) {
        const double p = config.p_values[i];
        const std::string point_dir = out_dir + "/p_" + format_double(p);
        futures.push_back(std::async(std::launch::async, [=, &config]() {
            return dichotomy_point(config, p, reference_super, point_dir);
        }));
    }

    DichotomyResult result;
    for (auto& future : futures) result.rows.push_back(future.get());
    result.to_table().write_csv(out_dir + "/dichotomy.csv");
    return result;
}

Table ChainRunReport::to_table() const {
    Table table({"link", "value", "detail"});
    table.add_row({"initial(z(.,0)<=u0)", format_double(margin_initial), "conddatiiniziali"});
    table.add_row({"handoff(z(.,t1)>=w_sub(.,0))", format_double(margin_handoff), "condtempot1"});
    table.add_row({"numeric(u(.,t1)>=z(.,t1))", format_double(margin_numeric), "comparison"});
    table.add_row({"status", status, ""});
    table.add_row({"blowup_estimate", format_double(blowup_estimate), ""});
    table.add_row({"deadline(t1+T)", format_double(deadline), within_deadline ? "met" : "missed"});
    return table;
}

ChainRunReport run_chain(const ExperimentConfig& raw_config, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    ExperimentConfig config = raw_config;
    // The chain experiment is about a direct (non-barrier) datum.
    if (config.u0_kind != InitialDataKind::Bump && config.u0_kind != InitialDataKind::Plateau) {
        config.u0_kind = InitialDataKind::Bump;
    }
    const auto spec = spec_from_config(config);

    // Provisional grid to sample the datum and measure its positivity ball.
    RadialGrid probe_grid = RadialGrid::uniform(spec.N, 4.0 * config.u0_radius, config.grid_n);
    auto u0_probe = build_initial_data(config, probe_grid, std::nullopt);
    const double peak = *std::max_element(u0_probe.begin(), u0_probe.end());
    if (!(peak > 0.0)) throw InvalidInitialData("chain experiment requires u0 not== 0");
    const double eps_u = 0.5 * peak;
    const double r0 = measured_half_height_radius(probe_grid, u0_probe, eps_u);

    const auto sub = find_blowup_params(spec);
    ChainOverrides overrides;
    if (config.chain_beta_bar > 0.0) overrides.beta_bar = config.chain_beta_bar;
    if (config.chain_eps0 > 0.0) overrides.eps0 = config.chain_eps0;
    const auto chain = find_chain_params(spec, eps_u, r0, sub, overrides);

    const auto z = chain.chain_barrier();
    BarrierParams handoff_sub = sub;
    handoff_sub.T = chain.T;

    const double deadline = chain.t1 + chain.T;

    ChainRunReport report;
    report.chain = chain;
    report.deadline = deadline;

    // Link 1: z(., 0) <= u0, analytic against the sampled datum.
    report.margin_initial = std::numeric_limits<double>::infinity();
    for (int i = 0; i < probe_grid.n; ++i) {
        const double zi = eval_barrier(z, probe_grid.centers[i], 0.0);
        if (zi > 0.0) {
            report.margin_initial = std::min(report.margin_initial, u0_probe[i] - zi);
        }
    }
    if (!(report.margin_initial > 0.0)) {
        throw LinkViolated("conddatiiniziali fails: z(.,0) exceeds u0");
    }

    // Link 2: z(., t1) >= w_sub(., 0), analytic on a fine radial sweep.
    report.margin_handoff = std::numeric_limits<double>::infinity();
    {
        const double r_max = 1.05 * barrier_support_radius(handoff_sub, 0.0);
        for (int i = 0; i < 4096; ++i) {
            const double r = r_max * (i + 0.5) / 4096;
            const double w0 = eval_barrier(handoff_sub, r, 0.0);
            if (w0 > 0.0) {
                report.margin_handoff =
                    std::min(report.margin_handoff, eval_barrier(z, r, chain.t1) - w0);
            }
        }
    }
    if (!(report.margin_handoff > 0.0)) {
        throw LinkViolated("condtempot1 fails: z(.,t1) does not dominate the Sub barrier");
    }

    // Link 3: v(., t1) >= z(., t1) for the reaction-free flow v from the same
    // datum; the full solution dominates v, which is how the chain reaches u.
    // The full-reaction run typically ignites long before t1, which is the
    // "nothing to prove" branch of the window bound.
    {
        double mass = 0.0;
        for (int i = 0; i < probe_grid.n; ++i) mass += probe_grid.volumes[i] * u0_probe[i];
        double R = config.grid_R > 0.0
                       ? config.grid_R
                       : std::max({2.2 * config.u0_radius,
                                   1.6 * barrier_support_radius(z, chain.t1),
                                   1.3 * barenblatt_front_radius(spec.m, spec.N, mass, chain.t1)});
        RadialSolution diffusion_run;
        for (int attempt = 0; attempt < 3; ++attempt) {
            const RadialGrid grid = RadialGrid::uniform(spec.N, R, config.grid_n);
            const auto u0 = build_initial_data(config, grid, std::nullopt);
            SolverOptions options;
            options.reaction_on = false;
            options.sample_times = std::vector<double>{0.0, chain.t1};
            diffusion_run = evolve(spec, u0, chain.t1, grid, options);
            if (diffusion_run.boundary_guard_ok) break;
            R *= 1.5;
        }
        const RadialGrid& grid = diffusion_run.grid;
        const auto& v_t1 = diffusion_run.profiles.back();
        double z_peak = 0.0;
        for (int i = 0; i < grid.n; ++i) {
            z_peak = std::max(z_peak, eval_barrier(z, grid.centers[i], chain.t1));
        }
        // The outermost cells of a degenerate front are mesh-limited, so the
        // margin is taken over the bulk of supp z.
        report.margin_numeric = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid.n; ++i) {
            const double zi = eval_barrier(z, grid.centers[i], chain.t1);
            if (zi > 1e-3 * z_peak) {
                report.margin_numeric = std::min(report.margin_numeric, v_t1[i] - zi);
            }
        }
        write_run_outputs(diffusion_run, out_dir + "/diffusion");
        emit_plots(diffusion_run, z, out_dir + "/diffusion");
    }
    if (!(report.margin_numeric > 0.0)) {
        throw LinkViolated("numeric comparison fails: reaction-free u(.,t1) below z(.,t1)");
    }

    // Full-reaction run: blow-up must land inside the (0, t1 + T] window.
    const double horizon = config.horizon > 0.0 ? config.horizon : 1.05 * deadline;
    double R = config.grid_R > 0.0
                   ? config.grid_R
                   : std::max(2.2 * config.u0_radius,
                              1.6 * barrier_support_radius(handoff_sub, 0.0));
    RadialSolution run;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const RadialGrid grid = RadialGrid::uniform(spec.N, R, config.grid_n);
        const auto u0 = build_initial_data(config, grid, std::nullopt);
        SolverOptions options;
        if (config.M_blow > 0.0) options.M_blow = config.M_blow;
        run = evolve(spec, u0, horizon, grid, options);
        if (run.boundary_guard_ok || run.status == RunStatus::BlewUp) break;
        R *= 1.5; // support reached the guard band; enlarge and rerun
    }

    report.status = to_string(run.status);
    report.blowup_estimate = run.blowup_time_estimate;
    report.within_deadline =
        run.status == RunStatus::BlewUp && run.blowup_time_estimate <= deadline * (1.0 + 1e-9);

    write_run_outputs(run, out_dir);
    emit_plots(run, handoff_sub, out_dir);
    report.to_table().write_csv(out_dir + "/chain_links.csv");
    std::ofstream conditions_file(out_dir + "/chain_conditions.csv");
    conditions_file << check_chain_conditions(chain, spec).to_csv();
    return report;
}

RadialSolution run_simulate(const ExperimentConfig& config, const std::string& out_dir) {
    const auto spec = spec_from_config(config);

    std::optional<BarrierParams> barrier;
    if (config.u0_kind == InitialDataKind::BarrierSub) {
        barrier = find_blowup_params(spec);
    } else if (config.u0_kind == InitialDataKind::BarrierSuperFraction) {
        barrier = find_global_params(spec, config.r0);
    }

    double horizon = config.horizon;
    if (horizon <= 0.0) {
        if (barrier && barrier->family == BarrierFamily::Sub) horizon = 2.0 * barrier->T;
        else if (barrier) horizon = 10.0 * barrier->T;
        else horizon = 1.0;
    }

    double R = config.grid_R;
    if (R <= 0.0) {
        if (barrier && barrier->family == BarrierFamily::Sub) {
            R = 2.5 * barrier_support_radius(*barrier, 0.0);
        } else if (barrier) {
            R = 1.6 * barrier_support_radius(*barrier, horizon);
        } else {
            R = 4.0 * config.u0_radius;
        }
    }
    const RadialGrid grid = RadialGrid::uniform(spec.N, R, config.grid_n);
    const auto u0 = build_initial_data(config, grid, barrier);

    SolverOptions options;
    if (config.M_blow > 0.0) options.M_blow = config.M_blow;
    const auto run = evolve(spec, u0, horizon, grid, options);
    write_run_outputs(run, out_dir);
    emit_plots(run, barrier, out_dir);
    return run;
}

} // namespace pmb
