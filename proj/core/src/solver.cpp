#include "pmblow/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmb {

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Completed: return "completed";
        case RunStatus::BlewUp: return "blew_up";
        case RunStatus::StepFloor: return "step_floor";
    }
    return "completed";
}

std::string to_string(Event::Kind kind) {
    switch (kind) {
        case Event::Kind::BlowUp: return "blow_up";
        case Event::Kind::SupportRadius: return "support_radius";
        case Event::Kind::MassRecord: return "mass_record";
        case Event::Kind::BoundaryGuard: return "boundary_guard";
    }
    return "mass_record";
}

RadialGrid RadialGrid::uniform(int N, double R, int n) {
    if (N < 1 || n < 2 || !(R > 0.0)) throw OutOfRange("invalid radial grid parameters");
    RadialGrid grid;
    grid.N = N;
    grid.R = R;
    grid.n = n;
    const double dr = R / n;
    grid.faces.resize(n + 1);
    grid.face_areas.resize(n + 1);
    grid.centers.resize(n);
    grid.volumes.resize(n);
    for (int j = 0; j <= n; ++j) {
        grid.faces[j] = j * dr;
        grid.face_areas[j] = std::pow(grid.faces[j], N - 1);
    }
    for (int i = 0; i < n; ++i) {
        grid.centers[i] = (grid.faces[i] + grid.faces[i + 1]) / 2.0;
        grid.volumes[i] =
            (std::pow(grid.faces[i + 1], N) - std::pow(grid.faces[i], N)) / N;
    }
    return grid;
}

RadialSolver::RadialSolver(const ProblemSpec& spec, RadialGrid grid, SolverOptions options)
    : spec_(spec), grid_(std::move(grid)), options_(options) {
    rho_.resize(grid_.n);
    for (int i = 0; i < grid_.n; ++i) rho_[i] = eval_density(spec_.density, grid_.centers[i]);
    u_.assign(grid_.n, 0.0);
    w_.assign(grid_.n, 0.0);
}

void RadialSolver::set_state(std::vector<double> u0, double t0) {
    if (static_cast<int>(u0.size()) != grid_.n) throw OutOfRange("state size mismatch");
    for (double v : u0) {
        if (v < 0.0 || !std::isfinite(v)) throw InvalidInitialData("initial data must be finite and >= 0");
    }
    u_ = std::move(u0);
    t_ = t0;
    support_floor_ = 1e-12 * std::max(1.0, sup_norm());
}

double RadialSolver::sup_norm() const {
    double s = 0.0;
    for (double v : u_) s = std::max(s, v);
    return s;
}

double RadialSolver::weighted_mass() const {
    double mass = 0.0;
    for (int i = 0; i < grid_.n; ++i) mass += rho_[i] * grid_.volumes[i] * u_[i];
    return mass;
}

double RadialSolver::support_radius() const {
    for (int i = grid_.n - 1; i >= 0; --i) {
        if (u_[i] > support_floor_) return grid_.faces[i + 1];
    }
    return 0.0;
}

bool RadialSolver::support_in_guard_band() const {
    const int guard_start =
        grid_.n - std::max(1, static_cast<int>(options_.guard_fraction * grid_.n));
    for (int i = guard_start; i < grid_.n; ++i) {
        if (u_[i] > support_floor_) return true;
    }
    return false;
}

double RadialSolver::stable_dt() const {
    double max_u = sup_norm();
    double min_rho = *std::min_element(rho_.begin(), rho_.end());
    const double dr = grid_.dr();
    const double diff_bound = options_.c_cfl * min_rho * dr * dr /
                              (2.0 * grid_.N * spec_.m * std::pow(max_u, spec_.m - 1.0) +
                               options_.diff_floor);
    if (!options_.reaction_on) return diff_bound;
    const double rk_bound =
        options_.c_rk / (spec_.p * std::pow(max_u, spec_.p - 1.0) + options_.diff_floor);
    return std::min(diff_bound, rk_bound);
}

void RadialSolver::step(double dt) {
    if (dt > stable_dt() * (1.0 + 1e-9)) {
        throw StabilityViolation("dt exceeds the stability bound");
    }
    const int n = grid_.n;
    const double dr = grid_.dr();
    for (int i = 0; i < n; ++i) w_[i] = std::pow(u_[i], spec_.m);

    // face_areas[0] = 0 gives the zero-flux symmetry condition at r = 0;
    // the Dirichlet ghost value at r = R is identically 0.
    double flux_in = 0.0; // A_{i-1/2} (w_i - w_{i-1})/dr, taken from the previous iteration
    for (int i = 0; i < n; ++i) {
        const double w_right = i + 1 < n ? w_[i + 1] : 0.0;
        const double flux_out = grid_.face_areas[i + 1] * (w_right - w_[i]) / dr;
        double du = (flux_out - flux_in) / (rho_[i] * grid_.volumes[i]);
        if (options_.reaction_on) du += std::pow(u_[i], spec_.p);
        flux_in = flux_out;
        w_[i] = u_[i] + dt * du; // reuse w_ as the update buffer
    }
    std::swap(u_, w_);
    t_ += dt;
}

namespace {

std::vector<double> default_sample_times(double horizon, int n_samples) {
    std::vector<double> times;
    times.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        times.push_back(horizon * k / (n_samples - 1));
    }
    return times;
}

// Linear extrapolation of |u|^{-(p-1)} to zero from the recent history.
double extrapolate_blowup_time(const std::vector<std::pair<double, double>>& history, double p) {
    if (history.size() < 2) return history.empty() ? 0.0 : history.back().first;
    const auto& [t1, s1] = history[history.size() / 2];
    const auto& [t2, s2] = history.back();
    const double y1 = std::pow(s1, -(p - 1.0));
    const double y2 = std::pow(s2, -(p - 1.0));
    if (!(y1 > y2)) return t2;
    return t2 + y2 * (t2 - t1) / (y1 - y2);
}

} // namespace

RadialSolution evolve(const ProblemSpec& spec, const std::vector<double>& u0, double horizon,
                      const RadialGrid& grid, const SolverOptions& options) {
    RadialSolver solver(spec, grid, options);
    solver.set_state(u0);

    RadialSolution out;
    out.grid = grid;
    out.blowup_time_estimate = std::numeric_limits<double>::quiet_NaN();

    const double norm0 = solver.sup_norm();
    const double M_blow = options.M_blow.value_or(1e6 * std::max(1.0, norm0));
    const double growth_mark = options.blowup_growth_factor * std::max(1.0, norm0);

    std::vector<double> samples =
        options.sample_times.value_or(default_sample_times(horizon, options.n_samples));
    std::sort(samples.begin(), samples.end());

    auto record = [&](double t) {
        out.times.push_back(t);
        out.profiles.push_back(solver.u());
        out.sup_norms.push_back(solver.sup_norm());
        out.masses.push_back(solver.weighted_mass());
        out.support_radii.push_back(solver.support_radius());
    };

    std::vector<std::pair<double, double>> history;
    history.reserve(128);
    auto track = [&](double t, double s) {
        if (history.size() >= 128) history.erase(history.begin(), history.begin() + 64);
        history.emplace_back(t, s);
    };
    track(0.0, norm0);

    std::size_t next_sample = 0;
    while (next_sample < samples.size() && samples[next_sample] <= 0.0) {
        record(0.0);
        ++next_sample;
    }

    bool guard_reported = false;
    out.status = RunStatus::Completed;
    while (solver.time() < horizon) {
        double dt = solver.stable_dt();
        if (dt < options.dt_min) {
            const bool grew = options.reaction_on && solver.sup_norm() >= growth_mark;
            out.status = grew ? RunStatus::BlewUp : RunStatus::StepFloor;
            break;
        }
        bool on_sample = false;
        if (next_sample < samples.size() && solver.time() + dt >= samples[next_sample]) {
            dt = samples[next_sample] - solver.time();
            on_sample = true;
        } else if (solver.time() + dt > horizon) {
            dt = horizon - solver.time();
        }
        if (dt > 0.0) solver.step(dt);
        track(solver.time(), solver.sup_norm());
        if (on_sample) {
            record(solver.time());
            ++next_sample;
        }
        if (!guard_reported && solver.support_in_guard_band()) {
            guard_reported = true;
            out.boundary_guard_ok = false;
            out.events.push_back(
                {Event::Kind::BoundaryGuard, solver.time(), solver.support_radius()});
        }
        if (solver.sup_norm() >= M_blow) {
            out.status = RunStatus::BlewUp;
            break;
        }
        if (dt <= 0.0) break; // horizon hit exactly
    }

    if (out.times.empty() || out.times.back() < solver.time()) record(solver.time());
    if (out.status == RunStatus::BlewUp) {
        out.blowup_time_estimate = extrapolate_blowup_time(history, spec.p);
        out.events.push_back({Event::Kind::BlowUp, out.blowup_time_estimate, solver.sup_norm()});
    }
    out.events.push_back({Event::Kind::SupportRadius, solver.time(), solver.support_radius()});
    out.events.push_back({Event::Kind::MassRecord, solver.time(), solver.weighted_mass()});
    return out;
}

double ode_blowup_time(double norm0, double p) {
    return 1.0 / ((p - 1.0) * std::pow(norm0, p - 1.0));
}

double ode_supersolution(double t, double norm0, double p) {
    if (t >= ode_blowup_time(norm0, p)) {
        throw DomainError("ode_supersolution evaluated at or beyond its blow-up time");
    }
    const double denom = 1.0 - (p - 1.0) * t * std::pow(norm0, p - 1.0);
    return norm0 / std::pow(denom, 1.0 / (p - 1.0));
}

SweepResult minimal_solution_sweep(const ProblemSpec& spec, const std::vector<double>& u0_largest,
                                   const std::vector<double>& radii, double horizon, double dr,
                                   SolverOptions options) {
    if (radii.size() < 2) throw OutOfRange("sweep needs at least two radii");
    SweepResult result;
    result.radii = radii;

    std::vector<RadialSolver> solvers;
    std::vector<RadialSolution> runs(radii.size());
    for (std::size_t j = 0; j < radii.size(); ++j) {
        const int n = static_cast<int>(std::lround(radii[j] / dr));
        RadialGrid grid = RadialGrid::uniform(spec.N, n * dr, n);
        runs[j].grid = grid;
        solvers.emplace_back(spec, grid, options);
        std::vector<double> u0(n, 0.0);
        for (int i = 0; i < n && i < static_cast<int>(u0_largest.size()); ++i) {
            u0[i] = u0_largest[i];
        }
        solvers[j].set_state(std::move(u0));
    }

    const auto samples = default_sample_times(horizon, options.n_samples);
    auto record_all = [&]() {
        for (std::size_t j = 0; j < solvers.size(); ++j) {
            runs[j].times.push_back(solvers[j].time());
            runs[j].profiles.push_back(solvers[j].u());
            runs[j].sup_norms.push_back(solvers[j].sup_norm());
            runs[j].masses.push_back(solvers[j].weighted_mass());
            runs[j].support_radii.push_back(solvers[j].support_radius());
        }
    };
    record_all();

    std::size_t next_sample = 1; // samples[0] == 0 already recorded
    double t = 0.0;
    while (t < horizon) {
        double dt = std::numeric_limits<double>::infinity();
        for (const auto& solver : solvers) dt = std::min(dt, solver.stable_dt());
        if (dt < options.dt_min) break;
        bool on_sample = false;
        if (next_sample < samples.size() && t + dt >= samples[next_sample]) {
            dt = samples[next_sample] - t;
            on_sample = true;
        }
        for (auto& solver : solvers) solver.step(dt);
        t += dt;
        if (on_sample) {
            record_all();
            ++next_sample;
        }
    }

    for (std::size_t j = 0; j + 1 < solvers.size(); ++j) {
        const int n_common = runs[j].grid.n;
        for (std::size_t k = 0; k < runs[j].times.size(); ++k) {
            for (int i = 0; i < n_common; ++i) {
                result.max_monotonicity_violation =
                    std::max(result.max_monotonicity_violation,
                             runs[j].profiles[k][i] - runs[j + 1].profiles[k][i]);
            }
        }
    }
    const std::size_t last = solvers.size() - 1;
    const int n_common = runs[last - 1].grid.n;
    for (int i = 0; i < n_common; ++i) {
        result.cauchy_difference =
            std::max(result.cauchy_difference,
                     std::abs(runs[last].profiles.back()[i] - runs[last - 1].profiles.back()[i]));
    }
    result.runs = std::move(runs);
    return result;
}

ComparisonResult comparison_test(const RadialSolution& numeric, const BarrierParams& barrier,
                                 ComparisonDirection direction, double tol_cmp) {
    ComparisonResult result;
    result.max_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < numeric.times.size(); ++k) {
        const double t = numeric.times[k];
        if (barrier.family == BarrierFamily::Sub && t >= barrier.T) break;
        double worst = -std::numeric_limits<double>::infinity();
        double worst_r = 0.0;
        for (int i = 0; i < numeric.grid.n; ++i) {
            const double r = numeric.grid.centers[i];
            const double B = eval_barrier(barrier, r, t);
            const double u = numeric.profiles[k][i];
            const double violation = direction == ComparisonDirection::Below ? u - B : B - u;
            if (violation > worst) {
                worst = violation;
                worst_r = r;
            }
        }
        if (k == 0 && worst > tol_cmp) {
            throw OrderingViolatedAtStart("ordering violated at t=0 by " + std::to_string(worst));
        }
        if (worst > result.max_violation) {
            result.max_violation = worst;
            result.worst_time = t;
            result.worst_radius = worst_r;
        }
    }
    result.pass = result.max_violation <= tol_cmp;
    return result;
}

} // namespace pmb
