#pragma once

#include <optional>
#include <vector>

#include "pmblow/barriers.hpp"
#include "pmblow/exponents.hpp"

namespace pmb {

/// Uniform finite-volume mesh on [0, R]: faces j*dr, cell volumes
/// proportional to the shell integral of r^{N-1}.
struct RadialGrid {
    int N = 3;
    double R = 1.0;
    int n = 100;
    std::vector<double> faces;      // n+1
    std::vector<double> centers;    // n
    std::vector<double> face_areas; // n+1, r^{N-1}
    std::vector<double> volumes;    // n

    static RadialGrid uniform(int N, double R, int n);
    double dr() const { return R / n; }
};

enum class RunStatus { Completed, BlewUp, StepFloor };

std::string to_string(RunStatus status);

struct Event {
    enum class Kind { BlowUp, SupportRadius, MassRecord, BoundaryGuard };
    Kind kind;
    double time;
    double value;
};

std::string to_string(Event::Kind kind);

struct RadialSolution {
    RadialGrid grid;
    std::vector<double> times;
    std::vector<std::vector<double>> profiles; // one per sample time
    std::vector<double> sup_norms;
    std::vector<double> masses;         // sum rho_i V_i u_i
    std::vector<double> support_radii;
    std::vector<Event> events;
    RunStatus status = RunStatus::Completed;
    double blowup_time_estimate = 0.0; // NaN unless the run blew up
    bool boundary_guard_ok = true;     // support stayed out of the last 10% of cells
};

struct SolverOptions {
    double c_cfl = 0.4;
    double c_rk = 0.1;
    double diff_floor = 1e-30;
    double dt_min = 1e-12;
    std::optional<double> M_blow;      // default 1e6 * max(1, |u0|_inf)
    bool reaction_on = true;
    int n_samples = 41;
    std::optional<std::vector<double>> sample_times;
    double guard_fraction = 0.1;
    // A dt-floor stop with this much sup-norm growth still counts as blow-up;
    // the explicit reaction bound alone cannot reach M_blow for large p.
    double blowup_growth_factor = 1e3;
};

/// Explicit conservative update owning its mutable state; one instance per run.
class RadialSolver {
  public:
    RadialSolver(const ProblemSpec& spec, RadialGrid grid, SolverOptions options = {});

    void set_state(std::vector<double> u0, double t0 = 0.0);

    /// min of the degenerate-diffusion CFL bound and the reaction bound.
    double stable_dt() const;

    /// One conservative forward-Euler update; throws StabilityViolation when
    /// dt exceeds the stability bound.
    void step(double dt);

    double time() const { return t_; }
    const std::vector<double>& u() const { return u_; }
    const RadialGrid& grid() const { return grid_; }
    double sup_norm() const;
    double weighted_mass() const;
    double support_radius() const;
    bool support_in_guard_band() const;

  private:
    ProblemSpec spec_;
    RadialGrid grid_;
    SolverOptions options_;
    std::vector<double> rho_;
    std::vector<double> u_;
    mutable std::vector<double> w_;
    double t_ = 0.0;
    double support_floor_ = 1e-12;

    friend RadialSolution evolve(const ProblemSpec&, const std::vector<double>&, double,
                                 const RadialGrid&, const SolverOptions&);
};

RadialSolution evolve(const ProblemSpec& spec, const std::vector<double>& u0, double horizon,
                      const RadialGrid& grid, const SolverOptions& options = {});

/// Spatially flat supersolution  |u0|_inf / (1 - (p-1) t |u0|_inf^{p-1})^{1/(p-1)}.
double ode_supersolution(double t, double norm0, double p);
/// Its blow-up time 1/((p-1) |u0|_inf^{p-1}).
double ode_blowup_time(double norm0, double p);

struct SweepResult {
    std::vector<double> radii;
    std::vector<RadialSolution> runs;
    double max_monotonicity_violation = 0.0; // max over pairs of u_small - u_large
    double cauchy_difference = 0.0;          // two largest radii, final sample
};

/// Dirichlet problems on expanding balls driven in lockstep (shared dt), so
/// the minimal-solution monotonicity is visible at roundoff level.
SweepResult minimal_solution_sweep(const ProblemSpec& spec, const std::vector<double>& u0_largest,
                                   const std::vector<double>& radii, double horizon, double dr,
                                   SolverOptions options = {});

enum class ComparisonDirection { Below, Above };

struct ComparisonResult {
    double max_violation = 0.0;
    double worst_time = 0.0;
    double worst_radius = 0.0;
    bool pass = false;
};

/// Max over samples/nodes of (u - barrier) for Below, (barrier - u) for
/// Above; throws OrderingViolatedAtStart when the t = 0 ordering fails.
ComparisonResult comparison_test(const RadialSolution& numeric, const BarrierParams& barrier,
                                 ComparisonDirection direction, double tol_cmp);

} // namespace pmb
