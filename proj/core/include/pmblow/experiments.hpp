#pragma once

#include <optional>
#include <string>

#include "pmblow/config.hpp"
#include "pmblow/conditions.hpp"
#include "pmblow/residual.hpp"
#include "pmblow/solver.hpp"
#include "pmblow/table.hpp"

namespace pmb {

ProblemSpec spec_from_config(const ExperimentConfig& config,
                             std::optional<double> p_override = std::nullopt);

/// Sample the configured initial datum on the grid; barrier kinds evaluate
/// the supplied parameters at t = 0.
std::vector<double> build_initial_data(const ExperimentConfig& config, const RadialGrid& grid,
                                       const std::optional<BarrierParams>& barrier);

/// Self-similar front radius of the reaction-free constant-density problem,
/// used only to size simulation domains.
double barenblatt_front_radius(double m, int N, double mass, double t);

void write_run_outputs(const RadialSolution& run, const std::string& out_dir);

/// Sup-norm (log scale), support radius with the barrier free boundary
/// overlaid, and profile snapshots; throws MissingData on an empty run.
void emit_plots(const RadialSolution& run, const std::optional<BarrierParams>& overlay,
                const std::string& out_dir);

/// Free-boundary radius of a barrier at time t (edge of its support set).
double barrier_support_radius(const BarrierParams& params, double t);

RadialSolution run_simulate(const ExperimentConfig& config, const std::string& out_dir);

struct DichotomyRow {
    double p = 0.0;
    std::string regime;
    std::string small_status;
    std::string large_status;
    double blowup_time_large = 0.0;
    double blowup_time_small = 0.0;
    double small_violation = 0.0;  // max (u - super barrier), NaN when no barrier
    double envelope_ratio = 0.0;   // max sup / (C (T+t)^-alpha), NaN when no barrier
};

struct DichotomyResult {
    std::vector<DichotomyRow> rows;
    Table to_table() const;
};

/// Small-data and large-data runs across the configured p values; points run
/// concurrently, each in its own output subdirectory.
DichotomyResult run_dichotomy(const ExperimentConfig& config, const std::string& out_dir);

struct ChainRunReport {
    ChainParams chain;
    double margin_initial = 0.0;  // min u0 - z(.,0)
    double margin_handoff = 0.0;  // min z(.,t1) - w_sub(.,0)
    double margin_numeric = 0.0;  // min u(.,t1) - z(.,t1) over the bulk of supp z
    std::string status;
    double blowup_estimate = 0.0;
    double deadline = 0.0; // t1 + T
    bool within_deadline = false;
    Table to_table() const;
};

/// Builds the chaining subsolution, verifies the three handoff inequalities
/// numerically and confirms blow-up within t1 + T.  Throws LinkViolated with
/// the failing inequality named.
ChainRunReport run_chain(const ExperimentConfig& config, const std::string& out_dir);

} // namespace pmb
