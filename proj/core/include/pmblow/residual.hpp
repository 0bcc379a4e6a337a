#pragma once

#include <optional>
#include <vector>

#include "pmblow/conditions.hpp"

namespace pmb {

enum class RegionTag { D1, D2, OutsideSupport };

std::string to_string(RegionTag tag);

struct ResidualNode {
    double r = 0.0;
    double t = 0.0;
    double residual = 0.0; // u_t - (1/rho) Lap(u^m) - u^p, reaction dropped for Chain
    double scale = 1.0;    // sum of the absolute values of the additive terms
    RegionTag region = RegionTag::OutsideSupport;

    double relative() const { return residual / scale; }
};

/// Residual of a barrier over a radius/time grid, from the exact closed-form
/// derivatives (never finite differences).
struct ResidualField {
    std::vector<double> radii;
    std::vector<double> times;
    std::vector<ResidualNode> nodes;
    double min_relative = 0.0;
    double max_relative = 0.0;
    ResidualNode worst_min;
    ResidualNode worst_max;
};

struct ResidualGrid {
    std::vector<double> radii;
    std::vector<double> times;
};

/// Log-spaced radii from 1e-3 to 1.2x the largest free-boundary radius over
/// the probed window, with both one-sided limits at r = 1; times over
/// [0, t_end] with the family default t_end = 10T (Super/Chain) or T/2 (Sub).
ResidualGrid make_residual_grid(const BarrierParams& params, int nr = 200, int nt = 200,
                                std::optional<double> t_end = std::nullopt);

inline constexpr double residual_tol_rel = 1e-9;

ResidualField residual_super(const BarrierParams& params, const ProblemSpec& spec,
                             const ResidualGrid& grid, double r0 = 1.0);
ResidualField residual_sub(const BarrierParams& params, const ProblemSpec& spec,
                           const ResidualGrid& grid);
ResidualField residual_chain(const ChainParams& chain, const ProblemSpec& spec,
                             const ResidualGrid& grid);

/// Value continuity and the one-sided flux relation at r = 1: equality for
/// Super/Chain, outer >= inner for Sub (difference exactly 0 at b = 2).
struct GluingReport {
    double max_value_gap_rel = 0.0;
    double max_flux_gap_rel = 0.0;  // |inner-outer| for equality families
    double min_flux_excess = 0.0;   // outer - inner for Sub
    bool equality_family = true;
    bool pass = false;
};

GluingReport verify_gluing(const BarrierParams& params, int nt = 64);

/// Endpoint system of the reduced scalar inequality phi(F) = sigma F - delta
/// - gamma F^{(p+m-2)/(m-1)}: positivity at both ends for Super, maximum
/// nonpositive with F0 <= 1 for Sub, the linear sigma <= delta form for Chain.
/// Each entry is the worst case over the probed times; cross-checked against
/// a dense grid extremum of phi.
ConditionReport phi_endpoint_check(const BarrierParams& params, const ProblemSpec& spec,
                                   const std::vector<double>& time_probes);

std::vector<double> default_time_probes(const BarrierParams& params, int count = 32);

} // namespace pmb
