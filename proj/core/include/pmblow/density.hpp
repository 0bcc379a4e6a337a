#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pmblow/errors.hpp"
#include "pmblow/report.hpp"

namespace pmb {

enum class DensityKind { PowerTail, ShiftedPower, Constant, Custom };

std::string to_string(DensityKind kind);
DensityKind density_kind_from_string(const std::string& name);

/// Radial density rho(r) together with the constants certifying the
/// two-sided bounds  k1 r^q <= 1/rho <= k2 r^q  (r >= 1)  and
/// rho1 <= 1/rho <= rho2  (r <= 1).  Immutable after construction.
struct DensityModel {
    DensityKind kind = DensityKind::Constant;
    double q = 0.0;
    double k1 = 1.0;
    double k2 = 1.0;
    double rho1 = 1.0;
    double rho2 = 1.0;
    std::function<double(double)> custom; // rho(r), Custom only

    /// rho = 1 on the unit ball, r^{-q} outside; continuous at r = 1 and
    /// matching the bounds with k1 = k2 = rho1 = rho2 = 1.
    static DensityModel power_tail(double q);
    /// rho = (1+r)^{-q}; certified with k1 = 1, k2 = 2^q.
    static DensityModel shifted_power(double q);
    static DensityModel constant();
    static DensityModel custom_model(std::function<double(double)> rho, double q,
                                     double k1, double k2, double rho1, double rho2);

    double operator()(double r) const;
};

double eval_density(const DensityModel& model, double r);

struct ProbeSet {
    std::vector<double> radii;

    /// 512 log-spaced radii in [1e-3, 1e3] plus the matching radius r = 1
    /// approached from both sides.
    static ProbeSet defaults();
    static ProbeSet log_spaced(double r_min, double r_max, int count);
};

/// Sweeps the probe radii and reports min/max of rho(r) r^q on the tail
/// against [1/k2, 1/k1] and of 1/rho on the unit ball against [rho1, rho2].
ConditionReport certify_bounds(const DensityModel& model, const ProbeSet& probes);

} // namespace pmb
